//! Per-formalism metrics: graph degree/clustering/path length, simplex
//! participation and homology (with the Dowker dual), hypergraph
//! overlap/clustering/fill, and Spearman rank correlation.

mod graph;
mod homology;
mod hypergraph;
mod simplicial;
mod spearman;

pub use graph::{average_path_length, graph_clustering, graph_degree};
pub use homology::{betti_numbers, BettiReport};
pub use hypergraph::{
    extra_overlap, fill_coefficient, hyperdegree, hypergraph_clustering,
    hypergraph_clustering_all,
};
pub use simplicial::{
    dowker_dual, maximal_simplex_participation, simplex_participation, ParticipationVector,
};
pub use spearman::{spearman, SpearmanResult};
