//! Core data model for relational data encoded as graphs, simplicial
//! complexes, or hypergraphs, together with the conversions between the
//! three formalisms and the metrics specific to each.
//!
//! The crate is `no_std` (with `alloc`); file formats, parsing, and the
//! command-line front end live in the companion `relform` crate.
//!
//! The three formalisms share a node universe of dense integer ids
//! ([`NodeId`]) and a common building block, the [`Relation`]: a nonempty,
//! strictly ascending set of node ids. A [`Graph`] keeps only dyadic
//! relations, a [`SimplicialComplex`] stores the antichain of inclusion
//! maximal relations (downward closure is implicit), and a [`Hypergraph`]
//! stores an indexed multiset of relations where duplicates are allowed
//! and meaningful.
//!
//! All values are immutable after construction and deterministic:
//! identical inputs produce identical stored orderings.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod concurrence;
mod error;
mod graph;
mod hypergraph;
mod label;
mod relation;
mod simplicial;

pub mod convert;
pub mod hon;
pub mod metrics;

pub use concurrence::ConcurrenceMatrix;
pub use error::Error;
pub use graph::Graph;
pub use hypergraph::Hypergraph;
pub use label::{LabelMap, NodeId};
pub use relation::Relation;
pub use simplicial::SimplicialComplex;

pub type Result<T> = core::result::Result<T, Error>;
