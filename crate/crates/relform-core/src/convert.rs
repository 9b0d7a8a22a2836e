//! Conversions between the three formalisms.
//!
//! Moving down the ladder (hypergraph -> simplicial complex -> graph)
//! forgets information: duplicate and dominated hyperedges vanish, then
//! polyadic structure vanishes. Moving up (graph -> clique complex ->
//! hyperedges) adds assumptions instead. The node count is carried
//! through every conversion, so isolated nodes survive.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::simplicial::for_each_combination;
use crate::{Error, Graph, Hypergraph, NodeId, Relation, Result, SimplicialComplex};

/// How to turn a simplicial complex into hyperedges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplicialToHypergraphMode {
    /// One hyperedge per maximal simplex (the conservative reading).
    MaximalOnly,
    /// One hyperedge per distinct face of dimension >= 1 up to
    /// `max_dimension`. Singleton faces are excluded: a hyperedge joins
    /// subsets of nodes, and singletons would distort hyperdegree.
    AllFaces { max_dimension: usize, cap: usize },
}

/// Forgets duplicates and dominated hyperedges, keeping the antichain of
/// maximal hyperedge node sets as maximal simplices.
pub fn hypergraph_to_simplicial(hg: &Hypergraph) -> SimplicialComplex {
    SimplicialComplex::from_relations(hg.node_count(), hg.hyperedges())
        .expect("hyperedges are in bounds by construction")
}

/// Keeps the 1-skeleton: an edge wherever two nodes share a simplex.
pub fn simplicial_to_graph(sc: &SimplicialComplex) -> Graph {
    two_section(sc.node_count(), sc.maximal())
}

/// The 2-section: an edge wherever two nodes share a hyperedge. Equals
/// `simplicial_to_graph(hypergraph_to_simplicial(hg))`.
pub fn hypergraph_to_graph(hg: &Hypergraph) -> Graph {
    two_section(hg.node_count(), hg.hyperedges())
}

fn two_section(n: u32, rels: &[Relation]) -> Graph {
    let mut pairs = Vec::new();
    for rel in rels {
        let members = rel.members();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, pairs)
}

/// Fills every (k+1)-clique with a k-simplex: maximal simplices are the
/// maximal cliques of the graph, enumerated with pivoting. Isolated nodes
/// become singleton simplices. Errors once the number of maximal cliques
/// exceeds `max_clique_cap`.
pub fn graph_to_clique_complex(g: &Graph, max_clique_cap: usize) -> Result<SimplicialComplex> {
    let n = g.node_count();
    let mut out: Vec<Relation> = Vec::new();
    let p: Vec<NodeId> = (0..n).map(NodeId).collect();
    bron_kerbosch(g, &mut Vec::new(), p, Vec::new(), max_clique_cap, &mut out)?;
    Ok(SimplicialComplex::from_antichain(n, out))
}

/// Bron-Kerbosch with pivoting over sorted candidate vectors.
fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<NodeId>,
    p: Vec<NodeId>,
    x: Vec<NodeId>,
    cap: usize,
    out: &mut Vec<Relation>,
) -> Result<()> {
    if p.is_empty() && x.is_empty() {
        if out.len() >= cap {
            return Err(Error::CliqueCapExceeded { cap });
        }
        let mut clique = r.clone();
        clique.sort_unstable();
        out.push(Relation::from_sorted(clique));
        return Ok(());
    }
    // pivot: the vertex of P union X covering the most of P
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&&u| {
            let adj = g.neighbors(u).expect("candidate in bounds");
            intersect_count(&p, adj)
        })
        .copied()
        .expect("P union X nonempty");
    let pivot_adj = g.neighbors(pivot).expect("pivot in bounds");

    let mut p = p;
    let mut x = x;
    let candidates: Vec<NodeId> = p
        .iter()
        .copied()
        .filter(|v| pivot_adj.binary_search(v).is_err())
        .collect();
    for v in candidates {
        let adj = g.neighbors(v).expect("candidate in bounds");
        let next_p = intersect(&p, adj);
        let next_x = intersect(&x, adj);
        r.push(v);
        bron_kerbosch(g, r, next_p, next_x, cap, out)?;
        r.pop();
        p.retain(|&u| u != v);
        let pos = x.binary_search(&v).unwrap_or_else(|e| e);
        x.insert(pos, v);
    }
    Ok(())
}

fn intersect(a: &[NodeId], b: &[NodeId]) -> Vec<NodeId> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn intersect_count(a: &[NodeId], b: &[NodeId]) -> usize {
    let (mut i, mut j, mut count) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                count += 1;
                i += 1;
                j += 1;
            }
        }
    }
    count
}

/// Emits hyperedges from a simplicial complex. `MaximalOnly` emits the
/// maximal simplices in canonical order; `AllFaces` emits every distinct
/// face of dimension 1..=max_dimension, ordered by cardinality then
/// lexicographically.
pub fn simplicial_to_hypergraph(
    sc: &SimplicialComplex,
    mode: SimplicialToHypergraphMode,
) -> Result<Hypergraph> {
    let rels = match mode {
        SimplicialToHypergraphMode::MaximalOnly => sc.maximal().to_vec(),
        SimplicialToHypergraphMode::AllFaces { max_dimension, cap } => {
            let mut faces: BTreeSet<Vec<NodeId>> = BTreeSet::new();
            for rel in sc.maximal() {
                for size in 2..=rel.cardinality().min(max_dimension + 1) {
                    let mut exceeded = false;
                    for_each_combination(rel.members(), size, |combo| {
                        if faces.len() >= cap && !faces.contains(combo) {
                            exceeded = true;
                            return false;
                        }
                        faces.insert(combo.to_vec());
                        true
                    });
                    if exceeded {
                        return Err(Error::FaceCapExceeded { cap });
                    }
                }
            }
            let mut rels: Vec<Relation> =
                faces.into_iter().map(Relation::from_sorted).collect();
            rels.sort_by(|a, b| {
                a.cardinality()
                    .cmp(&b.cardinality())
                    .then_with(|| a.cmp(b))
            });
            rels
        }
    };
    Hypergraph::from_relations(sc.node_count(), &rels, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rel(ids: &[u32]) -> Relation {
        Relation::from_members(ids.iter().map(|&i| NodeId(i)).collect()).unwrap()
    }

    fn toy_hg() -> Hypergraph {
        let rels = [rel(&[0, 1]), rel(&[1, 3]), rel(&[0, 1, 2]), rel(&[2, 3])];
        Hypergraph::from_relations(4, &rels, false).unwrap()
    }

    #[test]
    fn hg_to_sc_forgets_dominated() {
        let sc = hypergraph_to_simplicial(&toy_hg());
        assert_eq!(sc.maximal(), &[rel(&[0, 1, 2]), rel(&[1, 3]), rel(&[2, 3])]);

        let hg = Hypergraph::from_relations(
            3,
            &[rel(&[0, 1]), rel(&[0, 1, 2]), rel(&[0, 1, 2])],
            false,
        )
        .unwrap();
        let sc = hypergraph_to_simplicial(&hg);
        assert_eq!(sc.maximal(), &[rel(&[0, 1, 2])]);
    }

    #[test]
    fn sc_to_graph_toy() {
        let sc = hypergraph_to_simplicial(&toy_hg());
        let g = simplicial_to_graph(&sc);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(
            edges,
            vec![
                (NodeId(0), NodeId(1)),
                (NodeId(0), NodeId(2)),
                (NodeId(1), NodeId(2)),
                (NodeId(1), NodeId(3)),
                (NodeId(2), NodeId(3)),
            ]
        );
    }

    #[test]
    fn singleton_simplex_gives_isolated_node() {
        let sc = SimplicialComplex::from_relations(1, &[rel(&[0])]).unwrap();
        let g = simplicial_to_graph(&sc);
        assert_eq!(g.node_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn clique_complex_toy() {
        let g = hypergraph_to_graph(&toy_hg());
        let sc = graph_to_clique_complex(&g, 1_000_000).unwrap();
        assert_eq!(sc.maximal(), &[rel(&[0, 1, 2]), rel(&[1, 2, 3])]);
    }

    #[test]
    fn clique_complex_triangle_and_path() {
        let tri = Graph::from_relations(3, &[rel(&[0, 1]), rel(&[1, 2]), rel(&[0, 2])]).unwrap();
        let sc = graph_to_clique_complex(&tri, 10).unwrap();
        assert_eq!(sc.maximal(), &[rel(&[0, 1, 2])]);

        let path = Graph::from_relations(3, &[rel(&[0, 1]), rel(&[1, 2])]).unwrap();
        let sc = graph_to_clique_complex(&path, 10).unwrap();
        assert_eq!(sc.maximal(), &[rel(&[0, 1]), rel(&[1, 2])]);
    }

    #[test]
    fn clique_cap_is_an_error() {
        let tri = Graph::from_relations(3, &[rel(&[0, 1]), rel(&[1, 2]), rel(&[0, 2])]).unwrap();
        assert_eq!(
            graph_to_clique_complex(&tri, 0).unwrap_err(),
            Error::CliqueCapExceeded { cap: 0 }
        );
    }

    #[test]
    fn sc_to_hg_modes() {
        let sc = hypergraph_to_simplicial(&toy_hg());
        let hg = simplicial_to_hypergraph(&sc, SimplicialToHypergraphMode::MaximalOnly).unwrap();
        assert_eq!(hg.hyperedges(), &[rel(&[0, 1, 2]), rel(&[1, 3]), rel(&[2, 3])]);
        // three hyperedges: not the original four-paper hypergraph
        assert_ne!(hg.hyperedges().len(), toy_hg().hyperedges().len());

        let sc = SimplicialComplex::from_relations(3, &[rel(&[0, 1, 2])]).unwrap();
        let hg = simplicial_to_hypergraph(
            &sc,
            SimplicialToHypergraphMode::AllFaces { max_dimension: 2, cap: 1000 },
        )
        .unwrap();
        assert_eq!(
            hg.hyperedges(),
            &[rel(&[0, 1]), rel(&[0, 2]), rel(&[1, 2]), rel(&[0, 1, 2])]
        );

        let sc = SimplicialComplex::from_relations(2, &[rel(&[0, 1])]).unwrap();
        let hg = simplicial_to_hypergraph(&sc, SimplicialToHypergraphMode::MaximalOnly).unwrap();
        assert_eq!(hg.hyperedges(), &[rel(&[0, 1])]);
    }

    #[test]
    fn hg_to_graph_matches_via_sc() {
        let hg = toy_hg();
        let direct = hypergraph_to_graph(&hg);
        let via_sc = simplicial_to_graph(&hypergraph_to_simplicial(&hg));
        assert_eq!(direct, via_sc);

        let hg = Hypergraph::from_relations(2, &[rel(&[0]), rel(&[1])], false).unwrap();
        let g = hypergraph_to_graph(&hg);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.node_count(), 2);
    }

    #[test]
    fn graph_round_trip_toy() {
        let g = hypergraph_to_graph(&toy_hg());
        let sc = graph_to_clique_complex(&g, 1_000_000).unwrap();
        let hg = simplicial_to_hypergraph(&sc, SimplicialToHypergraphMode::MaximalOnly).unwrap();
        let back = simplicial_to_graph(&hypergraph_to_simplicial(&hg));
        assert_eq!(back, g);
    }
}
