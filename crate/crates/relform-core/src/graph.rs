use alloc::vec::Vec;

use crate::{Error, NodeId, Relation, Result};

/// Undirected simple graph over dense node ids with sorted adjacency lists.
///
/// No self-loops, no multi-edges; adjacency is symmetric by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: u32,
    adjacency: Vec<Vec<NodeId>>,
}

impl Graph {
    /// An edgeless graph on `n` nodes.
    pub fn edgeless(n: u32) -> Self {
        Graph {
            n,
            adjacency: alloc::vec![Vec::new(); n as usize],
        }
    }

    /// Builds a graph from dyadic relations. Duplicate pairs collapse into
    /// a single edge. A relation of cardinality other than 2 is rejected
    /// with the offending row index.
    pub fn from_relations(n: u32, rels: &[Relation]) -> Result<Self> {
        let mut pairs = Vec::with_capacity(rels.len());
        for (row, rel) in rels.iter().enumerate() {
            if rel.cardinality() != 2 {
                return Err(Error::NotDyadic {
                    row,
                    cardinality: rel.cardinality(),
                });
            }
            rel.check_bounds(n)?;
            pairs.push((rel.members()[0], rel.members()[1]));
        }
        Ok(Self::from_edge_list(n, pairs))
    }

    /// Bulk constructor from unordered node pairs already known to be in
    /// bounds. Self-loops and duplicates are dropped.
    pub(crate) fn from_edge_list(n: u32, pairs: Vec<(NodeId, NodeId)>) -> Self {
        let mut directed = Vec::with_capacity(pairs.len() * 2);
        for (u, v) in pairs {
            if u == v {
                continue;
            }
            directed.push((u, v));
            directed.push((v, u));
        }
        directed.sort_unstable();
        directed.dedup();
        let mut adjacency = alloc::vec![Vec::new(); n as usize];
        for (u, v) in directed {
            adjacency[u.index()].push(v);
        }
        Graph { n, adjacency }
    }

    pub fn node_count(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: NodeId) -> Result<&[NodeId]> {
        self.adjacency
            .get(v.index())
            .map(Vec::as_slice)
            .ok_or(Error::NodeOutOfBounds { node: v.0, n: self.n })
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.adjacency
            .get(u.index())
            .map(|adj| adj.binary_search(&v).is_ok())
            .unwrap_or(false)
    }

    /// Edges as ordered pairs (u, v) with u < v, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, adj)| {
            let u = NodeId(u as u32);
            adj.iter().copied().filter_map(move |v| (u < v).then_some((u, v)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rel(ids: &[u32]) -> Relation {
        Relation::from_members(ids.iter().map(|&i| NodeId(i)).collect()).unwrap()
    }

    // the 4-author toy: pairs extracted from papers p1..p4
    pub(crate) fn toy_graph() -> Graph {
        let rels = [
            rel(&[0, 1]),
            rel(&[1, 3]),
            rel(&[0, 2]),
            rel(&[1, 2]),
            rel(&[2, 3]),
        ];
        Graph::from_relations(4, &rels).unwrap()
    }

    #[test]
    fn toy_degrees() {
        let g = toy_graph();
        let degrees: Vec<usize> = (0..4).map(|v| g.neighbors(NodeId(v)).unwrap().len()).collect();
        assert_eq!(degrees, vec![2, 3, 3, 2]);
        assert_eq!(g.edge_count(), 5);
    }

    #[test]
    fn edgeless() {
        let g = Graph::from_relations(3, &[]).unwrap();
        for v in 0..3 {
            assert!(g.neighbors(NodeId(v)).unwrap().is_empty());
        }
    }

    #[test]
    fn duplicate_edge_collapses() {
        let g = Graph::from_relations(2, &[rel(&[0, 1]), rel(&[0, 1])]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.neighbors(NodeId(0)).unwrap(), &[NodeId(1)]);
        assert_eq!(g.neighbors(NodeId(1)).unwrap(), &[NodeId(0)]);
    }

    #[test]
    fn non_dyadic_rejected() {
        let err = Graph::from_relations(4, &[rel(&[0, 1]), rel(&[0, 1, 2])]).unwrap_err();
        assert_eq!(err, Error::NotDyadic { row: 1, cardinality: 3 });
    }

    #[test]
    fn out_of_bounds_rejected() {
        let err = Graph::from_relations(2, &[rel(&[0, 2])]).unwrap_err();
        assert_eq!(err, Error::NodeOutOfBounds { node: 2, n: 2 });
    }

    #[test]
    fn symmetry() {
        let g = toy_graph();
        for (u, v) in g.edges() {
            assert!(g.has_edge(v, u));
            assert_ne!(u, v);
        }
    }
}
