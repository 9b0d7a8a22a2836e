use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::{Error, NodeId, Relation, Result};

/// Hypergraph as an indexed multiset of hyperedges.
///
/// Each hyperedge arises independently; duplicates are permitted and
/// distinguished by index, since the source experiments treat every
/// observed relation (each email, each paper) as its own hyperedge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: u32,
    hyperedges: Vec<Relation>,
    /// node -> indices into `hyperedges` of the edges containing it
    incident: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph from relations. With `dedup` set, only the
    /// first occurrence of each distinct node set is kept; otherwise
    /// input order and multiplicity are preserved.
    pub fn from_relations(n: u32, rels: &[Relation], dedup: bool) -> Result<Self> {
        for rel in rels {
            rel.check_bounds(n)?;
        }
        let mut hyperedges: Vec<Relation> = Vec::with_capacity(rels.len());
        if dedup {
            let mut seen: BTreeSet<&Relation> = BTreeSet::new();
            for rel in rels {
                if seen.insert(rel) {
                    hyperedges.push(rel.clone());
                }
            }
        } else {
            hyperedges.extend_from_slice(rels);
        }
        let mut incident = alloc::vec![Vec::new(); n as usize];
        for (i, rel) in hyperedges.iter().enumerate() {
            for &v in rel.members() {
                incident[v.index()].push(i);
            }
        }
        Ok(Hypergraph { n, hyperedges, incident })
    }

    pub fn node_count(&self) -> u32 {
        self.n
    }

    pub fn hyperedges(&self) -> &[Relation] {
        &self.hyperedges
    }

    pub fn hyperedge(&self, index: usize) -> Result<&Relation> {
        self.hyperedges.get(index).ok_or(Error::HyperedgeOutOfBounds {
            index,
            len: self.hyperedges.len(),
        })
    }

    /// Indices of the hyperedges containing `v`, multiplicity included.
    pub fn incident_edges(&self, v: NodeId) -> Result<&[usize]> {
        self.incident
            .get(v.index())
            .map(Vec::as_slice)
            .ok_or(Error::NodeOutOfBounds { node: v.0, n: self.n })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(ids: &[u32]) -> Relation {
        Relation::from_members(ids.iter().map(|&i| NodeId(i)).collect()).unwrap()
    }

    // the four toy papers
    pub(crate) fn toy_hg() -> Hypergraph {
        let rels = [rel(&[0, 1]), rel(&[1, 3]), rel(&[0, 1, 2]), rel(&[2, 3])];
        Hypergraph::from_relations(4, &rels, false).unwrap()
    }

    #[test]
    fn toy_preserves_multiset() {
        let hg = toy_hg();
        assert_eq!(hg.hyperedges().len(), 4);
        assert_eq!(hg.hyperedges()[2], rel(&[0, 1, 2]));
    }

    #[test]
    fn dedup_keeps_first() {
        let rels = [rel(&[0, 1]), rel(&[0, 1])];
        let hg = Hypergraph::from_relations(2, &rels, true).unwrap();
        assert_eq!(hg.hyperedges().len(), 1);
        let hg = Hypergraph::from_relations(2, &rels, false).unwrap();
        assert_eq!(hg.hyperedges().len(), 2);
        assert_eq!(hg.incident_edges(NodeId(0)).unwrap(), &[0, 1]);
    }

    #[test]
    fn out_of_bounds_rejected() {
        let err = Hypergraph::from_relations(2, &[rel(&[0, 3])], false).unwrap_err();
        assert_eq!(err, Error::NodeOutOfBounds { node: 3, n: 2 });
    }
}
