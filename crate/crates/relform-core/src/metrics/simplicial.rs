use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::simplicial::for_each_combination;
use crate::{ConcurrenceMatrix, Error, NodeId, Result, SimplicialComplex};

/// Per-dimension participation counts for one node. `counts[d]` is the
/// number of distinct d-simplices (faces of stored maximal simplices)
/// containing the node, so `counts[0]` is 1 iff the node lies in any
/// simplex and `counts[1]` equals its 1-skeleton degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParticipationVector {
    pub counts: Vec<usize>,
}

/// Simplex participation of `v` up to `max_dim`, deduplicating faces
/// across maximal simplices. Errors once the number of distinct faces
/// enumerated exceeds `cap`.
pub fn simplex_participation(
    sc: &SimplicialComplex,
    v: NodeId,
    max_dim: usize,
    cap: usize,
) -> Result<ParticipationVector> {
    let incident = sc.incident_maximal(v)?;
    // for each dimension d, the sets of other members alongside v
    let mut seen: Vec<BTreeSet<Vec<NodeId>>> = alloc::vec![BTreeSet::new(); max_dim + 1];
    let mut total = 0usize;
    for &i in incident {
        let members = sc.maximal()[i].members();
        let others: Vec<NodeId> = members.iter().copied().filter(|&u| u != v).collect();
        for d in 0..=max_dim.min(others.len()) {
            let bucket = &mut seen[d];
            if d == 0 {
                if bucket.insert(Vec::new()) {
                    total += 1;
                }
                continue;
            }
            let mut exceeded = false;
            for_each_combination(&others, d, |combo| {
                if !bucket.contains(combo) {
                    if total >= cap {
                        exceeded = true;
                        return false;
                    }
                    bucket.insert(combo.to_vec());
                    total += 1;
                }
                true
            });
            if exceeded {
                return Err(Error::FaceCapExceeded { cap });
            }
        }
    }
    Ok(ParticipationVector {
        counts: seen.into_iter().map(|s| s.len()).collect(),
    })
}

/// Number of stored maximal simplices containing `v`.
pub fn maximal_simplex_participation(sc: &SimplicialComplex, v: NodeId) -> Result<usize> {
    Ok(sc.incident_maximal(v)?.len())
}

/// The Dowker dual: the complex built from the rows of the transposed
/// concurrence matrix, so nodes and relations swap roles. Its node set is
/// the rows of `m`; its homology matches the original complex.
pub fn dowker_dual(m: &ConcurrenceMatrix) -> Result<SimplicialComplex> {
    let rows = m.transpose_rows();
    if rows.is_empty() {
        return Err(Error::EmptyStructure);
    }
    SimplicialComplex::from_relations(m.row_count() as u32, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Relation;
    use alloc::vec;

    fn rel(ids: &[u32]) -> Relation {
        Relation::from_members(ids.iter().map(|&i| NodeId(i)).collect()).unwrap()
    }

    fn toy_sc() -> SimplicialComplex {
        let rels = [rel(&[0, 1]), rel(&[1, 3]), rel(&[0, 1, 2]), rel(&[2, 3])];
        SimplicialComplex::from_relations(4, &rels).unwrap()
    }

    #[test]
    fn participation_two_triangles() {
        // {a,b,c} and {a,b,d}: from a's view, one vertex, ab/ac/ad, abc/abd
        let sc =
            SimplicialComplex::from_relations(4, &[rel(&[0, 1, 2]), rel(&[0, 1, 3])]).unwrap();
        let p = simplex_participation(&sc, NodeId(0), 2, 20_000).unwrap();
        assert_eq!(p.counts, vec![1, 3, 2]);
    }

    #[test]
    fn participation_toy_a2() {
        let p = simplex_participation(&toy_sc(), NodeId(1), 2, 20_000).unwrap();
        assert_eq!(p.counts, vec![1, 3, 1]);
    }

    #[test]
    fn participation_isolated_node() {
        let sc = SimplicialComplex::from_relations(3, &[rel(&[0, 1])]).unwrap();
        let p = simplex_participation(&sc, NodeId(2), 2, 20_000).unwrap();
        assert_eq!(p.counts, vec![0, 0, 0]);
    }

    #[test]
    fn participation_matches_skeleton_degree() {
        let sc = toy_sc();
        let g = crate::convert::simplicial_to_graph(&sc);
        for v in 0..4 {
            let p = simplex_participation(&sc, NodeId(v), 1, 20_000).unwrap();
            assert_eq!(p.counts[1], g.neighbors(NodeId(v)).unwrap().len());
        }
    }

    #[test]
    fn maximal_participation_counts() {
        let sc = toy_sc();
        assert_eq!(maximal_simplex_participation(&sc, NodeId(1)).unwrap(), 2);
        assert_eq!(maximal_simplex_participation(&sc, NodeId(2)).unwrap(), 2);
        assert_eq!(maximal_simplex_participation(&sc, NodeId(0)).unwrap(), 1);
        let sc = SimplicialComplex::from_relations(2, &[rel(&[0])]).unwrap();
        assert_eq!(maximal_simplex_participation(&sc, NodeId(1)).unwrap(), 0);
    }

    #[test]
    fn dowker_dual_toy() {
        // rows are the four papers; transpose rows are the per-author paper sets
        let rows = vec![rel(&[0, 1]), rel(&[1, 3]), rel(&[0, 1, 2]), rel(&[2, 3])];
        let m = ConcurrenceMatrix::from_rows(4, rows).unwrap();
        let dual = dowker_dual(&m).unwrap();
        assert_eq!(
            dual.maximal(),
            &[rel(&[0, 1, 2]), rel(&[1, 3]), rel(&[2, 3])]
        );
    }

    #[test]
    fn dowker_dual_identity_matrix() {
        let rows: Vec<Relation> = (0..3).map(|i| rel(&[i])).collect();
        let m = ConcurrenceMatrix::from_rows(3, rows).unwrap();
        let dual = dowker_dual(&m).unwrap();
        assert_eq!(dual.maximal(), &[rel(&[0]), rel(&[1]), rel(&[2])]);
    }

    #[test]
    fn dowker_dual_all_ones_row() {
        let m = ConcurrenceMatrix::from_rows(4, vec![rel(&[0, 1, 2, 3])]).unwrap();
        let dual = dowker_dual(&m).unwrap();
        assert_eq!(dual.maximal(), &[rel(&[0])]);
    }
}
