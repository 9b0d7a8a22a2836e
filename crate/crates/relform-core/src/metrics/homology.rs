use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::{Error, NodeId, Relation, Result, SimplicialComplex};

/// Betti numbers over the two-element field, with the per-dimension face
/// counts and the Euler characteristic they both sum to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiReport {
    /// beta_0..beta_D for the full complex dimension D
    pub betti: Vec<usize>,
    /// distinct k-face counts for k = 0..=D
    pub face_counts: Vec<usize>,
    pub euler: i64,
}

impl BettiReport {
    /// Compares Betti sequences ignoring trailing zeros, for complexes of
    /// different dimension.
    pub fn betti_eq(&self, other: &[usize]) -> bool {
        let len = self.betti.len().max(other.len());
        (0..len).all(|k| {
            self.betti.get(k).copied().unwrap_or(0) == other.get(k).copied().unwrap_or(0)
        })
    }
}

/// Betti numbers of the complex over GF(2): beta_k = dim C_k - rank d_k -
/// rank d_{k+1}, with C_k spanned by the distinct k-faces and d the
/// boundary operator; ranks by Gaussian elimination.
///
/// The whole complex dimension is computed so the Euler identity holds in
/// every report; `max_dim` below the complex dimension is a resource
/// error, as is exceeding `face_cap` distinct faces in total.
pub fn betti_numbers(sc: &SimplicialComplex, max_dim: usize, face_cap: usize) -> Result<BettiReport> {
    let dim = match sc.dimension() {
        Some(d) => d,
        None => {
            return Ok(BettiReport {
                betti: Vec::new(),
                face_counts: Vec::new(),
                euler: 0,
            })
        }
    };
    if dim > max_dim {
        return Err(Error::DimensionCapExceeded { dimension: dim, max_dim });
    }

    // distinct faces per dimension, with an index for boundary columns
    let mut faces: Vec<Vec<Relation>> = Vec::with_capacity(dim + 1);
    let mut budget = face_cap;
    for k in 0..=dim {
        let level = sc
            .k_faces(k, budget)
            .map_err(|_| Error::FaceCapExceeded { cap: face_cap })?;
        budget -= level.len();
        faces.push(level);
    }
    let index: Vec<BTreeMap<&Relation, usize>> = faces
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, f)| (f, i)).collect())
        .collect();

    // rank of d_k for k = 1..=dim; d_0 and d_{dim+1} are zero
    let mut boundary_ranks = alloc::vec![0usize; dim + 2];
    for k in 1..=dim {
        let rows = faces[k - 1].len();
        let cols: Vec<Vec<u64>> = faces[k]
            .iter()
            .map(|face| {
                let mut col = alloc::vec![0u64; rows.div_ceil(64)];
                let members = face.members();
                let mut sub: Vec<NodeId> = Vec::with_capacity(members.len() - 1);
                for skip in 0..members.len() {
                    sub.clear();
                    sub.extend(members.iter().enumerate().filter_map(|(i, &m)| {
                        (i != skip).then_some(m)
                    }));
                    let row = index[k - 1][&Relation::from_sorted(sub.clone())];
                    col[row / 64] ^= 1u64 << (row % 64);
                }
                col
            })
            .collect();
        boundary_ranks[k] = gf2_rank(cols);
    }

    let face_counts: Vec<usize> = faces.iter().map(Vec::len).collect();
    let betti: Vec<usize> = (0..=dim)
        .map(|k| face_counts[k] - boundary_ranks[k] - boundary_ranks[k + 1])
        .collect();
    let euler = face_counts
        .iter()
        .enumerate()
        .map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum();
    Ok(BettiReport { betti, face_counts, euler })
}

/// Rank of a GF(2) matrix given by bit-packed columns.
fn gf2_rank(mut cols: Vec<Vec<u64>>) -> usize {
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    for col in cols.iter_mut() {
        for (pivot_bit, pivot_col) in &pivots {
            if col[pivot_bit / 64] >> (pivot_bit % 64) & 1 == 1 {
                for (w, p) in col.iter_mut().zip(pivot_col.iter()) {
                    *w ^= p;
                }
            }
        }
        if let Some(bit) = first_set_bit(col) {
            pivots.push((bit, col.clone()));
        }
    }
    pivots.len()
}

fn first_set_bit(words: &[u64]) -> Option<usize> {
    words.iter().enumerate().find_map(|(i, &w)| {
        (w != 0).then(|| i * 64 + w.trailing_zeros() as usize)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rel(ids: &[u32]) -> Relation {
        Relation::from_members(ids.iter().map(|&i| NodeId(i)).collect()).unwrap()
    }

    fn sc(n: u32, rels: &[Relation]) -> SimplicialComplex {
        SimplicialComplex::from_relations(n, rels).unwrap()
    }

    #[test]
    fn hollow_triangle() {
        let c = sc(3, &[rel(&[0, 1]), rel(&[1, 2]), rel(&[0, 2])]);
        let report = betti_numbers(&c, 8, 100_000).unwrap();
        assert_eq!(report.betti, vec![1, 1]);
        assert_eq!(report.face_counts, vec![3, 3]);
        assert_eq!(report.euler, 0);
    }

    #[test]
    fn filled_triangle() {
        let c = sc(3, &[rel(&[0, 1, 2])]);
        let report = betti_numbers(&c, 8, 100_000).unwrap();
        assert_eq!(report.betti, vec![1, 0, 0]);
        assert_eq!(report.euler, 1);
    }

    #[test]
    fn toy_complex_has_one_loop() {
        // triangle a1a2a3 filled, loop a2-a4-a3-a2 unfilled
        let c = sc(4, &[rel(&[0, 1, 2]), rel(&[1, 3]), rel(&[2, 3])]);
        let report = betti_numbers(&c, 8, 100_000).unwrap();
        assert!(report.betti_eq(&[1, 1]));
        assert_eq!(report.euler, 0);
    }

    #[test]
    fn hollow_tetrahedron() {
        let faces: Vec<Relation> = [
            [0u32, 1, 2],
            [0, 1, 3],
            [0, 2, 3],
            [1, 2, 3],
        ]
        .iter()
        .map(|f| rel(f))
        .collect();
        let report = betti_numbers(&sc(4, &faces), 8, 100_000).unwrap();
        assert_eq!(report.betti, vec![1, 0, 1]);
        assert_eq!(report.euler, 2);
    }

    #[test]
    fn two_components() {
        let c = sc(4, &[rel(&[0, 1]), rel(&[2, 3])]);
        let report = betti_numbers(&c, 8, 100_000).unwrap();
        assert_eq!(report.betti, vec![2, 0]);
    }

    #[test]
    fn empty_complex() {
        let c = sc(3, &[]);
        let report = betti_numbers(&c, 8, 100_000).unwrap();
        assert!(report.betti.is_empty());
        assert_eq!(report.euler, 0);
    }

    #[test]
    fn euler_identity() {
        let c = sc(4, &[rel(&[0, 1, 2]), rel(&[1, 3]), rel(&[2, 3])]);
        let report = betti_numbers(&c, 8, 100_000).unwrap();
        let betti_sum: i64 = report
            .betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum();
        assert_eq!(report.euler, betti_sum);
    }

    #[test]
    fn dimension_cap_errors() {
        let c = sc(3, &[rel(&[0, 1, 2])]);
        assert_eq!(
            betti_numbers(&c, 1, 100_000).unwrap_err(),
            Error::DimensionCapExceeded { dimension: 2, max_dim: 1 }
        );
    }

    #[test]
    fn face_cap_errors() {
        let c = sc(3, &[rel(&[0, 1, 2])]);
        assert_eq!(
            betti_numbers(&c, 8, 4).unwrap_err(),
            Error::FaceCapExceeded { cap: 4 }
        );
    }
}
