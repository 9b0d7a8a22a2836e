use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::{Error, Hypergraph, NodeId, Result};

/// Number of hyperedges containing `v`, multiplicity counted.
pub fn hyperdegree(hg: &Hypergraph, v: NodeId) -> Result<usize> {
    Ok(hg.incident_edges(v)?.len())
}

/// Precomputed bitsets for overlap computations: per-hyperedge membership
/// and per-node neighborhoods (nodes sharing at least one hyperedge,
/// excluding the node itself).
struct OverlapContext {
    words: usize,
    members: Vec<Vec<u64>>,
    neighbors: Vec<Vec<u64>>,
}

impl OverlapContext {
    fn new(hg: &Hypergraph) -> Self {
        let n = hg.node_count() as usize;
        let words = n.div_ceil(64).max(1);
        let mut members = Vec::with_capacity(hg.hyperedges().len());
        let mut neighbors = alloc::vec![alloc::vec![0u64; words]; n];
        for rel in hg.hyperedges() {
            let mut bits = alloc::vec![0u64; words];
            for &v in rel.members() {
                bits[v.index() / 64] |= 1u64 << (v.index() % 64);
            }
            for &v in rel.members() {
                for (w, b) in neighbors[v.index()].iter_mut().zip(bits.iter()) {
                    *w |= b;
                }
            }
            members.push(bits);
        }
        // no self-neighborship
        for (v, bits) in neighbors.iter_mut().enumerate() {
            bits[v / 64] &= !(1u64 << (v % 64));
        }
        OverlapContext { words, members, neighbors }
    }

    /// Extra overlap of hyperedges j and k:
    /// (|N(D_jk) & D_kj| + |D_jk & N(D_kj)|) / (|D_jk| + |D_kj|),
    /// where D_jk = e_j \ e_k and N ranges over all hyperedges. Identical
    /// node sets give 0 (the denominator vanishes).
    fn extra_overlap(&self, j: usize, k: usize) -> f64 {
        let (ej, ek) = (&self.members[j], &self.members[k]);
        let mut d_jk = alloc::vec![0u64; self.words];
        let mut d_kj = alloc::vec![0u64; self.words];
        for w in 0..self.words {
            d_jk[w] = ej[w] & !ek[w];
            d_kj[w] = ek[w] & !ej[w];
        }
        let denom = count_ones(&d_jk) + count_ones(&d_kj);
        if denom == 0 {
            return 0.0;
        }
        let n_jk = self.neighborhood(&d_jk);
        let n_kj = self.neighborhood(&d_kj);
        let mut numer = 0u32;
        for w in 0..self.words {
            numer += (n_jk[w] & d_kj[w]).count_ones() + (d_jk[w] & n_kj[w]).count_ones();
        }
        numer as f64 / denom as f64
    }

    fn neighborhood(&self, set: &[u64]) -> Vec<u64> {
        let mut out = alloc::vec![0u64; self.words];
        for (w, &word) in set.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let v = w * 64 + bits.trailing_zeros() as usize;
                bits &= bits - 1;
                for (o, b) in out.iter_mut().zip(self.neighbors[v].iter()) {
                    *o |= b;
                }
            }
        }
        out
    }
}

fn count_ones(words: &[u64]) -> u32 {
    words.iter().map(|w| w.count_ones()).sum()
}

/// Extra overlap of two distinct hyperedges. For repeated pair queries
/// prefer [`hypergraph_clustering_all`], which shares the precomputation.
pub fn extra_overlap(hg: &Hypergraph, j: usize, k: usize) -> Result<f64> {
    hg.hyperedge(j)?;
    hg.hyperedge(k)?;
    if j == k {
        return Err(Error::SameHyperedge { index: j });
    }
    Ok(OverlapContext::new(hg).extra_overlap(j, k))
}

/// Hypergraph clustering coefficient of `v`: the mean extra overlap over
/// unordered pairs of hyperedges containing `v`, or 0 when the
/// hyperdegree is at most 1.
pub fn hypergraph_clustering(hg: &Hypergraph, v: NodeId) -> Result<f64> {
    hg.incident_edges(v)?;
    let ctx = OverlapContext::new(hg);
    Ok(clustering_with(hg, &ctx, v))
}

/// Hypergraph clustering for every node, sharing one precomputation.
pub fn hypergraph_clustering_all(hg: &Hypergraph) -> Vec<f64> {
    let ctx = OverlapContext::new(hg);
    (0..hg.node_count())
        .map(|v| clustering_with(hg, &ctx, NodeId(v)))
        .collect()
}

fn clustering_with(hg: &Hypergraph, ctx: &OverlapContext, v: NodeId) -> f64 {
    let incident = hg.incident_edges(v).expect("node in bounds");
    let d = incident.len();
    if d <= 1 {
        return 0.0;
    }
    let mut sum = 0.0;
    for (i, &j) in incident.iter().enumerate() {
        for &k in &incident[i + 1..] {
            sum += ctx.extra_overlap(j, k);
        }
    }
    sum / (d * (d - 1) / 2) as f64
}

/// Fill coefficient of hyperedge `h`: the fraction of possible proper
/// sub-hyperedges (distinct node sets of cardinality >= 2) present in the
/// hypergraph, with denominator 2^|h| - 2 - |h|. Cardinality <= 2 gives 0.
pub fn fill_coefficient(hg: &Hypergraph, h: usize) -> Result<f64> {
    let target = hg.hyperedge(h)?;
    let card = target.cardinality();
    if card <= 2 {
        return Ok(0.0);
    }
    let distinct: BTreeSet<&crate::Relation> = hg.hyperedges().iter().collect();
    let present = distinct
        .iter()
        .filter(|g| {
            g.cardinality() > 1 && g.cardinality() < card && g.is_subset_of(target)
        })
        .count();
    let denom = libm::exp2(card as f64) - 2.0 - card as f64;
    Ok(present as f64 / denom)
}
