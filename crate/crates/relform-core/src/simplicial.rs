use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::{Error, NodeId, Relation, Result};

/// Simplicial complex stored as the antichain of its maximal simplices.
///
/// Downward closure is implicit: every subset of a stored simplex is a
/// face of the complex. The stored set is canonically ordered
/// (lexicographic over member lists) and no stored simplex is contained
/// in another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: u32,
    maximal: Vec<Relation>,
    /// node -> indices into `maximal` of the simplices containing it
    incident: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Builds the complex whose maximal simplices are the inclusion-maximal
    /// relations of the input. Duplicates and dominated relations collapse.
    pub fn from_relations(n: u32, rels: &[Relation]) -> Result<Self> {
        for rel in rels {
            rel.check_bounds(n)?;
        }
        let maximal = antichain(rels);
        Ok(Self::from_antichain(n, maximal))
    }

    /// Constructor for relation sets already known to form an antichain
    /// (e.g. maximal cliques).
    pub(crate) fn from_antichain(n: u32, mut maximal: Vec<Relation>) -> Self {
        maximal.sort_unstable();
        debug_assert!(is_antichain(&maximal));
        let mut incident = alloc::vec![Vec::new(); n as usize];
        for (i, rel) in maximal.iter().enumerate() {
            for &v in rel.members() {
                incident[v.index()].push(i);
            }
        }
        SimplicialComplex { n, maximal, incident }
    }

    pub fn node_count(&self) -> u32 {
        self.n
    }

    pub fn maximal(&self) -> &[Relation] {
        &self.maximal
    }

    /// Indices of the maximal simplices containing `v`.
    pub fn incident_maximal(&self, v: NodeId) -> Result<&[usize]> {
        self.incident
            .get(v.index())
            .map(Vec::as_slice)
            .ok_or(Error::NodeOutOfBounds { node: v.0, n: self.n })
    }

    /// Dimension of the complex (largest simplex cardinality minus one),
    /// or None when no simplex is stored.
    pub fn dimension(&self) -> Option<usize> {
        self.maximal.iter().map(|r| r.cardinality() - 1).max()
    }

    /// True iff `face` is a face of the complex, i.e. a subset of some
    /// stored maximal simplex.
    pub fn contains_face(&self, face: &Relation) -> Result<bool> {
        face.check_bounds(self.n)?;
        // only simplices containing the first member can contain the face
        let candidates = self.incident[face.members()[0].index()].iter();
        for &i in candidates {
            if face.is_subset_of(&self.maximal[i]) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// The distinct k-dimensional faces, i.e. all (k+1)-subsets of maximal
    /// simplices, deduplicated, in lexicographic order. Errors once the
    /// distinct face count would exceed `cap`.
    pub fn k_faces(&self, k: usize, cap: usize) -> Result<Vec<Relation>> {
        let size = k + 1;
        let mut faces: BTreeSet<Vec<NodeId>> = BTreeSet::new();
        for rel in &self.maximal {
            if rel.cardinality() < size {
                continue;
            }
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
        Ok(faces.into_iter().map(Relation::from_sorted).collect())
    }
}

/// Reduces a relation multiset to its antichain of inclusion-maximal
/// distinct sets.
pub(crate) fn antichain(rels: &[Relation]) -> Vec<Relation> {
    let distinct: BTreeSet<&Relation> = rels.iter().collect();
    // largest first, so each candidate only needs checking against kept sets
    let mut ordered: Vec<&Relation> = distinct.into_iter().collect();
    ordered.sort_by(|a, b| b.cardinality().cmp(&a.cardinality()));

    let max_node = ordered
        .iter()
        .flat_map(|r| r.members().last())
        .map(|id| id.index() + 1)
        .max()
        .unwrap_or(0);
    let mut kept: Vec<&Relation> = Vec::new();
    let mut by_node: Vec<Vec<usize>> = alloc::vec![Vec::new(); max_node];
    'cand: for rel in ordered {
        // probe via the member appearing in the fewest kept sets
        let probe = rel
            .members()
            .iter()
            .min_by_key(|v| by_node[v.index()].len())
            .expect("relations are nonempty");
        for &i in &by_node[probe.index()] {
            if rel.is_subset_of(kept[i]) {
                continue 'cand;
            }
        }
        let idx = kept.len();
        kept.push(rel);
        for &v in rel.members() {
            by_node[v.index()].push(idx);
        }
    }
    kept.into_iter().cloned().collect()
}

fn is_antichain(rels: &[Relation]) -> bool {
    for (i, a) in rels.iter().enumerate() {
        for (j, b) in rels.iter().enumerate() {
            if i != j && a.is_subset_of(b) {
                return false;
            }
        }
    }
    true
}

/// Calls `f` with each `size`-combination of `items` in lexicographic
/// order. `f` returns false to stop early.
pub(crate) fn for_each_combination<F>(items: &[NodeId], size: usize, mut f: F)
where
    F: FnMut(&[NodeId]) -> bool,
{
    if size == 0 || size > items.len() {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    let mut combo: Vec<NodeId> = idx.iter().map(|&i| items[i]).collect();
    loop {
        if !f(&combo) {
            return;
        }
        // advance the rightmost index that can still move
        let mut i = size;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] + (size - i) < items.len() {
                idx[i] += 1;
                for j in i + 1..size {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        for (slot, &i) in combo.iter_mut().zip(idx.iter()) {
            *slot = items[i];
        }
    }
}
