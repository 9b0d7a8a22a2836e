use alloc::vec::Vec;

use crate::{Error, NodeId, Result};

/// A set of one or more related nodes, stored strictly ascending.
///
/// Relations are the shared building block of all three formalisms: graph
/// edges are relations of cardinality 2, maximal simplices and hyperedges
/// are relations of any cardinality >= 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Relation {
    members: Vec<NodeId>,
}

impl Relation {
    /// Builds a relation from arbitrary members, sorting and collapsing
    /// duplicates. Errors on an empty member list.
    pub fn from_members(mut members: Vec<NodeId>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptyRelation);
        }
        members.sort_unstable();
        members.dedup();
        Ok(Relation { members })
    }

    /// Builds a relation from members already strictly ascending.
    pub(crate) fn from_sorted(members: Vec<NodeId>) -> Self {
        debug_assert!(!members.is_empty());
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Relation { members }
    }

    pub fn members(&self) -> &[NodeId] {
        &self.members
    }

    pub fn cardinality(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, node: NodeId) -> bool {
        self.members.binary_search(&node).is_ok()
    }

    /// True iff every member of `self` is a member of `other`.
    pub fn is_subset_of(&self, other: &Relation) -> bool {
        is_subset(&self.members, &other.members)
    }

    /// Checks every member against the node count `n`.
    pub fn check_bounds(&self, n: u32) -> Result<()> {
        match self.members.last() {
            Some(&max) if max.0 >= n => Err(Error::NodeOutOfBounds { node: max.0, n }),
            _ => Ok(()),
        }
    }
}

/// Two-pointer subset test over strictly ascending slices.
pub(crate) fn is_subset(small: &[NodeId], large: &[NodeId]) -> bool {
    if small.len() > large.len() {
        return false;
    }
    let mut it = large.iter();
    'outer: for x in small {
        for y in it.by_ref() {
            match y.cmp(x) {
                core::cmp::Ordering::Less => continue,
                core::cmp::Ordering::Equal => continue 'outer,
                core::cmp::Ordering::Greater => return false,
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rel(ids: &[u32]) -> Relation {
        Relation::from_members(ids.iter().map(|&i| NodeId(i)).collect()).unwrap()
    }

    #[test]
    fn sorts_and_dedups() {
        let r = rel(&[3, 1, 3, 2]);
        assert_eq!(r.members(), &[NodeId(1), NodeId(2), NodeId(3)]);
    }

    #[test]
    fn empty_rejected() {
        assert_eq!(Relation::from_members(vec![]), Err(Error::EmptyRelation));
    }

    #[test]
    fn subset_tests() {
        assert!(rel(&[1, 3]).is_subset_of(&rel(&[0, 1, 2, 3])));
        assert!(!rel(&[1, 4]).is_subset_of(&rel(&[0, 1, 2, 3])));
        assert!(rel(&[2]).is_subset_of(&rel(&[2])));
    }

    #[test]
    fn bounds_check() {
        assert!(rel(&[0, 4]).check_bounds(5).is_ok());
        assert_eq!(
            rel(&[0, 5]).check_bounds(5),
            Err(Error::NodeOutOfBounds { node: 5, n: 5 })
        );
    }
}
