use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::Error;

/// Dense, 0-based node index. Ids are assigned by first appearance in the
/// data; the original text labels live in a [`LabelMap`] side table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<u32> for NodeId {
    fn from(id: u32) -> Self {
        NodeId(id)
    }
}

impl core::fmt::Display for NodeId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Bijection between external text labels and dense node ids.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LabelMap {
    labels: Vec<String>,
    reverse: BTreeMap<String, NodeId>,
}

impl LabelMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of labels, which equals the node count of structures built
    /// against this map.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Returns the id for `label`, assigning the next dense id on first
    /// appearance.
    pub fn get_or_insert(&mut self, label: &str) -> NodeId {
        if let Some(&id) = self.reverse.get(label) {
            return id;
        }
        let id = NodeId(self.labels.len() as u32);
        self.labels.push(String::from(label));
        self.reverse.insert(String::from(label), id);
        id
    }

    pub fn lookup(&self, label: &str) -> Option<NodeId> {
        self.reverse.get(label).copied()
    }

    pub fn require(&self, label: &str) -> Result<NodeId, Error> {
        self.lookup(label)
            .ok_or_else(|| Error::UnknownLabel(String::from(label)))
    }

    pub fn label(&self, id: NodeId) -> Option<&str> {
        self.labels.get(id.index()).map(String::as_str)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_round_trip() {
        let mut map = LabelMap::new();
        let a = map.get_or_insert("alice");
        let b = map.get_or_insert("bob");
        assert_eq!(a, NodeId(0));
        assert_eq!(b, NodeId(1));
        assert_eq!(map.get_or_insert("alice"), a);
        assert_eq!(map.label(map.lookup("bob").unwrap()), Some("bob"));
        for label in map.labels() {
            assert_eq!(map.label(map.lookup(label).unwrap()), Some(label.as_str()));
        }
    }

    #[test]
    fn unknown_label_errors() {
        let map = LabelMap::new();
        assert!(matches!(map.require("x"), Err(Error::UnknownLabel(_))));
    }
}
