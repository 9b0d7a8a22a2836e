//! Fixed-order higher-order networks built from observed path data.
//!
//! A HON splits each unit into context-annotated nodes: the node for a
//! path position carries the up-to-(order-1) units that preceded it, so
//! walks through the HON can only recombine where the data actually did.
//! Order 1 yields the plain first-order transition graph.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::string::String;
use alloc::vec::Vec;

use crate::{Error, LabelMap, NodeId, Result};

/// A HON node: a unit annotated with its recent context, most recent
/// predecessor first. Context is shorter than `order - 1` near path
/// starts; no artificial start symbol is inserted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct HonNode {
    pub unit: NodeId,
    pub context: Vec<NodeId>,
}

/// Context-expanded transition graph with raw observation counts on the
/// edges. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hon {
    order: usize,
    nodes: BTreeSet<HonNode>,
    edges: BTreeMap<(HonNode, HonNode), u64>,
}

/// Builds the order-`order` HON from paths of unit ids. Every path must
/// have at least two entries.
pub fn build_hon(paths: &[Vec<NodeId>], order: usize) -> Result<Hon> {
    if order == 0 {
        return Err(Error::ZeroOrder);
    }
    if paths.is_empty() {
        return Err(Error::EmptyPathSet);
    }
    let mut nodes = BTreeSet::new();
    let mut edges: BTreeMap<(HonNode, HonNode), u64> = BTreeMap::new();
    for (p, path) in paths.iter().enumerate() {
        if path.len() < 2 {
            return Err(Error::PathTooShort { path: p, len: path.len() });
        }
        let mut prev = node_at(path, 0, order);
        nodes.insert(prev.clone());
        for i in 1..path.len() {
            let cur = node_at(path, i, order);
            nodes.insert(cur.clone());
            *edges.entry((prev, cur.clone())).or_insert(0) += 1;
            prev = cur;
        }
    }
    Ok(Hon { order, nodes, edges })
}

fn node_at(path: &[NodeId], i: usize, order: usize) -> HonNode {
    let depth = (order - 1).min(i);
    let context = (1..=depth).map(|back| path[i - back]).collect();
    HonNode { unit: path[i], context }
}

impl Hon {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn nodes(&self) -> impl Iterator<Item = &HonNode> {
        self.nodes.iter()
    }

    /// Edges with counts, in lexicographic node order.
    pub fn edges(&self) -> impl Iterator<Item = (&HonNode, &HonNode, u64)> {
        self.edges.iter().map(|((s, t), &c)| (s, t, c))
    }

    pub fn total_count(&self) -> u64 {
        self.edges.values().sum()
    }

    /// True iff a directed walk of length >= 1 leads from any node with
    /// unit `src` to any node with unit `dst`. A node is not trivially
    /// reachable from itself.
    pub fn reachable(&self, src: NodeId, dst: NodeId) -> bool {
        let mut successors: BTreeMap<&HonNode, Vec<&HonNode>> = BTreeMap::new();
        for (s, t) in self.edges.keys() {
            successors.entry(s).or_default().push(t);
        }
        let mut queue: VecDeque<&HonNode> = VecDeque::new();
        let mut visited: BTreeSet<&HonNode> = BTreeSet::new();
        for node in self.nodes.iter().filter(|n| n.unit == src) {
            for &next in successors.get(node).map(Vec::as_slice).unwrap_or(&[]) {
                if visited.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        while let Some(node) = queue.pop_front() {
            if node.unit == dst {
                return true;
            }
            for &next in successors.get(node).map(Vec::as_slice).unwrap_or(&[]) {
                if visited.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        false
    }

    /// Merges nodes by unit, summing edge counts. The result equals the
    /// order-1 HON built from the same paths.
    pub fn project_first_order(&self) -> Hon {
        let mut nodes = BTreeSet::new();
        for node in &self.nodes {
            nodes.insert(HonNode { unit: node.unit, context: Vec::new() });
        }
        let mut edges: BTreeMap<(HonNode, HonNode), u64> = BTreeMap::new();
        for ((s, t), &c) in &self.edges {
            let key = (
                HonNode { unit: s.unit, context: Vec::new() },
                HonNode { unit: t.unit, context: Vec::new() },
            );
            *edges.entry(key).or_insert(0) += c;
        }
        Hon { order: 1, nodes, edges }
    }
}

/// Renders a HON node as `U|C1,C2` (unit label, then context labels most
/// recent first); a context-free node renders as just `U`. Labels must
/// not contain `|` or `,` for the rendering to stay parseable.
pub fn render_node(node: &HonNode, labels: &LabelMap) -> Option<String> {
    let mut out = String::from(labels.label(node.unit)?);
    for (i, &c) in node.context.iter().enumerate() {
        out.push(if i == 0 { '|' } else { ',' });
        out.push_str(labels.label(c)?);
    }
    Some(out)
}

/// Inverse of [`render_node`].
pub fn parse_node(text: &str, labels: &LabelMap) -> Result<HonNode> {
    let (unit, context) = match text.split_once('|') {
        Some((u, ctx)) => (u, ctx.split(',').collect::<Vec<_>>()),
        None => (text, Vec::new()),
    };
    Ok(HonNode {
        unit: labels.require(unit)?,
        context: context
            .into_iter()
            .map(|c| labels.require(c))
            .collect::<Result<Vec<_>>>()?,
    })
}
