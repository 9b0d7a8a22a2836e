use alloc::collections::VecDeque;

use crate::{Error, Graph, NodeId, Result};

/// Number of edges incident to `v`.
pub fn graph_degree(g: &Graph, v: NodeId) -> Result<usize> {
    Ok(g.neighbors(v)?.len())
}

/// Clustering coefficient 2*mu/(k*(k-1)) where mu counts edges among the
/// neighbors of `v`. Nodes of degree below 2 get 0 by convention.
pub fn graph_clustering(g: &Graph, v: NodeId) -> Result<f64> {
    let neighbors = g.neighbors(v)?;
    let k = neighbors.len();
    if k < 2 {
        return Ok(0.0);
    }
    // each neighbor edge is counted from both endpoints
    let mut twice_mu = 0usize;
    for &u in neighbors {
        let adj = g.neighbors(u)?;
        twice_mu += sorted_intersection_count(neighbors, adj);
    }
    Ok(twice_mu as f64 / (k * (k - 1)) as f64)
}

fn sorted_intersection_count(a: &[NodeId], b: &[NodeId]) -> usize {
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

/// Mean breadth-first shortest-path length over unordered pairs of
/// distinct nodes in the same connected component. Disconnected pairs are
/// excluded; errors when no connected pair exists.
pub fn average_path_length(g: &Graph) -> Result<f64> {
    let n = g.node_count() as usize;
    let mut total: u64 = 0;
    let mut pairs: u64 = 0;
    let mut dist = alloc::vec![u32::MAX; n];
    let mut queue = VecDeque::new();
    for src in 0..n {
        dist.iter_mut().for_each(|d| *d = u32::MAX);
        dist[src] = 0;
        queue.clear();
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            for &v in g.neighbors(NodeId(u as u32))? {
                if dist[v.index()] == u32::MAX {
                    dist[v.index()] = du + 1;
                    queue.push_back(v.index());
                }
            }
        }
        // count each unordered pair once
        for &d in dist.iter().skip(src + 1) {
            if d != u32::MAX {
                total += d as u64;
                pairs += 1;
            }
        }
    }
    if pairs == 0 {
        return Err(Error::NoConnectedPair);
    }
    Ok(total as f64 / pairs as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Relation;
    use alloc::vec::Vec;

    fn rel(ids: &[u32]) -> Relation {
        Relation::from_members(ids.iter().map(|&i| NodeId(i)).collect()).unwrap()
    }

    fn graph(n: u32, edges: &[[u32; 2]]) -> Graph {
        let rels: Vec<Relation> = edges.iter().map(|e| rel(e)).collect();
        Graph::from_relations(n, &rels).unwrap()
    }

    fn toy() -> Graph {
        graph(4, &[[0, 1], [1, 3], [0, 2], [1, 2], [2, 3]])
    }

    #[test]
    fn toy_degrees() {
        let g = toy();
        assert_eq!(graph_degree(&g, NodeId(1)).unwrap(), 3);
        assert_eq!(graph_degree(&g, NodeId(2)).unwrap(), 3);
        let star = graph(5, &[[0, 1], [0, 2], [0, 3], [0, 4]]);
        assert_eq!(graph_degree(&star, NodeId(0)).unwrap(), 4);
        let empty = graph(2, &[]);
        assert_eq!(graph_degree(&empty, NodeId(0)).unwrap(), 0);
    }

    #[test]
    fn clustering_values() {
        let tri = graph(3, &[[0, 1], [1, 2], [0, 2]]);
        for v in 0..3 {
            assert_eq!(graph_clustering(&tri, NodeId(v)).unwrap(), 1.0);
        }
        let star = graph(5, &[[0, 1], [0, 2], [0, 3], [0, 4]]);
        assert_eq!(graph_clustering(&star, NodeId(0)).unwrap(), 0.0);
        // a2's neighbors {a1,a3,a4} have edges a1-a3 and a3-a4
        let c = graph_clustering(&toy(), NodeId(1)).unwrap();
        assert!((c - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn path_lengths() {
        let path = graph(3, &[[0, 1], [1, 2]]);
        let apl = average_path_length(&path).unwrap();
        assert!((apl - 4.0 / 3.0).abs() < 1e-15);

        let k4 = graph(4, &[[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]);
        assert_eq!(average_path_length(&k4).unwrap(), 1.0);

        // disconnected pairs are excluded
        let two_edges = graph(4, &[[0, 1], [2, 3]]);
        assert_eq!(average_path_length(&two_edges).unwrap(), 1.0);

        let edgeless = graph(3, &[]);
        assert_eq!(average_path_length(&edgeless), Err(Error::NoConnectedPair));
    }
}
