#![allow(dead_code)]

use std::collections::VecDeque;

use adhoc_broadcast::generate::gen_connected_random_geometric;
use adhoc_broadcast::{Graph, NodeId, NodeSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn ids(nodes: impl IntoIterator<Item = NodeId>) -> Vec<usize> {
    nodes.into_iter().map(NodeId::index).collect()
}

pub fn set(ids: impl IntoIterator<Item = usize>) -> NodeSet {
    ids.into_iter().map(NodeId).collect()
}

/// Graph from the bits of `mask` over the pairs (0,1), (0,2), ..., (n-2,n-1).
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v)));
    let edges: Vec<_> = pairs
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Every connected labeled graph on `n` nodes.
pub fn all_connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    (0u64..(1u64 << pair_count(n)))
        .map(move |m| graph_from_mask(n, m))
        .filter(Graph::is_connected)
}

/// `count` connected labeled graphs on `n` nodes, each edge present with
/// probability `p`, drawn from a seeded stream (rejection on connectivity).
pub fn sampled_connected_graphs(n: usize, p: f64, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut mask = 0u64;
        for i in 0..pair_count(n) {
            if rng.gen_bool(p) {
                mask |= 1 << i;
            }
        }
        let g = graph_from_mask(n, mask);
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Seeded connected geometric graphs with node counts cycling over `sizes`.
pub fn geometric_graphs(count: usize, sizes: &[usize], radius: f64, seed: u64) -> Vec<Graph> {
    (0..count)
        .map(|i| {
            let n = sizes[i % sizes.len()];
            gen_connected_random_geometric(n, radius, seed + (i as u64) * 10_000, 10_000)
                .unwrap()
                .graph
        })
        .collect()
}

/// Independent delivery check: BFS where only `source` and members of
/// `relays` retransmit. Returns every node that ends up with the packet.
pub fn bfs_delivery(g: &Graph, source: NodeId, relays: &NodeSet) -> NodeSet {
    let n = g.node_count();
    let mut has = vec![false; n];
    has[source.index()] = true;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for (w, got) in has.iter_mut().enumerate() {
            if g.has_edge(u, NodeId(w)) && !*got {
                *got = true;
                if relays.contains(NodeId(w)) {
                    queue.push_back(NodeId(w));
                }
            }
        }
    }
    (0..n).filter(|&i| has[i]).map(NodeId).collect()
}

/// Whether `nodes` induces a connected subgraph.
pub fn induces_connected(g: &Graph, nodes: &NodeSet) -> bool {
    let Some(start) = nodes.first() else {
        return true;
    };
    let mut seen = NodeSet::singleton(start);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for v in nodes.iter() {
            if g.has_edge(u, v) && seen.insert(v) {
                stack.push(v);
            }
        }
    }
    seen.len() == nodes.len()
}

/// Whether every node of `target` is in or adjacent to `dominators`.
pub fn dominates(g: &Graph, dominators: &NodeSet, target: &NodeSet) -> bool {
    target
        .iter()
        .all(|x| dominators.contains(x) || dominators.iter().any(|d| g.has_edge(d, x)))
}
