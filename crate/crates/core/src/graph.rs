//! Network topology: an undirected simple graph over dense integer ids.
//!
//! Neighborhoods are closed throughout: `N(u)` contains `u` itself, and the
//! two-hop set `N(N(u))` is the union of the closed neighborhoods of `N(u)`.
//! Open neighborhoods are only exposed through [`Graph::neighbors`].

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// Node identifier, dense in `[0, node_count)`. The numeric order is the
/// tie-breaking order used by every selection algorithm.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(pub usize);

impl NodeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<usize> for NodeId {
    fn from(id: usize) -> Self {
        NodeId(id)
    }
}

/// An ordered set of nodes. Iteration is always in ascending id order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NodeSet(BTreeSet<NodeId>);

impl NodeSet {
    pub fn new() -> Self {
        NodeSet(BTreeSet::new())
    }

    pub fn singleton(node: NodeId) -> Self {
        let mut s = NodeSet::new();
        s.insert(node);
        s
    }

    pub fn insert(&mut self, node: NodeId) -> bool {
        self.0.insert(node)
    }

    pub fn remove(&mut self, node: NodeId) -> bool {
        self.0.remove(&node)
    }

    pub fn contains(&self, node: NodeId) -> bool {
        self.0.contains(&node)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = NodeId> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<NodeId> {
        self.0.first().copied()
    }

    pub fn union(&self, other: &NodeSet) -> NodeSet {
        NodeSet(self.0.union(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &NodeSet) -> NodeSet {
        NodeSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &NodeSet) -> NodeSet {
        NodeSet(self.0.intersection(&other.0).copied().collect())
    }

    /// Number of members shared with `other`, without allocating.
    pub fn intersection_len(&self, other: &NodeSet) -> usize {
        self.0.intersection(&other.0).count()
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn extend_from(&mut self, other: &NodeSet) {
        self.0.extend(other.iter());
    }

    pub fn subtract(&mut self, other: &NodeSet) {
        for node in other.iter() {
            self.0.remove(&node);
        }
    }

    pub fn to_vec(&self) -> Vec<NodeId> {
        self.iter().collect()
    }
}

impl FromIterator<NodeId> for NodeSet {
    fn from_iter<I: IntoIterator<Item = NodeId>>(iter: I) -> Self {
        NodeSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a NodeSet {
    type Item = NodeId;
    type IntoIter = std::iter::Copied<std::collections::btree_set::Iter<'a, NodeId>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

impl Extend<NodeId> for NodeSet {
    fn extend<I: IntoIterator<Item = NodeId>>(&mut self, iter: I) {
        self.0.extend(iter);
    }
}

impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, node) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{node}")?;
        }
        f.write_str("}")
    }
}

/// Convenience constructor for node sets in tests and fixtures.
pub fn node_set<I: IntoIterator<Item = usize>>(ids: I) -> NodeSet {
    ids.into_iter().map(NodeId).collect()
}

/// Undirected simple graph. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<NodeSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects out-of-range ids, self-loops
    /// and duplicate edges (in either orientation).
    pub fn from_edges<I>(node_count: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![NodeSet::new(); node_count];
        for (u, v) in edges {
            for id in [u, v] {
                if id >= node_count {
                    return Err(Error::InvalidNode {
                        node: NodeId(id),
                        node_count,
                    });
                }
            }
            if u == v {
                return Err(Error::InvalidInput(format!("self-loop on node {u}")));
            }
            if !adjacency[u].insert(NodeId(v)) {
                return Err(Error::InvalidInput(format!("duplicate edge {u} {v}")));
            }
            adjacency[v].insert(NodeId(u));
        }
        Ok(Graph { adjacency })
    }

    /// Graph on `node_count` nodes with no edges.
    pub fn edgeless(node_count: usize) -> Graph {
        Graph {
            adjacency: vec![NodeSet::new(); node_count],
        }
    }

    pub(crate) fn from_adjacency(adjacency: Vec<NodeSet>) -> Graph {
        Graph { adjacency }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        (0..self.node_count()).map(NodeId)
    }

    pub fn contains(&self, node: NodeId) -> bool {
        node.0 < self.node_count()
    }

    pub fn check_node(&self, node: NodeId) -> Result<()> {
        if self.contains(node) {
            Ok(())
        } else {
            Err(Error::InvalidNode {
                node,
                node_count: self.node_count(),
            })
        }
    }

    /// Open neighborhood (excludes `u`). Panics on an invalid id.
    pub fn neighbors(&self, u: NodeId) -> &NodeSet {
        &self.adjacency[u.0]
    }

    pub fn degree(&self, u: NodeId) -> usize {
        self.adjacency[u.0].len()
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.contains(u) && self.adjacency[u.0].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, adj)| {
            adj.iter()
                .filter(move |v| v.0 > u)
                .map(move |v| (NodeId(u), v))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(NodeSet::len).sum::<usize>() / 2
    }

    /// `N(u)`: the neighbors of `u` together with `u`.
    pub fn closed_neighbors(&self, u: NodeId) -> Result<NodeSet> {
        self.check_node(u)?;
        let mut set = self.adjacency[u.0].clone();
        set.insert(u);
        Ok(set)
    }

    /// `N(N(u))`: union of the closed neighborhoods of every member of `N(u)`.
    pub fn two_hop_neighbors(&self, u: NodeId) -> Result<NodeSet> {
        let mut set = self.closed_neighbors(u)?;
        for v in self.adjacency[u.0].iter() {
            set.extend_from(&self.adjacency[v.0]);
        }
        Ok(set)
    }

    /// Nodes reachable from `start`, including `start`.
    pub fn reachable_from(&self, start: NodeId) -> Result<NodeSet> {
        self.check_node(start)?;
        let mut seen = vec![false; self.node_count()];
        let mut queue = VecDeque::from([start]);
        seen[start.0] = true;
        while let Some(u) = queue.pop_front() {
            for v in self.adjacency[u.0].iter() {
                if !seen[v.0] {
                    seen[v.0] = true;
                    queue.push_back(v);
                }
            }
        }
        Ok(seen
            .iter()
            .enumerate()
            .filter(|(_, s)| **s)
            .map(|(i, _)| NodeId(i))
            .collect())
    }

    /// Hop distance from `start` to every node; `None` when unreachable.
    pub fn hop_distances(&self, start: NodeId) -> Result<Vec<Option<usize>>> {
        self.check_node(start)?;
        let mut dist = vec![None; self.node_count()];
        dist[start.0] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u.0].unwrap_or(0);
            for v in self.adjacency[u.0].iter() {
                if dist[v.0].is_none() {
                    dist[v.0] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        Ok(dist)
    }

    /// True when every node is reachable from node 0. The empty graph and the
    /// single-node graph are connected.
    pub fn is_connected(&self) -> bool {
        if self.node_count() == 0 {
            return true;
        }
        self.reachable_from(NodeId(0))
            .map(|r| r.len() == self.node_count())
            .unwrap_or(false)
    }
}
