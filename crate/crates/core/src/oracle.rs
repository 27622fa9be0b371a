//! Exhaustive solvers for small instances.
//!
//! Both searches walk cardinalities `k = 0, 1, 2, ...` and enumerate
//! `k`-subsets in lexicographic order, so the witness is the
//! lexicographically first optimum.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, NodeSet};
use crate::sim::run_with_transmitters;

pub const DEFAULT_MAX_NODES: usize = 12;
pub const DEFAULT_MAX_SUBSETS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult {
    pub optimum_size: usize,
    /// Node ids for [`min_forward_set`], subset indices for [`min_set_cover`].
    pub witness: Vec<usize>,
    /// Candidate subsets examined.
    pub explored: u64,
    /// `false` when no feasible solution exists; `optimum_size` and
    /// `witness` are then meaningless.
    pub feasible: bool,
}

/// Whether relaying through exactly `forwards` (besides `source`) reaches
/// every node.
pub fn is_feasible_forward_set(g: &Graph, source: NodeId, forwards: &NodeSet) -> Result<bool> {
    let trace = run_with_transmitters(g, source, forwards)?;
    Ok(trace.delivered().len() == g.node_count())
}

/// Smallest set of forward nodes (excluding the source) whose relaying
/// delivers the packet to the whole graph.
pub fn min_forward_set(g: &Graph, source: NodeId, max_nodes: usize) -> Result<OracleResult> {
    g.check_node(source)?;
    if g.node_count() > max_nodes {
        return Err(Error::TooLarge {
            size: g.node_count(),
            cap: max_nodes,
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let others: Vec<NodeId> = g.nodes().filter(|&n| n != source).collect();
    let mut explored = 0u64;
    for k in 0..=others.len() {
        for subset in others.iter().copied().combinations(k) {
            explored += 1;
            let set: NodeSet = subset.iter().copied().collect();
            if is_feasible_forward_set(g, source, &set)? {
                return Ok(OracleResult {
                    optimum_size: k,
                    witness: subset.into_iter().map(NodeId::index).collect(),
                    explored,
                    feasible: true,
                });
            }
        }
    }
    unreachable!("relaying through every node reaches a connected graph")
}

/// Fewest subsets whose union contains `universe`.
pub fn min_set_cover(
    universe: &NodeSet,
    subsets: &[NodeSet],
    max_subsets: usize,
) -> Result<OracleResult> {
    if subsets.len() > max_subsets {
        return Err(Error::TooLarge {
            size: subsets.len(),
            cap: max_subsets,
        });
    }
    let mut explored = 0u64;
    let coverable = subsets.iter().fold(NodeSet::new(), |acc, s| acc.union(s));
    if !universe.is_subset(&coverable) {
        return Ok(OracleResult {
            optimum_size: 0,
            witness: Vec::new(),
            explored,
            feasible: false,
        });
    }
    for k in 0..=subsets.len() {
        for combo in (0..subsets.len()).combinations(k) {
            explored += 1;
            let covers = universe
                .iter()
                .all(|x| combo.iter().any(|&i| subsets[i].contains(x)));
            if covers {
                return Ok(OracleResult {
                    optimum_size: k,
                    witness: combo,
                    explored,
                    feasible: true,
                });
            }
        }
    }
    unreachable!("the union of all subsets covers the universe")
}
