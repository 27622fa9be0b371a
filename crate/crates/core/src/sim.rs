//! Whole-network broadcast simulation under an ideal MAC layer.
//!
//! Every transmission reaches the transmitter's open neighborhood with no
//! loss or collision, so a broadcast is fully described by who transmitted
//! and which forward nodes each transmission designated.

use std::collections::VecDeque;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, NodeSet};
use crate::prob::run_prob_broadcast;
use crate::pruning::{forward_list, ForwardList, PruningVariant, NO_SENDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algorithm {
    Flood,
    Dp,
    Tdp,
    Prob,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [
        Algorithm::Flood,
        Algorithm::Dp,
        Algorithm::Tdp,
        Algorithm::Prob,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Flood => "flood",
            Algorithm::Dp => "dp",
            Algorithm::Tdp => "tdp",
            Algorithm::Prob => "prob",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "flood" => Ok(Algorithm::Flood),
            "dp" => Ok(Algorithm::Dp),
            "tdp" => Ok(Algorithm::Tdp),
            "prob" => Ok(Algorithm::Prob),
            other => Err(Error::InvalidInput(format!("unknown algorithm {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransmissionEvent {
    pub transmitter: NodeId,
    pub designated_forwards: ForwardList,
    /// Open neighborhood of the transmitter.
    pub receivers: NodeSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BroadcastTrace {
    pub source: NodeId,
    pub algorithm: Algorithm,
    pub events: Vec<TransmissionEvent>,
}

impl BroadcastTrace {
    pub fn transmitters(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.events.iter().map(|e| e.transmitter)
    }

    pub fn transmitter_set(&self) -> NodeSet {
        self.transmitters().collect()
    }

    /// Source plus everything any event reached.
    pub fn delivered(&self) -> NodeSet {
        let mut d = NodeSet::singleton(self.source);
        for e in &self.events {
            d.extend_from(&e.receivers);
        }
        d
    }

    /// One line per event: `tx=<id> fwd=[a,b] rx=[c,d]`, ids ascending.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for e in &self.events {
            let _ = writeln!(
                out,
                "tx={} fwd=[{}] rx=[{}]",
                e.transmitter,
                join(e.designated_forwards.to_set().iter()),
                join(e.receivers.iter()),
            );
        }
        out
    }

    /// Checks the structural trace invariants: the source transmits first,
    /// nobody transmits twice, every later transmitter was reached by an
    /// earlier event, and designated forwards are receivers.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let Some(first) = self.events.first() else {
            return Err("trace has no events".into());
        };
        if first.transmitter != self.source {
            return Err(format!(
                "first transmitter {} is not the source {}",
                first.transmitter, self.source
            ));
        }
        let mut transmitted = NodeSet::new();
        let mut reached = NodeSet::singleton(self.source);
        for (i, e) in self.events.iter().enumerate() {
            if !transmitted.insert(e.transmitter) {
                return Err(format!("node {} transmits twice", e.transmitter));
            }
            if i > 0 && !reached.contains(e.transmitter) {
                return Err(format!(
                    "node {} transmits before receiving the packet",
                    e.transmitter
                ));
            }
            if !e.designated_forwards.to_set().is_subset(&e.receivers) {
                return Err(format!(
                    "event {i}: designated forwards are not all receivers"
                ));
            }
            reached.extend_from(&e.receivers);
        }
        Ok(())
    }
}

fn join(ids: impl Iterator<Item = NodeId>) -> String {
    ids.map(|n| n.to_string()).collect::<Vec<_>>().join(",")
}

#[derive(Clone, Debug, PartialEq)]
pub struct Metrics {
    /// Transmitters other than the source.
    pub forward_count: usize,
    pub transmission_count: usize,
    pub delivered: NodeSet,
    /// `|delivered|` over the number of nodes reachable from the source.
    pub coverage_ratio: f64,
    /// Receptions beyond the first one at each non-source node.
    pub redundant_receptions: usize,
}

/// Relays the packet breadth-first from `source`; a node retransmits on its
/// first reception iff it is in `relays`. Nodes are processed in
/// (hop, id) order.
pub fn run_with_transmitters(
    g: &Graph,
    source: NodeId,
    relays: &NodeSet,
) -> Result<BroadcastTrace> {
    g.check_node(source)?;
    let mut reached = vec![false; g.node_count()];
    reached[source.index()] = true;
    let mut frontier = vec![source];
    let mut events = Vec::new();
    while !frontier.is_empty() {
        let mut next = NodeSet::new();
        for &tx in &frontier {
            let receivers = g.neighbors(tx).clone();
            for r in receivers.iter() {
                if !reached[r.index()] {
                    reached[r.index()] = true;
                    if relays.contains(r) {
                        next.insert(r);
                    }
                }
            }
            events.push(TransmissionEvent {
                transmitter: tx,
                designated_forwards: ForwardList::new(),
                receivers,
            });
        }
        frontier = next.to_vec();
    }
    Ok(BroadcastTrace {
        source,
        algorithm: Algorithm::Flood,
        events,
    })
}

/// Every reachable node retransmits once, in (hop distance, id) order.
pub fn run_blind_flooding(g: &Graph, source: NodeId) -> Result<BroadcastTrace> {
    let all: NodeSet = g.nodes().collect();
    run_with_transmitters(g, source, &all)
}

/// DP or TDP broadcast. The source designates forwards with no sender; a
/// designated node transmits on its first designation, computing its own
/// forward list against the node that designated it. Designations are
/// served first-in first-out, ascending id within one transmission.
pub fn run_pruned_broadcast(
    g: &Graph,
    source: NodeId,
    variant: PruningVariant,
) -> Result<BroadcastTrace> {
    g.check_node(source)?;
    let mut designated = vec![false; g.node_count()];
    designated[source.index()] = true;
    let mut queue: VecDeque<(NodeId, Option<NodeId>)> = VecDeque::from([(source, NO_SENDER)]);
    let mut events = Vec::new();

    while let Some((v, sender)) = queue.pop_front() {
        let forwards = forward_list(g, sender, v, variant)?;
        for f in forwards.to_set().iter() {
            if !designated[f.index()] {
                designated[f.index()] = true;
                queue.push_back((f, Some(v)));
            }
        }
        events.push(TransmissionEvent {
            transmitter: v,
            designated_forwards: forwards,
            receivers: g.neighbors(v).clone(),
        });
    }

    let algorithm = match variant {
        PruningVariant::Dominant => Algorithm::Dp,
        PruningVariant::TotalDominant => Algorithm::Tdp,
    };
    Ok(BroadcastTrace {
        source,
        algorithm,
        events,
    })
}

/// Probabilistic broadcast rendered as a trace: one event per transmitter
/// in selection order, designating the forwards it picked while acting as
/// source.
pub fn run_prob_trace(g: &Graph, source: NodeId) -> Result<BroadcastTrace> {
    let result = run_prob_broadcast(g, source)?;
    let events = result
        .forward_sequence
        .iter()
        .map(|&t| TransmissionEvent {
            transmitter: t,
            designated_forwards: result.forward_list(t),
            receivers: g.neighbors(t).clone(),
        })
        .collect();
    Ok(BroadcastTrace {
        source,
        algorithm: Algorithm::Prob,
        events,
    })
}

pub fn run_algorithm(g: &Graph, source: NodeId, algorithm: Algorithm) -> Result<BroadcastTrace> {
    match algorithm {
        Algorithm::Flood => run_blind_flooding(g, source),
        Algorithm::Dp => run_pruned_broadcast(g, source, PruningVariant::Dominant),
        Algorithm::Tdp => run_pruned_broadcast(g, source, PruningVariant::TotalDominant),
        Algorithm::Prob => run_prob_trace(g, source),
    }
}

pub fn evaluate(trace: &BroadcastTrace, g: &Graph) -> Result<Metrics> {
    g.check_node(trace.source)?;
    for e in &trace.events {
        g.check_node(e.transmitter)?;
        if &e.receivers != g.neighbors(e.transmitter) {
            return Err(Error::InvalidInput(format!(
                "receivers of node {} do not match its neighborhood",
                e.transmitter
            )));
        }
    }
    let delivered = trace.delivered();
    let reachable = g.reachable_from(trace.source)?;
    let receptions: usize = trace.events.iter().map(|e| e.receivers.len()).sum();
    let newly_reached = delivered.len() - 1;
    let transmission_count = trace.events.len();
    let source_transmits = trace.events.iter().any(|e| e.transmitter == trace.source);
    Ok(Metrics {
        forward_count: transmission_count - usize::from(source_transmits),
        transmission_count,
        coverage_ratio: delivered.len() as f64 / reachable.len() as f64,
        redundant_receptions: receptions.saturating_sub(newly_reached),
        delivered,
    })
}
