//! Forward-node selection for broadcasting in ad hoc wireless networks.
//!
//! The network is an undirected simple graph where every transmission reaches
//! all one-hop neighbors. A broadcast is judged by how many nodes have to
//! retransmit the packet before everyone has it. This crate implements
//!
//! * blind flooding, the redundancy baseline ([`sim::run_blind_flooding`]),
//! * Dominant Pruning and Total Dominant Pruning, which pick forward nodes
//!   by greedy set cover over the two-hop neighborhood ([`pruning`]),
//! * a probability-based selection that only needs one-hop information and
//!   delegates the source role depth-first along chosen forwards ([`prob`]),
//!
//! together with a brute-force oracle for small instances ([`oracle`]) and an
//! experiment harness that compares forward-node counts over random
//! geometric graphs ([`experiment`]).

pub mod edge_list;
pub mod error;
pub mod experiment;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod prob;
pub mod pruning;
pub mod sim;

pub use error::{Error, Result};
pub use graph::{Graph, NodeId, NodeSet};
pub use sim::{Algorithm, BroadcastTrace, Metrics};
