//! Dominant Pruning (DP) and Total Dominant Pruning (TDP).
//!
//! A node `v` that received the packet from `u` chooses forward nodes among
//! `B(u, v) = N(v) - N(u)` so that they cover a universe of two-hop nodes:
//!
//! * DP:  `U(u, v) = N(N(v)) - N(u) - N(v)`
//! * TDP: `U(u, v) = N(N(v)) - N(N(u))` (the sender piggybacks `N(N(u))`)
//!
//! The choice is the greedy set cover in [`greedy_cover`]. The broadcast
//! source has no sender; pass [`NO_SENDER`] and the formulas treat `N(u)` as
//! `{v}`.

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, NodeSet};

/// Sender argument for the broadcast source.
pub const NO_SENDER: Option<NodeId> = None;

/// Which pruning rule computes the universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PruningVariant {
    Dominant,
    TotalDominant,
}

/// Forward nodes in selection order. Never contains duplicates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ForwardList {
    nodes: Vec<NodeId>,
}

impl ForwardList {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends `node` unless it is already present. Returns whether it was added.
    pub fn push(&mut self, node: NodeId) -> bool {
        if self.nodes.contains(&node) {
            return false;
        }
        self.nodes.push(node);
        true
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.nodes.iter().copied()
    }

    pub fn to_set(&self) -> NodeSet {
        self.iter().collect()
    }
}

impl FromIterator<NodeId> for ForwardList {
    fn from_iter<I: IntoIterator<Item = NodeId>>(iter: I) -> Self {
        let mut list = ForwardList::new();
        for node in iter {
            list.push(node);
        }
        list
    }
}

/// A set cover instance: the universe and, per candidate, what it covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverProblem {
    universe: NodeSet,
    candidates: Vec<(NodeId, NodeSet)>,
}

impl CoverProblem {
    /// Each covers-set is intersected with the universe; candidates are
    /// sorted by id. Duplicate candidate ids are merged.
    pub fn new<I>(universe: NodeSet, candidates: I) -> CoverProblem
    where
        I: IntoIterator<Item = (NodeId, NodeSet)>,
    {
        let mut merged: std::collections::BTreeMap<NodeId, NodeSet> = Default::default();
        for (id, covers) in candidates {
            merged
                .entry(id)
                .or_default()
                .extend_from(&covers.intersection(&universe));
        }
        CoverProblem {
            universe,
            candidates: merged.into_iter().collect(),
        }
    }

    pub fn universe(&self) -> &NodeSet {
        &self.universe
    }

    pub fn candidates(&self) -> &[(NodeId, NodeSet)] {
        &self.candidates
    }
}

/// Result of the greedy selection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverOutcome {
    pub forwards: ForwardList,
    /// Marginal number of newly covered elements for each selection.
    pub gains: Vec<usize>,
    pub covered: NodeSet,
    /// Set when part of the universe could not be covered by any candidate.
    pub partial: bool,
}

/// Greedy set cover with smallest-id tie-breaking.
///
/// Repeatedly takes the candidate with the largest residual set, adds it to
/// the forward list and removes its elements from every other residual set.
/// Stops once the universe is covered, or when no residual set is non-empty.
pub fn greedy_cover(problem: &CoverProblem) -> CoverOutcome {
    let mut residual: Vec<(NodeId, NodeSet)> = problem.candidates.clone();
    let mut forwards = ForwardList::new();
    let mut gains = Vec::new();
    let mut covered = NodeSet::new();

    while covered.len() < problem.universe.len() {
        // candidates are in ascending id order, so strict `>` keeps the
        // smallest id among equally large sets
        let mut best: Option<usize> = None;
        for (idx, (_, set)) in residual.iter().enumerate() {
            if best.is_none_or(|b| set.len() > residual[b].1.len()) {
                best = Some(idx);
            }
        }
        let Some(best) = best.filter(|&b| !residual[b].1.is_empty()) else {
            break;
        };
        let (chosen, gained) = residual.remove(best);
        for (_, set) in residual.iter_mut() {
            set.subtract(&gained);
        }
        forwards.push(chosen);
        gains.push(gained.len());
        covered.extend_from(&gained);
    }

    let partial = covered.len() < problem.universe.len();
    CoverOutcome {
        forwards,
        gains,
        covered,
        partial,
    }
}

fn check_pair(g: &Graph, sender: Option<NodeId>, v: NodeId) -> Result<()> {
    g.check_node(v)?;
    if let Some(u) = sender {
        g.check_node(u)?;
        if !g.has_edge(u, v) {
            return Err(Error::NotAdjacent(u, v));
        }
    }
    Ok(())
}

/// `N(u)`, or `{v}` for the source.
fn sender_closed(g: &Graph, sender: Option<NodeId>, v: NodeId) -> Result<NodeSet> {
    match sender {
        Some(u) => g.closed_neighbors(u),
        None => Ok(NodeSet::singleton(v)),
    }
}

/// `N(N(v)) - N(u) - N(v)`.
pub fn dp_universe(g: &Graph, sender: Option<NodeId>, v: NodeId) -> Result<NodeSet> {
    check_pair(g, sender, v)?;
    let mut universe = g.two_hop_neighbors(v)?;
    universe.subtract(&sender_closed(g, sender, v)?);
    universe.subtract(&g.closed_neighbors(v)?);
    Ok(universe)
}

/// `N(N(v)) - N(N(u))`; for the source this equals [`dp_universe`].
pub fn tdp_universe(g: &Graph, sender: Option<NodeId>, v: NodeId) -> Result<NodeSet> {
    check_pair(g, sender, v)?;
    match sender {
        Some(u) => Ok(g.two_hop_neighbors(v)?.difference(&g.two_hop_neighbors(u)?)),
        None => dp_universe(g, None, v),
    }
}

/// `B(u, v) = N(v) - N(u)`; for the source, `N(v) - {v}`.
pub fn candidate_set(g: &Graph, sender: Option<NodeId>, v: NodeId) -> Result<NodeSet> {
    check_pair(g, sender, v)?;
    Ok(g.closed_neighbors(v)?
        .difference(&sender_closed(g, sender, v)?))
}

/// The cover instance node `v` solves after receiving from `sender`.
pub fn cover_problem(
    g: &Graph,
    sender: Option<NodeId>,
    v: NodeId,
    variant: PruningVariant,
) -> Result<CoverProblem> {
    let universe = match variant {
        PruningVariant::Dominant => dp_universe(g, sender, v)?,
        PruningVariant::TotalDominant => tdp_universe(g, sender, v)?,
    };
    let candidates = candidate_set(g, sender, v)?;
    let sets: Vec<(NodeId, NodeSet)> = candidates
        .iter()
        .map(|c| Ok((c, g.closed_neighbors(c)?)))
        .collect::<Result<_>>()?;
    Ok(CoverProblem::new(universe, sets))
}

pub fn forward_list(
    g: &Graph,
    sender: Option<NodeId>,
    v: NodeId,
    variant: PruningVariant,
) -> Result<ForwardList> {
    Ok(greedy_cover(&cover_problem(g, sender, v, variant)?).forwards)
}

pub fn dp_forward_list(g: &Graph, sender: Option<NodeId>, v: NodeId) -> Result<ForwardList> {
    forward_list(g, sender, v, PruningVariant::Dominant)
}

pub fn tdp_forward_list(g: &Graph, sender: Option<NodeId>, v: NodeId) -> Result<ForwardList> {
    forward_list(g, sender, v, PruningVariant::TotalDominant)
}
