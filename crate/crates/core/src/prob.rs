//! Probability-based forward-node selection.
//!
//! The acting source scores each neighbor `i` by the number of still
//! uncovered nodes it would reach,
//!
//! ```text
//! n_i = |(N(i) - N(source)) ∩ U|,    P_i = 1 / n_i   (∞ when n_i = 0)
//! ```
//!
//! and forwards through the neighbor with the smallest `P_i` (smallest id on
//! ties). A chosen forward `f` covers `C_f`, the uncovered list shrinks to
//! `U - C_f` and `P_f` becomes ∞ for everyone. When the acting source has no
//! neighbor with finite probability left, it hands the source role to its
//! forward nodes in selection order, depth-first. The run stops as soon as
//! `U` is empty, or when the whole delegation tree is exhausted with `U`
//! still non-empty (the remainder is unreachable).
//!
//! Covered lists and probabilities are shared between nodes by gossip in a
//! real deployment; under a static topology that gossip completes before the
//! next decision, so a single [`ProbState`] stands in for it.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, NodeSet};
use crate::pruning::ForwardList;

/// `1 / n_i`, or infinity when the node covers nothing.
pub fn prob_value(coverage: usize) -> f64 {
    if coverage == 0 {
        f64::INFINITY
    } else {
        1.0 / coverage as f64
    }
}

/// `|(N(i) - N(rel_source)) ∩ uncovered|`.
pub fn coverage_count(
    g: &Graph,
    i: NodeId,
    rel_source: NodeId,
    uncovered: &NodeSet,
) -> Result<usize> {
    let reach = g.closed_neighbors(i)?;
    let source_reach = g.closed_neighbors(rel_source)?;
    Ok(reach
        .iter()
        .filter(|n| !source_reach.contains(*n) && uncovered.contains(*n))
        .count())
}

/// Shared bookkeeping of one probabilistic broadcast.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbState {
    prob: Vec<f64>,
    uncovered: NodeSet,
    covered_by: BTreeMap<NodeId, NodeSet>,
    forward_lists: BTreeMap<NodeId, ForwardList>,
}

impl ProbState {
    /// Uncovered list is every node outside `N(source)`; all probabilities
    /// start at zero except the source's, which is infinite.
    pub fn new(g: &Graph, source: NodeId) -> Result<ProbState> {
        let reach = g.closed_neighbors(source)?;
        let uncovered = g.nodes().filter(|n| !reach.contains(*n)).collect();
        let mut prob = vec![0.0; g.node_count()];
        prob[source.index()] = f64::INFINITY;
        Ok(ProbState {
            prob,
            uncovered,
            covered_by: BTreeMap::new(),
            forward_lists: BTreeMap::new(),
        })
    }

    pub fn prob(&self, node: NodeId) -> f64 {
        self.prob[node.index()]
    }

    pub fn uncovered(&self) -> &NodeSet {
        &self.uncovered
    }

    pub fn covered_by(&self, node: NodeId) -> Option<&NodeSet> {
        self.covered_by.get(&node)
    }

    pub fn forward_list(&self, node: NodeId) -> Option<&ForwardList> {
        self.forward_lists.get(&node)
    }

    fn set_prob(&mut self, node: NodeId, value: f64) {
        let slot = &mut self.prob[node.index()];
        // infinity is absorbing
        if slot.is_finite() {
            *slot = value;
        }
    }
}

/// One neighbor's score during a selection round.
#[derive(Clone, Debug, PartialEq)]
pub struct CandidateScore {
    pub node: NodeId,
    pub coverage: usize,
    pub probability: f64,
}

/// Recomputes the probability of every neighbor of `acting_source` that is
/// not yet at infinity and returns the scores in ascending id order.
fn score_neighbors(g: &Graph, acting_source: NodeId, state: &mut ProbState) -> Vec<CandidateScore> {
    let mut scores = Vec::new();
    for i in g.neighbors(acting_source).iter() {
        if state.prob(i).is_infinite() {
            continue;
        }
        let coverage = coverage_count(g, i, acting_source, &state.uncovered)
            .expect("neighbor ids come from the graph");
        let probability = prob_value(coverage);
        state.set_prob(i, probability);
        scores.push(CandidateScore {
            node: i,
            coverage,
            probability,
        });
    }
    scores
}

fn argmin(scores: &[CandidateScore]) -> Option<NodeId> {
    let mut best: Option<&CandidateScore> = None;
    for s in scores.iter().filter(|s| s.probability.is_finite()) {
        if best.is_none_or(|b| s.probability < b.probability) {
            best = Some(s);
        }
    }
    best.map(|s| s.node)
}

/// Picks the neighbor of `acting_source` with the smallest finite
/// probability, or `None` when every neighbor is at infinity.
///
/// Panics if `acting_source` is not a node of `g`.
pub fn select_forward(g: &Graph, acting_source: NodeId, state: &mut ProbState) -> Option<NodeId> {
    argmin(&score_neighbors(g, acting_source, state))
}

/// Records forward `f` chosen by `rel_source`: computes and stores `C_f`,
/// sets `P_f` to infinity and removes `C_f` from the uncovered list.
pub fn apply_forward(g: &Graph, f: NodeId, rel_source: NodeId, state: &mut ProbState) -> NodeSet {
    let reach = g
        .closed_neighbors(f)
        .expect("forward id comes from the graph");
    let source_reach = g
        .closed_neighbors(rel_source)
        .expect("source id comes from the graph");
    let covered = reach
        .difference(&source_reach)
        .intersection(&state.uncovered);
    state.uncovered.subtract(&covered);
    state.prob[f.index()] = f64::INFINITY;
    state.covered_by.insert(f, covered.clone());
    covered
}

/// What happened at each step of a run, for inspection and golden tests.
#[derive(Clone, Debug, PartialEq)]
pub enum ProbEvent {
    Scored {
        acting_source: NodeId,
        scores: Vec<CandidateScore>,
        selected: Option<NodeId>,
    },
    Covered {
        forward: NodeId,
        rel_source: NodeId,
        covered: NodeSet,
        uncovered_after: NodeSet,
    },
    Delegated {
        from: NodeId,
        to: NodeId,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct ProbResult {
    /// The source followed by every forward node in selection order.
    pub forward_sequence: Vec<NodeId>,
    pub delivered: NodeSet,
    /// `true` when the uncovered list ran empty.
    pub fully_covered: bool,
    pub initial_uncovered: NodeSet,
    pub state: ProbState,
    pub events: Vec<ProbEvent>,
}

impl ProbResult {
    /// Forward nodes chosen while `node` held the source role.
    pub fn forward_list(&self, node: NodeId) -> ForwardList {
        self.state.forward_list(node).cloned().unwrap_or_default()
    }
}

struct Run<'g> {
    g: &'g Graph,
    state: ProbState,
    sequence: Vec<NodeId>,
    events: Vec<ProbEvent>,
}

impl Run<'_> {
    /// Lets `acting` select forwards until it has nothing left to select or
    /// everything is covered.
    fn select_all(&mut self, acting: NodeId) {
        while !self.state.uncovered.is_empty() {
            let scores = score_neighbors(self.g, acting, &mut self.state);
            let selected = argmin(&scores);
            self.events.push(ProbEvent::Scored {
                acting_source: acting,
                scores,
                selected,
            });
            let Some(f) = selected else { break };
            let covered = apply_forward(self.g, f, acting, &mut self.state);
            self.events.push(ProbEvent::Covered {
                forward: f,
                rel_source: acting,
                covered,
                uncovered_after: self.state.uncovered.clone(),
            });
            self.state.forward_lists.entry(acting).or_default().push(f);
            self.sequence.push(f);
        }
    }

    fn child(&self, node: NodeId, idx: usize) -> Option<NodeId> {
        self.state
            .forward_lists
            .get(&node)
            .and_then(|l| l.nodes().get(idx).copied())
    }
}

/// Runs the complete probabilistic broadcast from `source`.
pub fn run_prob_broadcast(g: &Graph, source: NodeId) -> Result<ProbResult> {
    let state = ProbState::new(g, source)?;
    let initial_uncovered = state.uncovered.clone();
    let mut run = Run {
        g,
        state,
        sequence: vec![source],
        events: Vec::new(),
    };

    run.select_all(source);
    // (node, index of the next forward to delegate to)
    let mut stack = vec![(source, 0usize)];
    while let Some(&(node, idx)) = stack.last() {
        if run.state.uncovered.is_empty() {
            break;
        }
        match run.child(node, idx) {
            Some(next) => {
                stack.last_mut().expect("non-empty").1 += 1;
                run.events.push(ProbEvent::Delegated {
                    from: node,
                    to: next,
                });
                run.select_all(next);
                stack.push((next, 0));
            }
            None => {
                stack.pop();
            }
        }
    }

    let mut delivered = NodeSet::new();
    for &t in &run.sequence {
        delivered.extend_from(&g.closed_neighbors(t)?);
    }
    let fully_covered = run.state.uncovered.is_empty();
    Ok(ProbResult {
        forward_sequence: run.sequence,
        delivered,
        fully_covered,
        initial_uncovered,
        state: run.state,
        events: run.events,
    })
}

/// Validates that a value is a usable coverage count. Counts are unsigned in
/// this crate; this exists for callers holding signed data.
pub fn prob_value_checked(coverage: i64) -> Result<f64> {
    usize::try_from(coverage)
        .map(prob_value)
        .map_err(|_| Error::InvalidInput(format!("negative coverage count {coverage}")))
}
