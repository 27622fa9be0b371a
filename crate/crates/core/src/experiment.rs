//! Forward-node-count comparisons over random connected geometric graphs.

use std::fmt::Write as _;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::generate::gen_connected_random_geometric;
use crate::graph::{Graph, NodeId};
use crate::sim::{evaluate, run_algorithm, Algorithm};

pub const CSV_HEADER: &str =
    "algorithm,n_nodes,graph_seed,source,forward_count,transmission_count,coverage_ratio,redundant_receptions";

/// Source-drawing RNG is keyed off the graph seed mixed with this constant.
const SOURCE_STREAM: u64 = 0x5eed_50c3_0000_0001;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum RadiusMode {
    /// `1.5 * sqrt(ln n / (pi n))`, tracking the connectivity threshold.
    Auto,
    Fixed(f64),
}

impl RadiusMode {
    pub fn radius_for(self, n: usize) -> f64 {
        match self {
            RadiusMode::Fixed(r) => r,
            RadiusMode::Auto => auto_radius(n),
        }
    }
}

pub fn auto_radius(n: usize) -> f64 {
    if n < 2 {
        return std::f64::consts::SQRT_2;
    }
    let n = n as f64;
    1.5 * (n.ln() / (std::f64::consts::PI * n)).sqrt()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SourceMode {
    /// This many distinct sources drawn per graph (capped at the node count).
    Variable(usize),
    Fixed(NodeId),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub node_counts: Vec<usize>,
    pub graphs_per_size: usize,
    pub radius: RadiusMode,
    pub base_seed: u64,
    pub source_mode: SourceMode,
    pub algorithms: Vec<Algorithm>,
    /// Connectivity retries per graph. Graph `i` starts from seed
    /// `base_seed + i * max_attempts`, so retries never reuse another
    /// graph's seeds.
    pub max_attempts: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            node_counts: (5..=30).step_by(5).collect(),
            graphs_per_size: 100,
            radius: RadiusMode::Auto,
            base_seed: 1,
            source_mode: SourceMode::Variable(3),
            algorithms: Algorithm::ALL.to_vec(),
            max_attempts: 1000,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidInput(m.to_string()));
        if self.node_counts.is_empty() {
            return bad("no node counts given");
        }
        if self.node_counts.contains(&0) {
            return bad("node counts must be at least 1");
        }
        if self.algorithms.is_empty() {
            return bad("no algorithms selected");
        }
        if self.max_attempts == 0 {
            return bad("max_attempts must be at least 1");
        }
        match self.source_mode {
            SourceMode::Variable(0) => return bad("sources per graph must be at least 1"),
            SourceMode::Fixed(id) => {
                let min = self.node_counts.iter().copied().min().unwrap_or(0);
                if id.index() >= min {
                    return Err(Error::InvalidInput(format!(
                        "fixed source {id} is not below the smallest node count {min}"
                    )));
                }
            }
            SourceMode::Variable(_) => {}
        }
        if let RadiusMode::Fixed(r) = self.radius {
            if !(r.is_finite() && r > 0.0) {
                return bad("radius must be positive and finite");
            }
        }
        Ok(())
    }

    fn graph_seed(&self, index: usize) -> u64 {
        self.base_seed
            .wrapping_add((index as u64).wrapping_mul(self.max_attempts as u64))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResultRow {
    pub algorithm: Algorithm,
    pub n_nodes: usize,
    /// Seed that produced the (connected) graph.
    pub graph_seed: u64,
    pub source: NodeId,
    pub forward_count: usize,
    pub transmission_count: usize,
    pub coverage_ratio: f64,
    pub redundant_receptions: usize,
}

impl ResultRow {
    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{:.6},{}",
            self.algorithm,
            self.n_nodes,
            self.graph_seed,
            self.source,
            self.forward_count,
            self.transmission_count,
            self.coverage_ratio,
            self.redundant_receptions
        )
    }
}

pub fn sources_for(graph: &Graph, graph_seed: u64, mode: SourceMode) -> Vec<NodeId> {
    match mode {
        SourceMode::Fixed(id) => vec![id],
        SourceMode::Variable(k) => {
            let n = graph.node_count();
            let mut rng = ChaCha8Rng::seed_from_u64(graph_seed ^ SOURCE_STREAM);
            let mut picked: Vec<NodeId> = sample(&mut rng, n, k.min(n))
                .into_iter()
                .map(NodeId)
                .collect();
            picked.sort();
            picked
        }
    }
}

fn run_graph(
    config: &ExperimentConfig,
    algorithms: &[Algorithm],
    n: usize,
    index: usize,
) -> Result<Vec<ResultRow>> {
    let generated = gen_connected_random_geometric(
        n,
        config.radius.radius_for(n),
        config.graph_seed(index),
        config.max_attempts,
    )?;
    let g = &generated.graph;
    let mut rows = Vec::new();
    for source in sources_for(g, generated.seed, config.source_mode) {
        for &algorithm in algorithms {
            let metrics = evaluate(&run_algorithm(g, source, algorithm)?, g)?;
            rows.push(ResultRow {
                algorithm,
                n_nodes: n,
                graph_seed: generated.seed,
                source,
                forward_count: metrics.forward_count,
                transmission_count: metrics.transmission_count,
                coverage_ratio: metrics.coverage_ratio,
                redundant_receptions: metrics.redundant_receptions,
            });
        }
    }
    Ok(rows)
}

/// Runs every configured algorithm on every (graph, source) pair. Rows come
/// out ordered by node count, graph index, source, then algorithm,
/// regardless of how the work was scheduled.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Vec<ResultRow>> {
    config.validate()?;
    let mut algorithms = config.algorithms.clone();
    algorithms.sort();
    algorithms.dedup();

    let jobs: Vec<(usize, usize)> = config
        .node_counts
        .iter()
        .flat_map(|&n| (0..config.graphs_per_size).map(move |i| (n, i)))
        .collect();
    let per_graph: Vec<Vec<ResultRow>> = jobs
        .par_iter()
        .map(|&(n, i)| run_graph(config, &algorithms, n, i))
        .collect::<Result<_>>()?;
    Ok(per_graph.into_iter().flatten().collect())
}

pub fn to_csv(rows: &[ResultRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.to_csv_line());
        out.push('\n');
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct SummaryCell {
    pub algorithm: Algorithm,
    pub n_nodes: usize,
    pub runs: usize,
    pub mean_forward: f64,
    /// Population standard deviation.
    pub sd_forward: f64,
}

/// Mean and standard deviation of `forward_count` per (n, algorithm).
pub fn summarize(rows: &[ResultRow]) -> Result<Vec<SummaryCell>> {
    if rows.is_empty() {
        return Err(Error::InvalidInput("no rows to summarize".into()));
    }
    let mut groups: std::collections::BTreeMap<(usize, Algorithm), Vec<f64>> = Default::default();
    for row in rows {
        groups
            .entry((row.n_nodes, row.algorithm))
            .or_default()
            .push(row.forward_count as f64);
    }
    Ok(groups
        .into_iter()
        .map(|((n_nodes, algorithm), values)| {
            let count = values.len() as f64;
            let mean = values.iter().sum::<f64>() / count;
            let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / count;
            SummaryCell {
                algorithm,
                n_nodes,
                runs: values.len(),
                mean_forward: mean,
                sd_forward: var.sqrt(),
            }
        })
        .collect())
}

pub fn format_summary(cells: &[SummaryCell]) -> String {
    let mut out = format!(
        "{:>7} {:>9} {:>6} {:>12} {:>10}\n",
        "n_nodes", "algorithm", "runs", "mean_fwd", "sd_fwd"
    );
    for c in cells {
        let _ = writeln!(
            out,
            "{:>7} {:>9} {:>6} {:>12.4} {:>10.4}",
            c.n_nodes, c.algorithm, c.runs, c.mean_forward, c.sd_forward
        );
    }
    out
}
