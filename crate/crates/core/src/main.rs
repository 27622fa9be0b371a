use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use adhoc_broadcast::edge_list::{parse_edge_list, serialize_edge_list};
use adhoc_broadcast::experiment::{
    format_summary, run_experiment, summarize, to_csv, ExperimentConfig, RadiusMode, SourceMode,
};
use adhoc_broadcast::generate::{gen_connected_random_geometric, gen_random_geometric};
use adhoc_broadcast::oracle::{min_forward_set, DEFAULT_MAX_NODES};
use adhoc_broadcast::sim::{evaluate, run_algorithm};
use adhoc_broadcast::{Algorithm, Error, Graph, NodeId, Result};

/// Broadcast forward-node selection for ad hoc wireless networks
#[derive(Parser, Debug)]
#[command(name = "adhoc-broadcast", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a random geometric graph as an edge list
    Gen {
        #[arg(long)]
        nodes: usize,
        #[arg(long)]
        radius: f64,
        #[arg(long)]
        seed: u64,
        /// Retry with seed+1, seed+2, ... until the graph is connected
        #[arg(long)]
        connected: bool,
        #[arg(long, default_value_t = 1000)]
        max_attempts: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a single broadcast and print its metrics
    Run {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        source: usize,
        #[arg(long, value_parser = parse_algorithm)]
        algorithm: Algorithm,
        /// Also print one line per transmission
        #[arg(long)]
        trace: bool,
    },
    /// Compare algorithms over many random connected graphs, writing CSV
    Experiment {
        /// start:end:step, start:end or a single count
        #[arg(long, default_value = "5:30:5", value_parser = parse_range)]
        nodes: NodeCounts,
        #[arg(long, default_value_t = 100)]
        graphs_per_size: usize,
        /// A fixed radius, or "auto" to scale with the node count
        #[arg(long, default_value = "auto", value_parser = parse_radius)]
        radius: RadiusMode,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// random:K (K sources per graph) or fixed:ID
        #[arg(long, default_value = "random:3", value_parser = parse_source)]
        source: SourceMode,
        #[arg(long, default_value = "flood,dp,tdp,prob", value_delimiter = ',', value_parser = parse_algorithm)]
        algorithms: Vec<Algorithm>,
        #[arg(long, default_value_t = 1000)]
        max_attempts: usize,
        /// CSV destination; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print mean/sd of forward_count per (n, algorithm)
        #[arg(long)]
        summary: bool,
    },
    /// Exact minimum forward set for a small graph
    Oracle {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        source: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
        max_nodes: usize,
    },
}

fn parse_algorithm(s: &str) -> std::result::Result<Algorithm, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Clone, Debug)]
struct NodeCounts(Vec<usize>);

fn parse_range(s: &str) -> std::result::Result<NodeCounts, String> {
    let parts: Vec<usize> = s
        .split(':')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid number {p:?}"))
        })
        .collect::<std::result::Result<_, _>>()?;
    let (start, end, step) = match parts.as_slice() {
        [n] => (*n, *n, 1),
        [a, b] => (*a, *b, 1),
        [a, b, c] => (*a, *b, *c),
        _ => return Err(format!("expected start:end:step, got {s:?}")),
    };
    if step == 0 || start > end {
        return Err(format!("empty or invalid range {s:?}"));
    }
    Ok(NodeCounts((start..=end).step_by(step).collect()))
}

fn parse_radius(s: &str) -> std::result::Result<RadiusMode, String> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(RadiusMode::Auto);
    }
    s.parse::<f64>()
        .map(RadiusMode::Fixed)
        .map_err(|_| format!("invalid radius {s:?}"))
}

fn parse_source(s: &str) -> std::result::Result<SourceMode, String> {
    let (kind, value) = s
        .split_once(':')
        .ok_or_else(|| format!("expected random:K or fixed:ID, got {s:?}"))?;
    let value: usize = value
        .parse()
        .map_err(|_| format!("invalid number {value:?}"))?;
    match kind {
        "random" => Ok(SourceMode::Variable(value)),
        "fixed" => Ok(SourceMode::Fixed(NodeId(value))),
        _ => Err(format!("unknown source mode {kind:?}")),
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_edge_list(&fs::read_to_string(path)?)
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn execute(command: Command) -> Result<()> {
    match command {
        Command::Gen {
            nodes,
            radius,
            seed,
            connected,
            max_attempts,
            out,
        } => {
            let (graph, seed) = if connected {
                let g = gen_connected_random_geometric(nodes, radius, seed, max_attempts)?;
                (g.graph, g.seed)
            } else {
                (gen_random_geometric(nodes, radius, seed)?, seed)
            };
            let text = format!(
                "# random geometric graph: nodes={nodes} radius={radius} seed={seed}\n{}",
                serialize_edge_list(&graph)
            );
            emit(out.as_deref(), &text)
        }
        Command::Run {
            graph,
            source,
            algorithm,
            trace,
        } => {
            let g = load_graph(&graph)?;
            let t = run_algorithm(&g, NodeId(source), algorithm)?;
            let m = evaluate(&t, &g)?;
            println!("algorithm: {algorithm}");
            println!("source: {source}");
            println!("forward_count: {}", m.forward_count);
            println!("transmission_count: {}", m.transmission_count);
            println!("coverage_ratio: {:.6}", m.coverage_ratio);
            println!("redundant_receptions: {}", m.redundant_receptions);
            println!("delivered: {}", m.delivered);
            if trace {
                print!("{}", t.serialize());
            }
            Ok(())
        }
        Command::Experiment {
            nodes,
            graphs_per_size,
            radius,
            seed,
            source,
            algorithms,
            max_attempts,
            out,
            summary,
        } => {
            let config = ExperimentConfig {
                node_counts: nodes.0,
                graphs_per_size,
                radius,
                base_seed: seed,
                source_mode: source,
                algorithms,
                max_attempts,
            };
            let rows = run_experiment(&config)?;
            emit(out.as_deref(), &to_csv(&rows))?;
            if summary {
                let table = format_summary(&summarize(&rows)?);
                // keep stdout clean when it carries the CSV
                if out.is_some() {
                    print!("{table}");
                } else {
                    eprint!("{table}");
                }
            }
            Ok(())
        }
        Command::Oracle {
            graph,
            source,
            max_nodes,
        } => {
            let g = load_graph(&graph)?;
            let r = min_forward_set(&g, NodeId(source), max_nodes)?;
            let witness: Vec<String> = r.witness.iter().map(usize::to_string).collect();
            println!("optimum_size: {}", r.optimum_size);
            println!("witness: [{}]", witness.join(","));
            println!("explored: {}", r.explored);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
