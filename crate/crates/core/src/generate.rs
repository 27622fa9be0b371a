//! Seeded random geometric (unit disk) graphs in the unit square.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId, NodeSet};

/// A connected graph together with the seed that produced it.
#[derive(Clone, Debug)]
pub struct GeneratedGraph {
    pub graph: Graph,
    pub seed: u64,
    pub attempts: usize,
}

/// Places `n` points uniformly in the unit square and joins every pair at
/// Euclidean distance `<= radius`. A pure function of its arguments.
pub fn gen_random_geometric(n: usize, radius: f64, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidInput("node count must be at least 1".into()));
    }
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Error::InvalidInput(format!(
            "radius must be positive and finite, got {radius}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let points: Vec<(f64, f64)> = (0..n)
        .map(|_| (rng.gen::<f64>(), rng.gen::<f64>()))
        .collect();

    let r2 = radius * radius;
    let mut adjacency = vec![NodeSet::new(); n];
    for u in 0..n {
        for v in (u + 1)..n {
            let dx = points[u].0 - points[v].0;
            let dy = points[u].1 - points[v].1;
            if dx * dx + dy * dy <= r2 {
                adjacency[u].insert(NodeId(v));
                adjacency[v].insert(NodeId(u));
            }
        }
    }
    Ok(Graph::from_adjacency(adjacency))
}

/// Tries seeds `seed, seed + 1, ...` until the geometric graph is connected.
pub fn gen_connected_random_geometric(
    n: usize,
    radius: f64,
    seed: u64,
    max_attempts: usize,
) -> Result<GeneratedGraph> {
    if max_attempts == 0 {
        return Err(Error::InvalidInput(
            "max_attempts must be at least 1".into(),
        ));
    }
    let mut last_seed = seed;
    for attempt in 0..max_attempts {
        last_seed = seed.wrapping_add(attempt as u64);
        let graph = gen_random_geometric(n, radius, last_seed)?;
        if graph.is_connected() {
            return Ok(GeneratedGraph {
                graph,
                seed: last_seed,
                attempts: attempt + 1,
            });
        }
    }
    Err(Error::Generation {
        nodes: n,
        attempts: max_attempts,
        last_seed,
    })
}
