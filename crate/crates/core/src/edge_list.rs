//! Plain-text edge-list format.
//!
//! ```text
//! # comment
//! 4
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The first non-comment line is the node count, each further non-empty line
//! one edge. Serialization writes `u v` with `u < v`, sorted.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut node_count: Option<usize> = None;
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let fields: Vec<&str> = line.split_whitespace().collect();

        let Some(n) = node_count else {
            if fields.len() != 1 {
                return Err(err(format!("expected node count, found {line:?}")));
            }
            let n = fields[0]
                .parse::<usize>()
                .map_err(|_| err(format!("invalid node count {:?}", fields[0])))?;
            node_count = Some(n);
            continue;
        };

        if fields.len() != 2 {
            return Err(err(format!("expected \"u v\", found {line:?}")));
        }
        let mut ids = [0usize; 2];
        for (slot, field) in ids.iter_mut().zip(&fields) {
            *slot = field
                .parse::<usize>()
                .map_err(|_| err(format!("invalid node id {field:?}")))?;
            if *slot >= n {
                return Err(err(format!("node id {slot} out of range for {n} nodes")));
            }
        }
        let (u, v) = (ids[0].min(ids[1]), ids[0].max(ids[1]));
        if u == v {
            return Err(err(format!("self-loop on node {u}")));
        }
        if !seen.insert((u, v)) {
            return Err(err(format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }

    let n = node_count.ok_or(Error::Parse {
        line: 0,
        message: "missing node count".into(),
    })?;
    Graph::from_edges(n, edges)
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.node_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
