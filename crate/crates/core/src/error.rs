use crate::graph::NodeId;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("node {node} is not in the graph (node count {node_count})")]
    InvalidNode { node: NodeId, node_count: usize },

    #[error("nodes {0} and {1} are not adjacent")]
    NotAdjacent(NodeId, NodeId),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is not connected")]
    Disconnected,

    #[error(
        "no connected graph with {nodes} nodes after {attempts} attempts (last seed {last_seed})"
    )]
    Generation {
        nodes: usize,
        attempts: usize,
        last_seed: u64,
    },

    #[error("instance too large: {size} exceeds cap {cap}")]
    TooLarge { size: usize, cap: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Generation { .. } | Error::TooLarge { .. } => 2,
            _ => 1,
        }
    }
}
