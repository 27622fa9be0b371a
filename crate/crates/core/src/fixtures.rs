//! Small hand-built networks with known broadcast behavior.
//!
//! Both fixtures label their hosts from 1; internally host `k` is node
//! `k - 1`. Use [`host`] to translate.

use crate::graph::{Graph, NodeId};

/// Node id of the host labeled `label` (1-based).
pub fn host(label: usize) -> NodeId {
    assert!(label >= 1, "host labels start at 1");
    NodeId(label - 1)
}

fn from_labeled(hosts: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(hosts, edges.iter().map(|&(a, b)| (a - 1, b - 1)))
        .expect("fixture edges are valid")
}

/// Six hosts. From host 1 the uncovered nodes are {5, 6}; host 3 reaches
/// both, hosts 2 and 4 one each.
pub fn six_node_network() -> Graph {
    from_labeled(6, &[(1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (3, 6), (4, 6)])
}

/// Twelve hosts. The probabilistic broadcast from host 6 forwards through
/// 7, 2 and 9, then hands the source role to 7, which forwards through 8.
pub fn twelve_node_network() -> Graph {
    from_labeled(
        12,
        &[
            (6, 2),
            (6, 5),
            (6, 7),
            (6, 9),
            (7, 4),
            (7, 8),
            (7, 11),
            (2, 1),
            (2, 3),
            (9, 10),
            (8, 12),
            (11, 12),
            (5, 4),
        ],
    )
}

/// Three mutually adjacent hosts `u`, `v`, `w` as nodes 0, 1, 2.
pub fn triangle() -> Graph {
    Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).expect("valid")
}
