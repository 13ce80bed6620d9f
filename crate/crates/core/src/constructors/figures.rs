use crate::graph::MetricGraph;
use crate::{Error, Result};

pub const FIGURES: &[&str] = &["3a", "3b", "3c", "6c", "6d", "8a", "8b", "8c"];

/// Small graphs drawn in the figures, with unit 1.
pub fn figure(name: &str) -> Result<MetricGraph> {
    let e: &[(usize, usize, u64)] = match name {
        "3a" => &[(0, 0, 8)],
        // pendant, loop, pendant at one vertex
        "3b" => &[(1, 0, 2), (0, 0, 4), (0, 2, 2)],
        // 3b with its loop replaced by a half-size 3b glued at its loop midpoint
        "3c" => &[(1, 0, 2), (0, 3, 1), (3, 0, 1), (0, 2, 2), (3, 4, 1), (3, 5, 1)],
        // lasso: loop 4 with a unit pendant
        "6c" => &[(0, 0, 4), (0, 1, 1)],
        "6d" => &[(0, 1, 1), (1, 2, 1), (1, 2, 1), (2, 3, 1), (2, 4, 1)],
        // tadpole, loop 2 and tail 2; x1 = 2 (loop antipode), x2 = 3 (tail midpoint)
        "8a" => &[(0, 2, 1), (2, 0, 1), (0, 3, 1), (3, 1, 1)],
        "8b" => &[(0, 2, 1), (2, 0, 1), (0, 3, 1), (3, 1, 1), (2, 4, 1)],
        "8c" => &[(0, 2, 1), (2, 0, 1), (0, 3, 1), (3, 1, 1), (3, 4, 1)],
        _ => return Err(Error::InvalidSpec(format!("unknown figure `{name}`"))),
    };
    let n = e.iter().map(|&(u, v, _)| u.max(v)).max().unwrap_or(0) + 1;
    MetricGraph::from_edges(n, e)
}
