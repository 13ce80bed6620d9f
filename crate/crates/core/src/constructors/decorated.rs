use std::collections::HashSet;

use num_rational::BigRational;
use num_traits::One;

use crate::graph::{canonical_form, CombinatorialGraph, MetricGraph};
use crate::{Error, Result};

/// Equilateral decorations of a cycle, in deterministic order.
#[derive(Clone, Debug)]
pub struct DecoratedLoops {
    pub graphs: Vec<MetricGraph>,
    /// Set when the cap stopped the enumeration early.
    pub truncated: bool,
}

/// All non-isomorphic graphs made of an `n`-cycle with pendant trees and at
/// most `m` vertices, unit edge lengths. Graphs come sorted by vertex count,
/// then by canonical code. At most `cap` graphs are produced.
pub fn decorated_loop_enumerator(n: usize, m: usize, cap: usize) -> Result<DecoratedLoops> {
    if n < 3 || m < n {
        return Err(Error::InvalidSpec(format!("need n >= 3 and m >= n, got n={n}, m={m}")));
    }
    let cycle = CombinatorialGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect())?;
    let mut level = vec![canonical_form(&cycle).graph()];
    let mut all = level.clone();
    let mut truncated = false;
    'grow: for size in n + 1..=m {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for v in 0..size - 1 {
                let mut edges = g.edges().to_vec();
                edges.push((v, size - 1));
                let cf = canonical_form(&CombinatorialGraph::new(size, edges)?);
                if seen.insert(cf.code().to_vec()) {
                    next.push(cf);
                }
            }
        }
        next.sort();
        level = next.iter().map(|cf| cf.graph()).collect();
        for g in &level {
            if all.len() >= cap {
                truncated = true;
                break 'grow;
            }
            all.push(g.clone());
        }
    }
    let graphs = all
        .into_iter()
        .map(|g| MetricGraph::equilateral(g, BigRational::one()))
        .collect::<Result<_>>()?;
    Ok(DecoratedLoops { graphs, truncated })
}
