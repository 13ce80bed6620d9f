//! Generation of small graph corpora by vertex augmentation with
//! canonical-form deduplication.

use std::collections::HashSet;
use std::io::Write;

use rayon::prelude::*;

use crate::graph::{canonical_form, encode_graph6, CombinatorialGraph};
use crate::Result;

fn dedup_sorted(candidates: impl ParallelIterator<Item = CombinatorialGraph>) -> Vec<CombinatorialGraph> {
    let codes: HashSet<Vec<u32>> = candidates
        .map(|g| canonical_form(&g).code().to_vec())
        .fold(HashSet::new, |mut s, c| {
            s.insert(c);
            s
        })
        .reduce(HashSet::new, |mut a, mut b| {
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
            a.extend(b);
            a
        });
    let mut codes: Vec<Vec<u32>> = codes.into_iter().collect();
    codes.sort();
    codes.into_iter().map(|c| from_code(&c)).collect()
}

fn from_code(code: &[u32]) -> CombinatorialGraph {
    // upper triangle with diagonal has n(n+1)/2 entries
    let n = ((((8 * code.len() + 1) as f64).sqrt() as usize) - 1) / 2;
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i..n {
            for _ in 0..code[k] {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    CombinatorialGraph::new(n, edges).expect("code indices in range")
}

fn with_new_vertex(g: &CombinatorialGraph, neighbours: impl Iterator<Item = usize>) -> CombinatorialGraph {
    let n = g.n_vertices();
    let mut edges = g.edges().to_vec();
    edges.extend(neighbours.map(|u| (u, n)));
    CombinatorialGraph::new(n + 1, edges).expect("new vertex in range")
}

/// Connected simple graphs on `n` vertices up to isomorphism, in canonical
/// form, sorted by canonical code. Every connected graph loses a non-cut
/// vertex and stays connected, so growing connected graphs suffices.
pub fn connected_graphs(n: usize) -> Vec<CombinatorialGraph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![CombinatorialGraph::new(1, vec![]).unwrap()];
    for k in 1..n {
        level = dedup_sorted(level.par_iter().flat_map_iter(|g| {
            (1u32..1 << k).map(move |mask| with_new_vertex(g, (0..k).filter(move |&u| mask >> u & 1 == 1)))
        }));
    }
    level
}

/// Trees on `n` vertices up to isomorphism; every tree has a leaf.
pub fn trees(n: usize) -> Vec<CombinatorialGraph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![CombinatorialGraph::new(1, vec![]).unwrap()];
    for k in 1..n {
        level = dedup_sorted(level.par_iter().flat_map_iter(|g| (0..k).map(move |u| with_new_vertex(g, std::iter::once(u)))));
    }
    level
}

/// One graph6 line per graph.
pub fn write_graph6<W: Write>(mut w: W, graphs: &[CombinatorialGraph]) -> Result<()> {
    for g in graphs {
        writeln!(w, "{}", encode_graph6(g)?)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
        assert!(connected_graphs(5).iter().all(|g| g.is_connected() && g.is_simple()));
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }
}
