#![allow(dead_code)]

use isograph::graph::{CombinatorialGraph, MetricGraph};
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected multigraph: random spanning tree plus `extra` edges, which may
/// be loops or parallel edges.
pub fn random_graph<R: Rng>(r: &mut R, max_vertices: usize, extra: usize, max_len: u64) -> MetricGraph {
    let n = r.gen_range(1..=max_vertices);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((r.gen_range(0..v), v));
    }
    let extra = if n == 1 { extra.max(1) } else { extra };
    for _ in 0..r.gen_range(0..=extra) {
        edges.push((r.gen_range(0..n), r.gen_range(0..n)));
    }
    if edges.is_empty() {
        edges.push((0, 0));
    }
    let lengths = edges.iter().map(|_| r.gen_range(1..=max_len)).collect();
    MetricGraph::new(CombinatorialGraph::new(n, edges).unwrap(), lengths, BigRational::from_integer(1.into())).unwrap()
}

/// Simple connected graph with unit lengths.
pub fn random_simple_graph<R: Rng>(r: &mut R, n: usize, p: f64) -> CombinatorialGraph {
    loop {
        let mut edges = Vec::new();
        for v in 1..n {
            edges.push((r.gen_range(0..v), v));
        }
        for u in 0..n {
            for v in u + 1..n {
                if r.gen_bool(p) && !edges.contains(&(u, v)) {
                    edges.push((u, v));
                }
            }
        }
        let g = CombinatorialGraph::new(n, edges).unwrap();
        if g.is_simple() {
            return g;
        }
    }
}

/// Random permutation of `0..n`.
pub fn permutation<R: Rng>(r: &mut R, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(r);
    p
}

pub fn data(name: &str) -> std::path::PathBuf {
    std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}
