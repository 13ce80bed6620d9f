//! Canonical labeling of multigraphs by colour refinement plus
//! individualization, with pruning by discovered automorphisms.

use super::{CombinatorialGraph, UnionFind};

/// Label-independent fingerprint: vertex count plus the upper triangle
/// (diagonal included) of the multiplicity matrix in canonical order.
/// Comparison and hashing ignore the labeling.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    n: usize,
    code: Vec<u32>,
    /// `labeling[v]` is the canonical position of vertex `v`.
    labeling: Vec<usize>,
}

impl CanonicalForm {
    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn code(&self) -> &[u32] {
        &self.code
    }

    pub fn labeling(&self) -> &[usize] {
        &self.labeling
    }

    /// Graph with vertices in canonical order and edges sorted.
    pub fn graph(&self) -> CombinatorialGraph {
        let mut edges = Vec::new();
        let mut k = 0;
        for i in 0..self.n {
            for j in i..self.n {
                for _ in 0..self.code[k] {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        CombinatorialGraph::new(self.n, edges).expect("canonical code in range")
    }

    fn key(&self) -> (usize, &[u32]) {
        (self.n, &self.code)
    }
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for CanonicalForm {}

impl std::hash::Hash for CanonicalForm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

struct Search<'a> {
    m: &'a [Vec<u32>],
    n: usize,
    best: Option<(Vec<u32>, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

pub fn canonical_form(g: &CombinatorialGraph) -> CanonicalForm {
    let m = g.multiplicity_matrix();
    let n = g.n_vertices();
    if n == 0 {
        return CanonicalForm { n, code: Vec::new(), labeling: Vec::new() };
    }
    let deg = g.valences();
    let init: Vec<(u32, usize)> = (0..n).map(|v| (m[v][v], deg[v])).collect();
    let colors = rank(&init);
    let mut s = Search { m: &m, n, best: None, automorphisms: Vec::new() };
    let colors = s.refine(colors);
    s.descend(colors, &mut Vec::new());
    let (code, labeling) = s.best.expect("at least one leaf");
    CanonicalForm { n, code, labeling }
}

pub fn is_isomorphic(g1: &CombinatorialGraph, g2: &CombinatorialGraph) -> bool {
    if g1.n_vertices() != g2.n_vertices() || g1.n_edges() != g2.n_edges() {
        return false;
    }
    let (mut d1, mut d2) = (g1.valences(), g2.valences());
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return false;
    }
    canonical_form(g1).key() == canonical_form(g2).key()
}

/// Dense ranks of `keys`, ordered by key value.
fn rank<T: Ord + Clone>(keys: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap()).collect()
}

fn n_cells(colors: &[usize]) -> usize {
    colors.iter().max().map_or(0, |&c| c + 1)
}

impl Search<'_> {
    fn refine(&self, mut colors: Vec<usize>) -> Vec<usize> {
        let mut cells = n_cells(&colors);
        loop {
            let sigs: Vec<(usize, Vec<(usize, u32)>)> = (0..self.n)
                .map(|v| {
                    let mut nb: Vec<(usize, u32)> = (0..self.n)
                        .filter(|&u| u != v && self.m[v][u] > 0)
                        .map(|u| (colors[u], self.m[v][u]))
                        .collect();
                    nb.sort_unstable();
                    (colors[v], nb)
                })
                .collect();
            let next = rank(&sigs);
            let c = n_cells(&next);
            if c == cells {
                return next;
            }
            cells = c;
            colors = next;
        }
    }

    fn descend(&mut self, colors: Vec<usize>, fixed: &mut Vec<usize>) {
        let n = self.n;
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c] += 1;
        }
        let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
            self.leaf(colors);
            return;
        };
        let candidates: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !tried.is_empty() {
                let mut uf = self.orbits_fixing(fixed);
                let ov = uf.find(v);
                if tried.iter().any(|&t| uf.find(t) == ov) {
                    continue;
                }
            }
            tried.push(v);
            let split: Vec<usize> = (0..n)
                .map(|u| if u == v { 2 * colors[u] } else { 2 * colors[u] + 1 })
                .collect();
            let refined = self.refine(rank(&split));
            fixed.push(v);
            self.descend(refined, fixed);
            fixed.pop();
        }
    }

    fn orbits_fixing(&self, fixed: &[usize]) -> UnionFind {
        let mut uf = UnionFind::new(self.n);
        for a in &self.automorphisms {
            if fixed.iter().all(|&f| a[f] == f) {
                for (v, &w) in a.iter().enumerate() {
                    uf.union(v, w);
                }
            }
        }
        uf
    }

    fn leaf(&mut self, pos: Vec<usize>) {
        let n = self.n;
        let mut inv = vec![0; n];
        for (v, &p) in pos.iter().enumerate() {
            inv[p] = v;
        }
        let mut code = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                code.push(self.m[inv[i]][inv[j]]);
            }
        }
        match &self.best {
            None => self.best = Some((code, pos)),
            Some((best, bpos)) => {
                if code < *best {
                    self.best = Some((code, pos));
                } else if code == *best {
                    let mut binv = vec![0; n];
                    for (v, &p) in bpos.iter().enumerate() {
                        binv[p] = v;
                    }
                    let aut: Vec<usize> = (0..n).map(|v| binv[pos[v]]).collect();
                    self.automorphisms.push(aut);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> CombinatorialGraph {
        CombinatorialGraph::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn basic_isomorphisms() {
        let k3 = g(3, &[(0, 1), (1, 2), (0, 2)]);
        let c3 = g(3, &[(2, 0), (0, 1), (2, 1)]);
        assert!(is_isomorphic(&k3, &c3));
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let s3 = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(!is_isomorphic(&p4, &s3));
    }

    #[test]
    fn loops_and_multiplicities_respected() {
        let a = g(2, &[(0, 0), (0, 1), (0, 1)]);
        let b = g(2, &[(1, 0), (1, 1), (0, 1)]);
        let c = g(2, &[(1, 1), (0, 1), (0, 0)]);
        assert!(is_isomorphic(&a, &b));
        assert!(!is_isomorphic(&a, &c));
    }

    #[test]
    fn regular_graphs_need_backtracking() {
        // two 6-cycles vs two triangles: same degrees, same refinement
        let c6 = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let tt = g(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(!is_isomorphic(&c6, &tt));
        let c6b = c6.relabel(&[3, 0, 5, 1, 4, 2]);
        assert!(is_isomorphic(&c6, &c6b));
        assert_eq!(canonical_form(&c6).graph(), canonical_form(&c6b).graph());
    }

    #[test]
    fn large_star_is_fast() {
        let star = g(14, &(1..14).map(|i| (0, i)).collect::<Vec<_>>());
        let rel = star.relabel(&(0..14).rev().collect::<Vec<_>>());
        assert!(is_isomorphic(&star, &rel));
        let empty = g(12, &[]);
        assert_eq!(canonical_form(&empty).code().iter().sum::<u32>(), 0);
    }
}
