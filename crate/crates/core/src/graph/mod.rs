//! Multigraph data model, metric graphs with exact integer lengths, and the
//! combinatorial invariants used by the search pipeline.

mod canon;
mod charpoly;
mod graph6;
mod metric;

pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use charpoly::{char_poly, CharPoly};
pub use graph6::{encode_graph6, parse_graph6, read_graph6_lines};
pub use metric::{common_rescale, common_unit, MetricGraph};

use crate::{Error, Result};

/// Undirected multigraph; self-loops and parallel edges are allowed.
///
/// Edge order fixes bond numbering (edge `e` owns bonds `2e` and `2e + 1`)
/// but plays no role in isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CombinatorialGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl CombinatorialGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            let bad = if u >= n { Some(u) } else if v >= n { Some(v) } else { None };
            if let Some(vertex) = bad {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
        }
        Ok(CombinatorialGraph { n, edges })
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Valence of every vertex; a self-loop counts twice.
    pub fn valences(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn valence(&self, v: usize) -> usize {
        self.edges.iter().map(|&(a, b)| (a == v) as usize + (b == v) as usize).sum()
    }

    /// Symmetric multiplicity matrix; the diagonal counts self-loops once each.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<u32>> {
        let mut m = vec![vec![0u32; self.n]; self.n];
        for &(u, v) in &self.edges {
            if u == v {
                m[u][u] += 1;
            } else {
                m[u][v] += 1;
                m[v][u] += 1;
            }
        }
        m
    }

    pub fn has_self_loops(&self) -> bool {
        self.edges.iter().any(|&(u, v)| u == v)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().all(|&(u, v)| u != v && seen.insert((u.min(v), u.max(v))))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut uf = UnionFind::new(self.n);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        let root = uf.find(0);
        (1..self.n).all(|v| uf.find(v) == root)
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// Applies a vertex relabeling `v -> perm[v]`, keeping edge order.
    pub fn relabel(&self, perm: &[usize]) -> CombinatorialGraph {
        assert_eq!(perm.len(), self.n);
        CombinatorialGraph {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect(),
        }
    }

    /// Graphviz rendering for external viewers.
    pub fn to_dot(&self, lengths: Option<&[u64]>) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.n {
            s.push_str(&format!("  {v};\n"));
        }
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            match lengths {
                Some(l) => s.push_str(&format!("  {u} -- {v} [label=\"{}\"];\n", l[e])),
                None => s.push_str(&format!("  {u} -- {v};\n")),
            }
        }
        s.push_str("}\n");
        s
    }
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Union keeping the smaller root, so merges are order-independent.
    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}
