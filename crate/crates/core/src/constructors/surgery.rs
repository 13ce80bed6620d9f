use crate::graph::{common_unit, CombinatorialGraph, MetricGraph};
use crate::{Error, Result};

/// Brings two graphs to their common unit.
fn same_unit(a: &MetricGraph, b: &MetricGraph) -> Result<(MetricGraph, MetricGraph)> {
    let u = common_unit(a.unit(), b.unit());
    Ok((a.to_unit(&u)?, b.to_unit(&u)?))
}

/// Identifies vertex `u` of `h` with vertex `v` of `g`. Vertices of `h` keep
/// their numbers; those of `g` other than `v` follow in order.
pub fn graft(h: &MetricGraph, u: usize, g: &MetricGraph, v: usize) -> Result<MetricGraph> {
    h.graph().check_vertex(u)?;
    g.graph().check_vertex(v)?;
    let (h, g) = same_unit(h, g)?;
    let nh = h.n_vertices();
    let map = |x: usize| match x.cmp(&v) {
        std::cmp::Ordering::Equal => u,
        std::cmp::Ordering::Less => nh + x,
        std::cmp::Ordering::Greater => nh + x - 1,
    };
    let mut edges = h.graph().edges().to_vec();
    edges.extend(g.graph().edges().iter().map(|&(a, b)| (map(a), map(b))));
    let mut lengths = h.lengths().to_vec();
    lengths.extend_from_slice(g.lengths());
    let cg = CombinatorialGraph::new(nh + g.n_vertices() - 1, edges)?;
    MetricGraph::new(cg, lengths, h.unit().clone())
}

/// Two copies identified at every vertex: each edge becomes a parallel
/// pair. Edges of the second copy follow those of the first.
pub fn double(g: &MetricGraph) -> Result<MetricGraph> {
    let mut edges = g.graph().edges().to_vec();
    edges.extend_from_slice(g.graph().edges());
    let mut lengths = g.lengths().to_vec();
    lengths.extend_from_slice(g.lengths());
    let cg = CombinatorialGraph::new(g.n_vertices(), edges)?;
    MetricGraph::new(cg, lengths, g.unit().clone())
}

/// Pumpkin chain with its pumpkins reordered: position `i` receives pumpkin
/// `perm[i]`. Only reorderings inside maximal runs of equal degree are
/// allowed.
pub fn permute_pumpkin_chain(chain: &[(usize, u64)], perm: &[usize]) -> Result<MetricGraph> {
    let n = chain.len();
    let mut seen = vec![false; n];
    if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::IllegalPermutation(format!("{perm:?} is not a permutation of 0..{n}")));
    }
    let mut run = vec![0usize; n];
    for i in 1..n {
        run[i] = run[i - 1] + usize::from(chain[i].0 != chain[i - 1].0);
    }
    if let Some(i) = (0..n).find(|&i| run[perm[i]] != run[i]) {
        return Err(Error::IllegalPermutation(format!(
            "position {i} would receive a pumpkin from another degree run"
        )));
    }
    let reordered: Vec<(usize, u64)> = perm.iter().map(|&p| chain[p]).collect();
    super::FamilySpec::PumpkinChain(reordered).build()
}

/// Replaces every edge `(a, b)` by a copy of `gamma`, gluing `gamma`'s
/// vertex `s` to `a` and `t` to `b`. Original lengths are ignored.
pub fn replace_edges(g: &MetricGraph, gamma: &MetricGraph, s: usize, t: usize) -> Result<MetricGraph> {
    gamma.graph().check_vertex(s)?;
    gamma.graph().check_vertex(t)?;
    if s == t {
        return Err(Error::InvalidSpec("gluing vertices must differ".into()));
    }
    let inner: Vec<usize> = (0..gamma.n_vertices()).filter(|&x| x != s && x != t).collect();
    let mut n = g.n_vertices();
    let mut edges = Vec::new();
    let mut lengths = Vec::new();
    for &(a, b) in g.graph().edges() {
        let mut map = vec![0usize; gamma.n_vertices()];
        map[s] = a;
        map[t] = b;
        for &x in &inner {
            map[x] = n;
            n += 1;
        }
        for (&(x, y), &l) in gamma.graph().edges().iter().zip(gamma.lengths()) {
            edges.push((map[x], map[y]));
            lengths.push(l);
        }
    }
    MetricGraph::new(CombinatorialGraph::new(n, edges)?, lengths, gamma.unit().clone())
}
