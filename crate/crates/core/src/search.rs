//! Bulk discovery of isospectral sets in graph corpora.
//!
//! Graphs are normalized (total length one by default), optionally bucketed
//! by the characteristic polynomial of `Tx - A`, grouped by exact secular
//! polynomial, screened for isomorphic duplicates and finally re-verified
//! through the bond-matrix route.

use std::collections::HashMap;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;

use num_rational::BigRational;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::graph::{canonical_form, char_poly, encode_graph6, is_isomorphic, parse_graph6, CanonicalForm, CharPoly, CombinatorialGraph, MetricGraph};
use crate::poly::IntPoly;
use crate::secular::{secular_polynomial_vertex_route, SecularPolynomial};
use crate::spectrum::is_isospectral;
use crate::{json, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// Every edge has length `1/E`.
    TotalLengthOne,
    /// Every edge has length 1, so graphs of different size are compared
    /// at different total lengths.
    UnitEdges,
}

impl Normalization {
    pub fn name(self) -> &'static str {
        match self {
            Normalization::TotalLengthOne => "total-length-1",
            Normalization::UnitEdges => "unit-edges",
        }
    }

    fn apply(self, g: &CombinatorialGraph) -> Result<MetricGraph> {
        match self {
            Normalization::TotalLengthOne => MetricGraph::equilateral_normalized(g.clone()),
            Normalization::UnitEdges => MetricGraph::equilateral(g.clone(), BigRational::from_integer(1.into())),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub prefilter: bool,
    pub normalization: Normalization,
    pub jobs: usize,
    /// Skip every input that is not a tree.
    pub trees_only: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { prefilter: true, normalization: Normalization::TotalLengthOne, jobs: 1, trees_only: false }
    }
}

/// One input graph with its provenance.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub source: String,
    /// graph6 text when the graph is simple, otherwise an edge list.
    pub encoding: String,
    pub graph: CombinatorialGraph,
}

impl CorpusEntry {
    pub fn new(source: String, graph: CombinatorialGraph) -> Self {
        let encoding = encode_graph6(&graph).unwrap_or_else(|_| format!("{:?}", graph.edges()));
        CorpusEntry { source, encoding, graph }
    }
}

/// Reads a graph6 file; sources are `path:line` with 1-based lines.
pub fn read_corpus(path: &Path) -> Result<Vec<CorpusEntry>> {
    let reader = BufReader::new(File::open(path)?);
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t == ">>graph6<<" {
            continue;
        }
        let graph = parse_graph6(t).map_err(|e| match e {
            Error::Parse { offset, msg } => Error::Parse { offset, msg: format!("{}:{}: {msg}", path.display(), i + 1) },
            other => other,
        })?;
        out.push(CorpusEntry { source: format!("{}:{}", path.display(), i + 1), encoding: t.to_string(), graph });
    }
    Ok(out)
}

/// Entries labelled `label#index`.
pub fn corpus_from_graphs(label: &str, graphs: impl IntoIterator<Item = CombinatorialGraph>) -> Vec<CorpusEntry> {
    graphs.into_iter().enumerate().map(|(i, g)| CorpusEntry::new(format!("{label}#{i}"), g)).collect()
}

#[derive(Clone, Debug)]
pub struct Member {
    pub source: String,
    pub encoding: String,
    pub graph: CombinatorialGraph,
    pub canonical: CanonicalForm,
}

impl Member {
    fn order_key(&self) -> (usize, &[u32]) {
        (self.graph.n_vertices(), self.canonical.code())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "source": self.source,
            "graph6": self.encoding,
            "vertices": self.graph.n_vertices(),
            "edges": self.graph.n_edges(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct IsospectralSet {
    pub members: Vec<Member>,
    /// Coarsest form of the common secular polynomial.
    pub secular: SecularPolynomial,
    /// Shared normalized characteristic polynomial, `None` if the members
    /// disagree.
    pub char_poly: Option<CharPoly>,
    pub prefilter: bool,
    pub normalization: Normalization,
}

impl IsospectralSet {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "size": self.size(),
            "members": self.members.iter().map(Member::to_json).collect::<Vec<_>>(),
            "char_poly": self.char_poly.as_ref().map(|c| json::poly(c.poly())),
            "secular": self.secular.to_json(),
            "prefilter": self.prefilter,
            "normalization": self.normalization.name(),
        })
    }

    fn signature(&self) -> Vec<Vec<u32>> {
        self.members.iter().map(|m| m.canonical.code().to_vec()).collect()
    }
}

#[derive(Clone, Debug, Default)]
pub struct SearchOutcome {
    pub sets: Vec<IsospectralSet>,
    /// Skipped inputs, in input order.
    pub warnings: Vec<String>,
    /// Pairs of sources describing isomorphic graphs.
    pub duplicates: Vec<(String, String)>,
    /// Post-pass verification failures; empty on a sound run.
    pub failures: Vec<String>,
    /// Graphs whose secular polynomial was computed.
    pub secular_computed: usize,
}

impl SearchOutcome {
    /// Histogram of set sizes: `counts[s]` sets of size `s`.
    pub fn size_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.sets.iter().map(|s| s.size() + 1).max().unwrap_or(0)];
        for s in &self.sets {
            counts[s.size()] += 1;
        }
        counts
    }

    /// One JSON object per line.
    pub fn write_jsonl<W: Write>(&self, mut w: W) -> Result<()> {
        for s in &self.sets {
            writeln!(w, "{}", s.to_json())?;
        }
        Ok(())
    }
}

type Key = (Option<IntPoly>, (BigRational, IntPoly));

fn admissible(e: &CorpusEntry, config: &SearchConfig) -> std::result::Result<(), String> {
    let g = &e.graph;
    if g.n_edges() == 0 {
        return Err("no edges".into());
    }
    if !g.is_connected() {
        return Err("not connected".into());
    }
    if config.prefilter && !g.is_simple() {
        return Err("prefilter needs a simple graph".into());
    }
    if config.trees_only && !g.is_tree() {
        return Err("not a tree".into());
    }
    Ok(())
}

pub fn search(entries: &[CorpusEntry], config: &SearchConfig) -> Result<SearchOutcome> {
    if config.jobs == 0 {
        return Err(Error::InvalidSpec("worker count must be at least 1".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    pool.install(|| run(entries, config))
}

fn run(entries: &[CorpusEntry], config: &SearchConfig) -> Result<SearchOutcome> {
    let mut out = SearchOutcome::default();
    let mut valid = Vec::new();
    for (i, e) in entries.iter().enumerate() {
        match admissible(e, config) {
            Ok(()) => valid.push(i),
            Err(why) => out.warnings.push(format!("skipping {}: {why}", e.source)),
        }
    }

    // Candidate indices with their char-poly bucket key.
    let candidates: Vec<(usize, Option<IntPoly>)> = if config.prefilter {
        let polys = valid
            .par_iter()
            .map(|&i| char_poly(&entries[i].graph).map(|c| (i, c.normalized().poly().clone())))
            .collect::<Result<Vec<_>>>()?;
        let mut sizes: HashMap<&IntPoly, usize> = HashMap::new();
        for (_, p) in &polys {
            *sizes.entry(p).or_default() += 1;
        }
        polys
            .iter()
            .filter(|(_, p)| sizes[p] > 1)
            .map(|(i, p)| (*i, Some(p.clone())))
            .collect()
    } else {
        valid.iter().map(|&i| (i, None)).collect()
    };
    out.secular_computed = candidates.len();

    let keyed = candidates
        .into_par_iter()
        .map(|(i, cp)| {
            let g = config.normalization.apply(&entries[i].graph)?;
            let p = secular_polynomial_vertex_route(&g)?;
            Ok((i, (cp, p.spectral_key())))
        })
        .collect::<Result<Vec<(usize, Key)>>>()?;
    let mut groups: HashMap<Key, Vec<usize>> = HashMap::new();
    for (i, k) in keyed {
        groups.entry(k).or_default().push(i);
    }
    let mut groups: Vec<(Key, Vec<usize>)> = groups.into_iter().filter(|(_, v)| v.len() > 1).collect();
    for (_, v) in &mut groups {
        v.sort_unstable();
    }

    let screened: Vec<(Vec<Member>, Vec<(String, String)>, SecularPolynomial)> = groups
        .into_par_iter()
        .map(|((_, (unit, poly)), idx)| {
            let mut members: Vec<Member> = Vec::new();
            let mut dups = Vec::new();
            for i in idx {
                let e = &entries[i];
                let canonical = canonical_form(&e.graph);
                if let Some(m) = members.iter().find(|m| m.canonical == canonical) {
                    dups.push((m.source.clone(), e.source.clone()));
                    continue;
                }
                members.push(Member { source: e.source.clone(), encoding: e.encoding.clone(), graph: e.graph.clone(), canonical });
            }
            members.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
            let secular = SecularPolynomial::from_multiple(unit, &poly)?;
            Ok((members, dups, secular))
        })
        .collect::<Result<Vec<_>>>()?;

    for (members, dups, secular) in screened {
        out.duplicates.extend(dups);
        if members.len() < 2 {
            continue;
        }
        let polys: Vec<Option<CharPoly>> = members.iter().map(|m| char_poly(&m.graph).ok().map(|c| c.normalized())).collect();
        let char_poly = match &polys[0] {
            Some(c) if polys.iter().all(|p| p.as_ref() == Some(c)) => Some(c.clone()),
            _ => None,
        };
        out.sets.push(IsospectralSet { members, secular, char_poly, prefilter: config.prefilter, normalization: config.normalization });
    }
    out.sets.sort_by(|a, b| a.members[0].order_key().cmp(&b.members[0].order_key()));
    out.duplicates.sort();

    let failures: Vec<Vec<String>> = out.sets.par_iter().map(|s| verify(s, config.normalization)).collect();
    out.failures = failures.into_iter().flatten().collect();
    Ok(out)
}

/// Pairwise bond-route isospectrality and non-isomorphism.
fn verify(set: &IsospectralSet, norm: Normalization) -> Vec<String> {
    let mut bad = Vec::new();
    for (i, a) in set.members.iter().enumerate() {
        for b in &set.members[i + 1..] {
            let pair = format!("{} / {}", a.source, b.source);
            if is_isomorphic(&a.graph, &b.graph) {
                bad.push(format!("{pair}: isomorphic"));
            }
            let iso = norm
                .apply(&a.graph)
                .and_then(|ga| norm.apply(&b.graph).map(|gb| (ga, gb)))
                .and_then(|(ga, gb)| is_isospectral(&ga, &gb));
            match iso {
                Ok(true) => {}
                Ok(false) => bad.push(format!("{pair}: not isospectral by the bond route")),
                Err(e) => bad.push(format!("{pair}: {e}")),
            }
        }
    }
    bad
}

/// Tree corpus search: the same pipeline with non-trees skipped.
pub fn tree_search(entries: &[CorpusEntry], config: &SearchConfig) -> Result<SearchOutcome> {
    search(entries, &SearchConfig { trees_only: true, ..config.clone() })
}

#[derive(Clone, Debug)]
pub struct AuditReport {
    pub with_prefilter: SearchOutcome,
    pub without_prefilter: SearchOutcome,
    /// Same sets (by canonical members) in both modes.
    pub identical: bool,
    /// Sets found without the prefilter whose members have different
    /// characteristic polynomials.
    pub discoveries: Vec<IsospectralSet>,
}

impl AuditReport {
    pub fn to_json(&self) -> Value {
        json!({
            "identical": self.identical,
            "sets_with_prefilter": self.with_prefilter.sets.len(),
            "sets_without_prefilter": self.without_prefilter.sets.len(),
            "secular_computed_with_prefilter": self.with_prefilter.secular_computed,
            "secular_computed_without_prefilter": self.without_prefilter.secular_computed,
            "discoveries": self.discoveries.iter().map(IsospectralSet::to_json).collect::<Vec<_>>(),
        })
    }
}

/// Runs the search with and without the characteristic-polynomial
/// prefilter and compares the results.
pub fn prefilter_soundness_audit(entries: &[CorpusEntry], jobs: usize) -> Result<AuditReport> {
    let base = SearchConfig { jobs, ..SearchConfig::default() };
    let with_prefilter = search(entries, &base)?;
    let without_prefilter = search(entries, &SearchConfig { prefilter: false, ..base })?;
    let on: Vec<_> = with_prefilter.sets.iter().map(IsospectralSet::signature).collect();
    let off: Vec<_> = without_prefilter.sets.iter().map(IsospectralSet::signature).collect();
    let discoveries = without_prefilter.sets.iter().filter(|s| s.char_poly.is_none()).cloned().collect();
    Ok(AuditReport { identical: on == off, with_prefilter, without_prefilter, discoveries })
}

/// Corpus digest helper for manifests: the content of every entry.
pub fn corpus_text(entries: &[CorpusEntry]) -> String {
    entries.iter().map(|e| format!("{}\n", e.encoding)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{connected_graphs, trees};

    #[test]
    fn five_vertex_graphs_have_no_partners() {
        let c = corpus_from_graphs("c5", connected_graphs(5));
        let out = search(&c, &SearchConfig::default()).unwrap();
        assert!(out.sets.is_empty() && out.failures.is_empty());
    }

    #[test]
    fn six_vertex_pair() {
        let c = corpus_from_graphs("c6", connected_graphs(6));
        let out = search(&c, &SearchConfig::default()).unwrap();
        assert_eq!(out.size_counts(), vec![0, 0, 1]);
        let edges: Vec<usize> = out.sets[0].members.iter().map(|m| m.graph.n_edges()).collect();
        assert_eq!(edges[0], edges[1]);
        assert!(out.failures.is_empty());
    }

    #[test]
    fn duplicates_and_skips_are_reported() {
        let mut gs = connected_graphs(4);
        gs.push(gs[0].relabel(&[3, 2, 1, 0]));
        gs.push(CombinatorialGraph::new(4, vec![(0, 1), (2, 3)]).unwrap());
        let out = search(&corpus_from_graphs("x", gs), &SearchConfig::default()).unwrap();
        assert_eq!(out.duplicates.len(), 1);
        assert_eq!(out.warnings, vec!["skipping x#7: not connected".to_string()]);
        assert!(out.sets.is_empty());
    }

    #[test]
    fn small_trees_and_empty_audit() {
        let c: Vec<_> = (2..=8).flat_map(|n| corpus_from_graphs(&format!("t{n}"), trees(n))).collect();
        assert!(tree_search(&c, &SearchConfig::default()).unwrap().sets.is_empty());
        let a = prefilter_soundness_audit(&[], 2).unwrap();
        assert!(a.identical && a.discoveries.is_empty());
        assert!(matches!(search(&c, &SearchConfig { jobs: 0, ..SearchConfig::default() }), Err(Error::InvalidSpec(_))));
    }
}
