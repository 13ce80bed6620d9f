mod common;

use common::data;
use isograph::constructors::{decorated_loop_enumerator, FamilySpec};
use isograph::enumerate::{connected_graphs, trees, write_graph6};
use isograph::graph::MetricGraph;
use isograph::search::{corpus_from_graphs, prefilter_soundness_audit, read_corpus, search, tree_search, Normalization, SearchConfig, SearchOutcome};
use isograph::secular::secular_polynomial;
use isograph::spectrum::is_isospectral;

fn run(file: &str, config: &SearchConfig) -> SearchOutcome {
    search(&read_corpus(&data(file)).unwrap(), config).unwrap()
}

fn jsonl(o: &SearchOutcome) -> Vec<u8> {
    let mut buf = Vec::new();
    o.write_jsonl(&mut buf).unwrap();
    buf
}

#[test]
fn small_corpora() {
    for n in 1..=5 {
        assert!(run(&format!("connected{n}.g6"), &SearchConfig::default()).sets.is_empty());
    }
    let six = run("connected6.g6", &SearchConfig::default());
    assert_eq!(six.size_counts(), vec![0, 0, 1]);
    let set = &six.sets[0];
    assert!(is_isospectral(&MetricGraph::equilateral_normalized(set.members[0].graph.clone()).unwrap(),
        &MetricGraph::equilateral_normalized(set.members[1].graph.clone()).unwrap()).unwrap());
    assert!(six.failures.is_empty() && six.warnings.is_empty());
}

#[test]
fn eight_vertices_with_and_without_prefilter() {
    let on = run("connected8.g6", &SearchConfig { jobs: 4, ..SearchConfig::default() });
    assert_eq!(on.size_counts(), vec![0, 0, 39, 3]);
    assert!(on.failures.is_empty());
    assert!(on.secular_computed < 11117 / 4);
    let off = run("connected8.g6", &SearchConfig { prefilter: false, jobs: 4, ..SearchConfig::default() });
    assert_eq!(off.secular_computed, 11117);
    let members = |o: &SearchOutcome| o.sets.iter().map(|s| s.members.iter().map(|m| m.encoding.clone()).collect::<Vec<_>>()).collect::<Vec<_>>();
    assert_eq!(members(&on), members(&off));
}

#[test]
fn unit_edges_agree_on_equal_edge_counts() {
    let a = run("connected7.g6", &SearchConfig::default());
    let b = run("connected7.g6", &SearchConfig { normalization: Normalization::UnitEdges, ..SearchConfig::default() });
    assert_eq!(a.size_counts(), vec![0, 0, 5]);
    assert_eq!(b.size_counts(), a.size_counts());
    let text = String::from_utf8(jsonl(&b)).unwrap();
    assert!(text.lines().all(|l| l.contains("\"unit-edges\"")));
}

#[test]
fn output_is_independent_of_worker_count() {
    let one = jsonl(&run("connected7.g6", &SearchConfig { jobs: 1, ..SearchConfig::default() }));
    for jobs in [2, 3, 8] {
        assert_eq!(jsonl(&run("connected7.g6", &SearchConfig { jobs, ..SearchConfig::default() })), one);
    }
    assert_eq!(String::from_utf8(one).unwrap().lines().count(), 5);
}

#[test]
fn audit_seven_vertices() {
    let report = prefilter_soundness_audit(&read_corpus(&data("connected7.g6")).unwrap(), 4).unwrap();
    assert!(report.identical);
    assert!(report.discoveries.is_empty());
    assert_eq!(report.with_prefilter.size_counts(), vec![0, 0, 5]);
}

#[test]
fn trees_up_to_ten() {
    for n in 1..=8 {
        assert!(tree_search(&read_corpus(&data(&format!("trees{n}.g6"))).unwrap(), &SearchConfig::default()).unwrap().sets.is_empty());
    }
    let counts = |n: usize| tree_search(&read_corpus(&data(&format!("trees{n}.g6"))).unwrap(), &SearchConfig::default()).unwrap().size_counts();
    assert_eq!(counts(9), vec![0, 0, 1]);
    assert_eq!(counts(10), vec![0, 0, 2]);
    // a non-tree in the input is skipped with a warning
    let out = tree_search(&read_corpus(&data("connected4.g6")).unwrap(), &SearchConfig::default()).unwrap();
    assert_eq!(out.warnings.len(), 4);
}

#[test]
fn committed_corpora_match_the_generator() {
    for n in 1..=7 {
        let mut buf = Vec::new();
        write_graph6(&mut buf, &connected_graphs(n)).unwrap();
        assert_eq!(buf, std::fs::read(data(&format!("connected{n}.g6"))).unwrap(), "connected{n}");
    }
    for n in 1..=11 {
        let mut buf = Vec::new();
        write_graph6(&mut buf, &trees(n)).unwrap();
        assert_eq!(buf, std::fs::read(data(&format!("trees{n}.g6"))).unwrap(), "trees{n}");
    }
}

/// Searches a cycle with pendant trees up to `m` vertices; members of a set
/// may have different sizes.
fn decorated(n: usize, m: usize) -> SearchOutcome {
    let d = decorated_loop_enumerator(n, m, 100_000).unwrap();
    assert!(!d.truncated);
    let corpus = corpus_from_graphs(&format!("C{n}"), d.graphs.iter().map(|g| g.graph().clone()));
    search(&corpus, &SearchConfig { prefilter: false, jobs: 4, ..SearchConfig::default() }).unwrap()
}

fn mixed(o: &SearchOutcome) -> Vec<Vec<usize>> {
    o.sets
        .iter()
        .map(|s| s.members.iter().map(|m| m.graph.n_vertices()).collect::<Vec<_>>())
        .filter(|sizes| sizes.iter().any(|&v| v != sizes[0]))
        .collect()
}

#[test]
fn decorated_loops() {
    let loop_key = secular_polynomial(&FamilySpec::Loop(1).build().unwrap()).unwrap().spectral_key();
    let four = decorated(4, 10);
    assert_eq!(four.size_counts(), vec![0, 0, 22, 1]);
    assert_eq!(mixed(&four), vec![vec![4, 8], vec![5, 10]]);
    let six = decorated(6, 12);
    assert_eq!(six.size_counts(), vec![0, 0, 28, 1]);
    assert_eq!(mixed(&six), vec![vec![6, 12]]);
    // C4 with an 8-vertex partner and C6 with a 12-vertex partner share
    // the spectrum of a loop; the [5, 10] set does not
    let keys = |o: &SearchOutcome| {
        o.sets.iter()
            .filter(|s| s.members.iter().any(|m| m.graph.n_vertices() != s.members[0].graph.n_vertices()))
            .map(|s| s.secular.spectral_key())
            .collect::<Vec<_>>()
    };
    let (k4, k6) = (keys(&four), keys(&six));
    assert_eq!(k4[0], loop_key);
    assert_ne!(k4[1], loop_key);
    assert_eq!(k6, vec![loop_key]);
    assert!(four.failures.is_empty() && six.failures.is_empty());
}
