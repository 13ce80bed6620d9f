//! One line per acceptance criterion. Exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use common::{data, permutation, random_graph, rng};
use isograph::constructors::{figure, formula_sweep, graft, validate_doubling, FamilySpec};
use isograph::graph::{common_unit, is_isomorphic, MetricGraph};
use isograph::mfunction::{hot_classes, m_rational, m_signature, same_m};
use isograph::poly::IntPoly;
use isograph::search::{prefilter_soundness_audit, read_corpus, search, tree_search, SearchConfig, SearchOutcome};
use isograph::secular::secular_polynomial;
use isograph::spectrum::is_isospectral;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get()).max(2)
}

fn corpus_search(file: &str, jobs: usize) -> Result<(SearchOutcome, Duration), String> {
    let t = Instant::now();
    let entries = read_corpus(&data(file)).map_err(|e| e.to_string())?;
    let out = search(&entries, &SearchConfig { jobs, ..SearchConfig::default() }).map_err(|e| e.to_string())?;
    ensure(out.failures.is_empty(), format!("post-pass failures: {:?}", out.failures))?;
    Ok((out, t.elapsed()))
}

fn six_vertices() -> Check {
    let (out, t) = corpus_search("connected6.g6", jobs())?;
    ensure(out.size_counts() == [0, 0, 1], format!("sets by size {:?}", out.size_counts()))?;
    ensure(t < Duration::from_secs(60), format!("took {t:?}"))?;
    Ok(format!("112 graphs, 1 pair, {:.2}s", t.as_secs_f64()))
}

fn seven_vertices() -> Check {
    let (out, t) = corpus_search("connected7.g6", jobs())?;
    ensure(out.size_counts() == [0, 0, 5], format!("sets by size {:?}", out.size_counts()))?;
    ensure(t < Duration::from_secs(300), format!("took {t:?}"))?;
    let audit = prefilter_soundness_audit(&read_corpus(&data("connected7.g6")).map_err(|e| e.to_string())?, jobs())
        .map_err(|e| e.to_string())?;
    ensure(audit.identical && audit.discoveries.is_empty(), "prefilter changes the result")?;
    Ok(format!("853 graphs, 5 pairs, 0 triplets, {:.2}s; prefilter on = off", t.as_secs_f64()))
}

fn eight_vertices() -> Check {
    let (out, t) = corpus_search("connected8.g6", jobs())?;
    ensure(out.size_counts() == [0, 0, 39, 3], format!("sets by size {:?}", out.size_counts()))?;
    ensure(t < Duration::from_secs(3600), format!("took {t:?}"))?;
    Ok(format!("11117 graphs, 39 pairs, 3 triplets, {:.2}s", t.as_secs_f64()))
}

fn trees() -> Check {
    let mut counts = Vec::new();
    for n in 1..=10 {
        let entries = read_corpus(&data(&format!("trees{n}.g6"))).map_err(|e| e.to_string())?;
        let out = tree_search(&entries, &SearchConfig { jobs: jobs(), ..SearchConfig::default() }).map_err(|e| e.to_string())?;
        // the single vertex has no edges and is skipped
        ensure(out.failures.is_empty() && out.warnings.len() == usize::from(n == 1), format!("trees{n}: {:?}", out.warnings))?;
        counts.push(out.sets.len());
    }
    ensure(counts == [0, 0, 0, 0, 0, 0, 0, 0, 1, 2], format!("pairs by size {counts:?}"))?;
    Ok("none up to 8 vertices, 1 pair at 9, 2 pairs at 10".into())
}

fn triplet() -> Check {
    let graphs = [FamilySpec::Loop(8).build(), figure("3b"), figure("3c")];
    let graphs: Vec<MetricGraph> = graphs.into_iter().collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let polys: Vec<_> = graphs.iter().map(secular_polynomial).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    ensure(polys[0] == polys[1] && polys[1] == polys[2], "polynomials differ")?;
    ensure(!is_isomorphic(graphs[1].graph(), graphs[2].graph()), "3b and 3c are isomorphic")?;
    Ok(format!("identical secular polynomials of degree {}", polys[0].degree()))
}

fn formulas() -> Check {
    let reports = formula_sweep(None, None).map_err(|e| e.to_string())?;
    let bad: Vec<&str> = reports.iter().filter(|r| !r.matches).map(|r| r.subject.as_str()).collect();
    ensure(bad.is_empty(), format!("mismatches: {bad:?}"))?;
    let mut r = rng(61);
    for _ in 0..30 {
        let g = random_graph(&mut r, 8, 4, 4);
        ensure(validate_doubling(&g).map_err(|e| e.to_string())?.matches, format!("doubling fails on {g}"))?;
    }
    Ok(format!("{} closed forms plus doubling on 30 random graphs", reports.len()))
}

fn m_functions() -> Check {
    let err = |e: isograph::Error| e.to_string();
    let lp = FamilySpec::Loop(4).build().map_err(err)?;
    let iv = MetricGraph::from_edges(3, &[(0, 1, 2), (1, 2, 2)]).map_err(err)?;
    let (a, b) = (m_signature(&lp, 0).map_err(err)?, m_signature(&iv, 1).map_err(err)?);
    ensure(a.signature() == b.signature(), "loop and interval signatures differ")?;
    ensure(
        a.discarded_factor() == &IntPoly::from_i64s(&[-1, 0, 0, 0, 1]) && b.discarded_factor() == &IntPoly::from_i64s(&[1, 0, 0, 0, 1]),
        "unexpected discarded factors",
    )?;
    let mut r = rng(71);
    for _ in 0..10 {
        let ls: Vec<u64> = (0..r.gen_range(2..6)).map(|_| r.gen_range(1..5)).collect();
        let chain = FamilySpec::ChainOfLoops(ls.clone()).build().map_err(err)?;
        let whole = FamilySpec::Loop(ls.iter().sum()).build().map_err(err)?;
        let u = common_unit(chain.unit(), whole.unit());
        let (chain, whole) = (chain.to_unit(&u).map_err(err)?, whole.to_unit(&u).map_err(err)?);
        let same = m_rational(&chain, 0).map_err(err)?.same_function(&m_rational(&whole, 0).map_err(err)?);
        ensure(same, format!("chain {ls:?} end differs from the loop"))?;
    }
    // same_m returns an error when the signature and the direct solve disagree
    for i in 0..50 {
        let g = random_graph(&mut r, 8, 3, 3);
        let v = r.gen_range(0..g.n_vertices());
        let (h, w) = if i % 2 == 0 {
            let perm = permutation(&mut r, g.n_vertices());
            (MetricGraph::new(g.graph().relabel(&perm), g.lengths().to_vec(), g.unit().clone()).map_err(err)?, perm[v])
        } else {
            let h = random_graph(&mut r, 8, 3, 3);
            let w = r.gen_range(0..h.n_vertices());
            (h, w)
        };
        let same = same_m(&g, v, &h, w).map_err(err)?;
        ensure(i % 2 == 1 || same, "relabelled vertex has a different M-function")?;
    }
    Ok("signatures, 10 loop chains, 50 vertex pairs without disagreement".into())
}

/// (graph a, vertex a, graph b, vertex b) with `a` and `b` isospectral and
/// the two vertices M-equivalent.
fn hot_pairs() -> Result<Vec<(MetricGraph, usize, MetricGraph, usize)>, String> {
    let err = |e: isograph::Error| e.to_string();
    let mut sets: Vec<Vec<MetricGraph>> = vec![
        vec![figure("8b").map_err(err)?, figure("8c").map_err(err)?],
        vec![FamilySpec::Loop(8).build().map_err(err)?, figure("3b").map_err(err)?, figure("3c").map_err(err)?],
    ];
    for file in ["connected6.g6", "connected7.g6"] {
        let (out, _) = corpus_search(file, jobs())?;
        for s in &out.sets {
            let gs = s.members.iter().map(|m| MetricGraph::equilateral(m.graph.clone(), BigRational::one()));
            sets.push(gs.collect::<Result<_, _>>().map_err(err)?);
        }
    }
    let mut pairs = Vec::new();
    for set in &sets {
        let u = set.iter().skip(1).fold(set[0].unit().clone(), |u, g| common_unit(&u, g.unit()));
        let set: Vec<MetricGraph> = set.iter().map(|g| g.to_unit(&u)).collect::<Result<_, _>>().map_err(err)?;
        for class in hot_classes(&set).map_err(err)? {
            for (i, &(ga, va)) in class.iter().enumerate() {
                for &(gb, vb) in &class[i + 1..] {
                    if ga != gb {
                        pairs.push((set[ga].clone(), va, set[gb].clone(), vb));
                    }
                }
            }
        }
    }
    Ok(pairs)
}

fn properties() -> Check {
    let err = |e: isograph::Error| e.to_string();
    let mut r = rng(81);
    let mut worst = 0f64;
    for _ in 0..200 {
        let g = random_graph(&mut r, 12, 4, 4);
        let p = secular_polynomial(&g).map_err(err)?;
        ensure(p.eval(&BigRational::zero()).is_one(), format!("P(0) != 1 for {g}"))?;
        p.check_exact_invariants(g.total_units()).map_err(err)?;
        worst = worst.max(p.max_root_deviation());
        ensure(worst < 1e-9, format!("root off the unit circle by {worst} for {g}"))?;

        let doubled = MetricGraph::new(g.graph().clone(), g.lengths().iter().map(|l| 2 * l).collect(), g.unit().clone()).map_err(err)?;
        let p2 = secular_polynomial(&doubled).map_err(err)?;
        ensure(p2.poly() == &p.poly().stretch(2), format!("doubling lengths is not z -> z^2 for {g}"))?;
        let e = r.gen_range(0..g.n_edges());
        let l = doubled.lengths()[e];
        let a = r.gen_range(1..l);
        let split = doubled.subdivide(e, &[a, l - a]).map_err(err)?;
        ensure(secular_polynomial(&split).map_err(err)? == p2, format!("subdivision changes {g}"))?;
        let smoothed = split.smooth(split.n_vertices() - 1).map_err(err)?;
        ensure(secular_polynomial(&smoothed).map_err(err)? == p2, format!("smoothing changes {g}"))?;
    }
    let pairs = hot_pairs()?;
    ensure(pairs.len() >= 20, format!("only {} hot pairs", pairs.len()))?;
    for (i, (a, va, b, vb)) in pairs.iter().take(20).enumerate() {
        let h = random_graph(&mut r, 5, 2, 3);
        let w = r.gen_range(0..h.n_vertices());
        let ga = graft(a, *va, &h, w).map_err(err)?;
        let gb = graft(b, *vb, &h, w).map_err(err)?;
        ensure(is_isospectral(&ga, &gb).map_err(err)?, format!("graft {i} breaks isospectrality"))?;
    }
    Ok(format!("200 random graphs (max root deviation {worst:.1e}); grafts at 20 of {} hot pairs", pairs.len()))
}

fn determinism() -> Check {
    let bytes = |jobs: usize| -> Result<Vec<u8>, String> {
        let (out, _) = corpus_search("connected7.g6", jobs)?;
        let mut buf = Vec::new();
        out.write_jsonl(&mut buf).map_err(|e| e.to_string())?;
        Ok(buf)
    };
    let one = bytes(1)?;
    let n = jobs().max(4);
    ensure(one == bytes(n)?, format!("1 and {n} workers differ"))?;
    Ok(format!("{} bytes identical with 1 and {n} workers", one.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("six-vertex corpus", six_vertices),
        ("seven-vertex corpus and prefilter audit", seven_vertices),
        ("eight-vertex corpus", eight_vertices),
        ("trees", trees),
        ("loop triplet", triplet),
        ("closed forms", formulas),
        ("M-functions", m_functions),
        ("property suites", properties),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into())) {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
