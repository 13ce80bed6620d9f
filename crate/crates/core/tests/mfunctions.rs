mod common;

use common::{permutation, random_graph, rng};
use isograph::constructors::FamilySpec;
use isograph::graph::{common_unit, MetricGraph};
use isograph::mfunction::{m_rational, m_signature, same_m};
use isograph::poly::IntPoly;
use rand::Rng;

#[test]
fn loop_and_interval_midpoint() {
    let lp = FamilySpec::Loop(4).build().unwrap();
    let iv = MetricGraph::from_edges(3, &[(0, 1, 2), (1, 2, 2)]).unwrap();
    let (a, b) = (m_signature(&lp, 0).unwrap(), m_signature(&iv, 1).unwrap());
    assert_eq!(a.signature(), b.signature());
    assert_eq!(a.discarded_factor(), &IntPoly::from_i64s(&[-1, 0, 0, 0, 1]));
    assert_eq!(b.discarded_factor(), &IntPoly::from_i64s(&[1, 0, 0, 0, 1]));
    assert!(same_m(&lp, 0, &iv, 1).unwrap());
}

/// The end of a chain of loops sees the same M-function as a single loop
/// of the chain's total length.
#[test]
fn chain_end_looks_like_a_loop() {
    let mut r = rng(3);
    for _ in 0..10 {
        let ls: Vec<u64> = (0..r.gen_range(1..5)).map(|_| r.gen_range(1..4)).collect();
        let chain = FamilySpec::ChainOfLoops(ls.clone()).build().unwrap();
        let lp = FamilySpec::Loop(ls.iter().sum()).build().unwrap();
        let u = common_unit(chain.unit(), lp.unit());
        let (chain, lp) = (chain.to_unit(&u).unwrap(), lp.to_unit(&u).unwrap());
        assert!(m_rational(&chain, 0).unwrap().same_function(&m_rational(&lp, 0).unwrap()), "{ls:?}");
        assert!(same_m(&chain, 0, &lp, 0).unwrap());
    }
}

/// `same_m` errors if the signature and the direct solve disagree, so every
/// call below doubles as a consistency check.
#[test]
fn signature_agrees_with_direct_solve() {
    let mut r = rng(4);
    let (mut equal, mut different) = (0, 0);
    for i in 0..50 {
        let g = random_graph(&mut r, 7, 3, 2);
        let v = r.gen_range(0..g.n_vertices());
        let (h, w) = if i % 2 == 0 {
            let perm = permutation(&mut r, g.n_vertices());
            let h = MetricGraph::new(g.graph().relabel(&perm), g.lengths().to_vec(), g.unit().clone()).unwrap();
            (h, perm[v])
        } else {
            let h = random_graph(&mut r, 7, 3, 2);
            let w = r.gen_range(0..h.n_vertices());
            (h, w)
        };
        if same_m(&g, v, &h, w).unwrap() {
            equal += 1;
        } else {
            different += 1;
        }
    }
    assert!(equal >= 25 && different > 0, "{equal} equal, {different} different");
}
