mod common;

use common::{permutation, random_graph, random_simple_graph, rng};
use isograph::graph::{canonical_form, char_poly, encode_graph6, is_isomorphic, parse_graph6, MetricGraph};
use isograph::secular::{bond_scattering, secular_polynomial, secular_polynomial_vertex_route};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn secular_invariants(seed in any::<u64>()) {
        let g = random_graph(&mut rng(seed), 12, 4, 4);
        let p = secular_polynomial(&g).unwrap();
        prop_assert_eq!(p.eval(&BigRational::zero()), BigRational::one());
        prop_assert_eq!(p.degree() as u64, 2 * g.total_units());
        prop_assert!(p.check_exact_invariants(g.total_units()).is_ok());
        prop_assert!(p.max_root_deviation() < 1e-9, "deviation {}", p.max_root_deviation());
    }

    #[test]
    fn routes_agree(seed in any::<u64>()) {
        let g = random_graph(&mut rng(seed), 10, 5, 3);
        prop_assert_eq!(secular_polynomial(&g).unwrap(), secular_polynomial_vertex_route(&g).unwrap());
    }

    #[test]
    fn subdivision_and_smoothing(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, 8, 3, 4);
        let p = secular_polynomial(&g).unwrap();
        let e = r.gen_range(0..g.n_edges());
        let l = g.lengths()[e];
        let g2 = MetricGraph::new(g.graph().clone(), g.lengths().iter().map(|l| 2 * l).collect(), g.unit().clone()).unwrap();
        // split an edge of the doubled graph so that both pieces are integers
        let a = r.gen_range(1..2 * l);
        let split = g2.subdivide(e, &[a, 2 * l - a]).unwrap();
        let p2 = secular_polynomial(&g2).unwrap();
        prop_assert_eq!(&secular_polynomial(&split).unwrap(), &p2);
        let back = split.smooth(split.n_vertices() - 1);
        if let Ok(back) = back {
            prop_assert_eq!(&secular_polynomial(&back).unwrap(), &p2);
        }
        // doubling all lengths in the same unit substitutes z -> z^2
        prop_assert_eq!(p2.poly(), &p.poly().stretch(2));
    }

    #[test]
    fn relabelling_changes_nothing(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, 9, 4, 3);
        let perm = permutation(&mut r, g.n_vertices());
        let h = MetricGraph::new(g.graph().relabel(&perm), g.lengths().to_vec(), g.unit().clone()).unwrap();
        prop_assert_eq!(secular_polynomial(&g).unwrap(), secular_polynomial(&h).unwrap());
        prop_assert_eq!(canonical_form(g.graph()), canonical_form(h.graph()));
        prop_assert!(is_isomorphic(g.graph(), h.graph()));
    }

    #[test]
    fn simple_graph_invariants(seed in any::<u64>(), n in 2usize..12) {
        let mut r = rng(seed);
        let g = random_simple_graph(&mut r, n, 0.3);
        let text = encode_graph6(&g).unwrap();
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(back.n_vertices(), g.n_vertices());
        prop_assert!(is_isomorphic(&back, &g));
        prop_assert_eq!(canonical_form(&back), canonical_form(&g));
        let h = g.relabel(&permutation(&mut r, n));
        prop_assert_eq!(char_poly(&g).unwrap(), char_poly(&h).unwrap());
    }

    #[test]
    fn scattering_is_orthogonal(seed in any::<u64>()) {
        let g = random_graph(&mut rng(seed), 10, 5, 1);
        prop_assert!(bond_scattering(g.graph()).is_orthogonal());
    }
}
