//! Secular polynomials of a few small graphs by both determinant routes.

use isograph::constructors::parse_graph_spec;
use isograph::secular::{secular_at, secular_polynomial, secular_polynomial_vertex_route};
use num_rational::BigRational;

fn main() -> isograph::Result<()> {
    for spec in ["interval:3", "loop:4", "complete:4", "tadpole:3,2", "edges:0-1@1,1-1@2,1-2@3"] {
        let g = parse_graph_spec(spec)?;
        let bond = secular_polynomial(&g)?;
        let vertex = secular_polynomial_vertex_route(&g)?;
        assert_eq!(bond, vertex);
        println!("{spec:>26}  {bond}");
        let sign = bond.check_exact_invariants(g.total_units())?;
        println!("{:>26}  degree {}, palindrome sign {sign:+}", "", bond.degree());
        // exact value at z = 1/3 from a direct rational determinant
        let z = BigRational::new(1.into(), 3.into());
        assert_eq!(bond.eval(&z), secular_at(&g, &z));
    }
    Ok(())
}
