//! Eigenfrequencies with multiplicities, exact where they come from roots
//! of unity and numerical otherwise.

use isograph::constructors::parse_graph_spec;
use isograph::secular::secular_polynomial;
use isograph::spectrum::{eigenfrequencies, Window};

fn main() -> isograph::Result<()> {
    for (spec, window) in [("loop:1", Window::First(4)), ("figure:3b", Window::UpTo(2.0)), ("complete:4", Window::First(6))] {
        let g = parse_graph_spec(spec)?;
        let report = eigenfrequencies(&secular_polynomial(&g)?, &window)?;
        println!("{spec}: k = 0 with multiplicity {}", report.k0_multiplicity);
        for e in &report.entries {
            let kind = if e.is_exact() { "exact" } else { "algebraic" };
            println!("  k = {:.12}  x{}  ({kind})", e.approx(), e.multiplicity);
        }
    }
    Ok(())
}
