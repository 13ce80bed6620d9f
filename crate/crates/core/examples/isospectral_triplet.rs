//! A loop of length 8 and two lasso-like graphs share one spectrum.

use isograph::constructors::{figure, FamilySpec};
use isograph::graph::is_isomorphic;
use isograph::secular::secular_polynomial;
use isograph::spectrum::is_isospectral;

fn main() -> isograph::Result<()> {
    let lp = FamilySpec::Loop(8).build()?;
    let b = figure("3b")?;
    let c = figure("3c")?;
    for g in [&lp, &b, &c] {
        println!("{g}\n  {}", secular_polynomial(g)?);
    }
    println!("loop ~ 3b: {}", is_isospectral(&lp, &b)?);
    println!("loop ~ 3c: {}", is_isospectral(&lp, &c)?);
    println!("3b isomorphic to 3c: {}", is_isomorphic(b.graph(), c.graph()));
    Ok(())
}
