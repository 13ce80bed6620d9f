//! Hot vertices: attaching the same graph at M-equivalent vertices keeps
//! graphs isospectral.

use isograph::constructors::{figure, graft, FamilySpec};
use isograph::mfunction::hot_classes;
use isograph::spectrum::is_isospectral;

fn main() -> isograph::Result<()> {
    let base = figure("8a")?;
    println!("classes of 8a: {:?}", hot_classes(std::slice::from_ref(&base))?);
    println!("8b ~ 8c: {}", is_isospectral(&figure("8b")?, &figure("8c")?)?);
    // any decoration works, not just a pendant edge
    for spec in ["loop:3", "complete:4", "tadpole:1,2"] {
        let h = spec.parse::<FamilySpec>()?.build()?;
        let a = graft(&base, 2, &h, 0)?;
        let b = graft(&base, 3, &h, 0)?;
        println!("{spec} at x1 vs x2: {}", is_isospectral(&a, &b)?);
    }
    let pair = [figure("8b")?, figure("8c")?];
    println!("classes across 8b, 8c: {:?}", hot_classes(&pair)?);
    Ok(())
}
