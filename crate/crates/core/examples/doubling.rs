//! Gluing two copies of a graph along all vertices multiplies the secular
//! polynomial by one factor per edge.

use isograph::constructors::{figure, validate_doubling, FamilySpec};

fn main() -> isograph::Result<()> {
    let graphs = [figure("3b")?, figure("6d")?, FamilySpec::Complete(4).build()?, "star:1,2,3".parse::<FamilySpec>()?.build()?];
    for g in &graphs {
        let r = validate_doubling(g)?;
        println!("{}\n  doubled: {}\n  matches: {}", g, r.computed, r.matches);
    }
    Ok(())
}
