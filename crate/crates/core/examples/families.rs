//! Named families and their textual specifications.

use isograph::constructors::FamilySpec;

fn main() -> isograph::Result<()> {
    for text in [
        "interval:3", "loop:5", "star:1,1,2", "complete:5", "flower:3@1", "pumpkin:4@2", "pumpkin-chain:2@1,3@2",
        "chain-of-loops:1,1,2", "ring-of-loops:1,2", "tadpole:3,1", "pumpkin-star:4+3+3@1", "pumpkin-pair:7+5@1",
    ] {
        let spec: FamilySpec = text.parse()?;
        let g = spec.build()?;
        let formula = spec.closed_form().map_or("-", |(name, _)| name);
        println!("{text:>22}  {:>2} vertices {:>2} edges  unit {}  formula {formula}", g.n_vertices(), g.n_edges(), g.unit());
    }
    Ok(())
}
