//! Reordering pumpkins of equal degree in a chain never changes the
//! spectrum; chains and rings of loops have product secular equations.

use isograph::constructors::{permute_pumpkin_chain, validate_formula, FamilySpec};
use isograph::secular::secular_polynomial;

fn main() -> isograph::Result<()> {
    let chain = [(2, 1), (2, 2), (2, 1), (3, 1), (3, 3)];
    let base = secular_polynomial(&FamilySpec::PumpkinChain(chain.to_vec()).build()?)?;
    for perm in [[1, 0, 2, 3, 4], [2, 1, 0, 4, 3], [0, 2, 1, 4, 3]] {
        let g = permute_pumpkin_chain(&chain, &perm)?;
        println!("{perm:?}: same polynomial {}", secular_polynomial(&g)? == base);
    }
    match permute_pumpkin_chain(&chain, &[3, 1, 2, 0, 4]) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    for spec in ["chain-of-loops:1,1,2", "chain-of-loops:2,1,1", "ring-of-loops:1,2,3", "ring-of-loops:3,2,1"] {
        let r = validate_formula(&spec.parse()?)?;
        println!("{spec}: {}  closed form matches: {}", r.computed, r.matches);
    }
    Ok(())
}
