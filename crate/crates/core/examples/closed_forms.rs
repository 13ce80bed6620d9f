//! Every closed-form secular equation checked over its standard range.

use isograph::constructors::{formula_sweep, SWEEP_FAMILIES};

fn main() -> isograph::Result<()> {
    for family in SWEEP_FAMILIES {
        let t = std::time::Instant::now();
        let reports = formula_sweep(Some(family), None)?;
        let ok = reports.iter().filter(|r| r.matches).count();
        println!("{family:>15}: {ok}/{} match ({:.2?})", reports.len(), t.elapsed());
    }
    Ok(())
}
