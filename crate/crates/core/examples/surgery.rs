//! Subdividing and smoothing edges, grafting graphs together and
//! replacing edges by gadgets.

use isograph::constructors::{graft, replace_edges, FamilySpec};
use isograph::graph::MetricGraph;
use isograph::secular::secular_polynomial;
use isograph::spectrum::is_isospectral;

fn main() -> isograph::Result<()> {
    let t = FamilySpec::Tadpole { loop_len: 3, tail: 2 }.build()?;
    let split = t.subdivide(0, &[1, 2])?;
    let back = split.smooth(split.n_vertices() - 1)?;
    println!("tadpole {t}\n  subdivided {split}\n  smoothed back {back}");
    println!("  same polynomial: {}", secular_polynomial(&t)? == secular_polynomial(&split)?);

    let lasso = MetricGraph::from_edges(2, &[(0, 0, 4), (0, 1, 1)])?;
    let tri = FamilySpec::Complete(3).build()?;
    println!("graft: {}", graft(&lasso, 1, &tri, 0)?);

    // edge replacement keeps equilateral isospectral pairs isospectral
    let a = isograph::constructors::figure("6c")?.fully_subdivided();
    let b = isograph::constructors::figure("6d")?;
    let gamma = MetricGraph::from_edges(3, &[(0, 2, 1), (2, 1, 1), (2, 2, 1)])?;
    let (ra, rb) = (replace_edges(&a, &gamma, 0, 1)?, replace_edges(&b, &gamma, 0, 1)?);
    println!("6c ~ 6d: {}, after replacement: {}", is_isospectral(&a, &b)?, is_isospectral(&ra, &rb)?);
    Ok(())
}
