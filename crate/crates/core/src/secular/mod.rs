//! Exact secular polynomials `P(z) = det(I - S_v D(z))` of metric graphs
//! with Neumann vertex conditions, and the pendant variant `Q(z, w)`.

mod bivariate;
mod oracle;
mod polynomial;
mod scattering;

pub use bivariate::{bivariate_secular, BivariateSecular};
pub use oracle::secular_at;
pub use polynomial::SecularPolynomial;
pub use scattering::{bond_scattering, bonds, reverse, Bond, BondScattering};

use scattering::{scaled_secular_matrix, Weight};

use crate::graph::MetricGraph;
use crate::poly::{IntPoly, PolyMatrix};
use crate::{Error, Result};

/// Secular polynomial via the `2E x 2E` bond matrix.
pub fn secular_polynomial(g: &MetricGraph) -> Result<SecularPolynomial> {
    if !g.graph().is_connected() {
        return Err(Error::Disconnected);
    }
    let step = g.length_gcd() as usize;
    let weights: Vec<Weight> = g
        .lengths()
        .iter()
        .flat_map(|&l| {
            let w = Weight { coeff: 1, power: (l as usize) / step };
            [w, w]
        })
        .collect();
    let det = scaled_secular_matrix(g.graph(), &weights).det();
    SecularPolynomial::from_multiple(g.unit().clone(), &det.stretch(step))
}

/// Same polynomial via the `V x V` matrix `(1 + z^2) T - 2 z A` on the
/// graph subdivided to unit lengths:
/// `P ~ (1 - z^2)^{E - V} det((1 + z^2) T - 2 z A)`.
pub fn secular_polynomial_vertex_route(g: &MetricGraph) -> Result<SecularPolynomial> {
    if !g.graph().is_connected() {
        return Err(Error::Disconnected);
    }
    let step = g.length_gcd() as usize;
    let coarse = g.coarsest();
    let unit_graph = if coarse.lengths().iter().all(|&l| l == 1) {
        coarse
    } else {
        coarse.fully_subdivided()
    };
    let cg = unit_graph.graph();
    let n = cg.n_vertices();
    let mut m = PolyMatrix::zeros(n);
    for (v, d) in cg.valences().into_iter().enumerate() {
        m.add_term(v, v, d as i64, 0);
        m.add_term(v, v, d as i64, 2);
    }
    for &(u, v) in cg.edges() {
        m.add_term(u, v, -2, 1);
        m.add_term(v, u, -2, 1);
    }
    let det = m.det();
    let e = cg.n_edges() as i64;
    let one_minus_z2 = IntPoly::from_i64s(&[1, 0, -1]);
    let det = if e >= n as i64 {
        &det * &one_minus_z2.pow((e - n as i64) as u32)
    } else {
        det.div_exact(&one_minus_z2.pow((n as i64 - e) as u32))
            .ok_or_else(|| Error::Internal("vertex-route determinant not divisible".into()))?
    };
    SecularPolynomial::from_multiple(g.unit().clone(), &det.stretch(step))
}
