use std::fmt;

use num_bigint::BigInt;

use super::CombinatorialGraph;
use crate::poly::{IntPoly, PolyMatrix};
use crate::{Error, Result};

/// `C(x) = det(Tx - A)` with `T` the diagonal valence matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharPoly(IntPoly);

impl CharPoly {
    /// Coefficients from `x^0` upward.
    pub fn coeffs(&self) -> &[BigInt] {
        self.0.coeffs()
    }

    pub fn poly(&self) -> &IntPoly {
        &self.0
    }

    /// Content removed and leading coefficient positive. `det(Tx - A)`
    /// carries the factor `det T`, which differs between isospectral
    /// partners with different valences; this form is `det(x - T^-1 A)`
    /// up to a positive integer and is the form used for bucketing.
    pub fn normalized(&self) -> CharPoly {
        CharPoly(self.0.primitive())
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::poly::write_poly(f, self.0.coeffs(), "x")
    }
}

/// Characteristic polynomial for simple graphs. A single vertex gives the
/// zero polynomial since both `T` and `A` vanish.
pub fn char_poly(g: &CombinatorialGraph) -> Result<CharPoly> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = g.n_vertices();
    let mut m = PolyMatrix::zeros(n);
    for (v, d) in g.valences().into_iter().enumerate() {
        m.add_term(v, v, d as i64, 1);
    }
    for &(u, v) in g.edges() {
        m.add_term(u, v, -1, 0);
        m.add_term(v, u, -1, 0);
    }
    Ok(CharPoly(m.det()))
}
