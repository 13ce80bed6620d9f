use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntPoly;

/// Polynomial in `Z[z][w]`, stored as coefficients of `w^0, w^1, ...`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BiPoly {
    by_w: Vec<IntPoly>,
}

impl BiPoly {
    pub fn new(mut by_w: Vec<IntPoly>) -> Self {
        while by_w.last().is_some_and(|c| c.is_zero()) {
            by_w.pop();
        }
        BiPoly { by_w }
    }

    pub fn is_zero(&self) -> bool {
        self.by_w.is_empty()
    }

    pub fn w_degree(&self) -> Option<usize> {
        self.by_w.len().checked_sub(1)
    }

    /// Coefficient of `w^i` as a polynomial in `z`.
    pub fn w_coeff(&self, i: usize) -> IntPoly {
        self.by_w.get(i).cloned().unwrap_or_default()
    }

    pub fn w_coeffs(&self) -> &[IntPoly] {
        &self.by_w
    }

    pub fn content(&self) -> BigInt {
        self.by_w.iter().fold(BigInt::zero(), |g, c| g.gcd(&c.content()))
    }

    /// gcd in `Z[z]` of all `w`-coefficients, positive leading coefficient.
    pub fn z_gcd(&self) -> IntPoly {
        self.by_w.iter().fold(IntPoly::zero(), |g, c| g.gcd(c))
    }

    /// Exact division by a polynomial in `z` alone.
    pub fn div_z(&self, g: &IntPoly) -> Option<BiPoly> {
        let parts: Option<Vec<IntPoly>> = self.by_w.iter().map(|c| c.div_exact(g)).collect();
        parts.map(BiPoly::new)
    }

    /// Leading coefficient in (w-degree, z-degree) lexicographic order.
    pub fn lex_leading(&self) -> BigInt {
        self.by_w.last().map(|c| c.leading()).unwrap_or_default()
    }

    /// Integer-primitive copy with positive lexicographic leading coefficient.
    pub fn primitive(&self) -> BiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut g = self.content();
        if self.lex_leading().is_negative() {
            g = -g;
        }
        BiPoly::new(self.by_w.iter().map(|c| c.div_scalar(&g)).collect())
    }

    /// Substitutes `w -> z^m`.
    pub fn specialize_w_power(&self, m: usize) -> IntPoly {
        self.by_w
            .iter()
            .enumerate()
            .fold(IntPoly::zero(), |acc, (j, c)| &acc + &(c * &IntPoly::monomial(1.into(), m * j)))
    }

    /// Sparse `(z-power, w-power) -> coefficient` view.
    pub fn terms(&self) -> BTreeMap<(usize, usize), BigInt> {
        let mut out = BTreeMap::new();
        for (j, c) in self.by_w.iter().enumerate() {
            for (i, a) in c.coeffs().iter().enumerate() {
                if !a.is_zero() {
                    out.insert((i, j), a.clone());
                }
            }
        }
        out
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.by_w.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})w")?,
                _ => write!(f, "({c})w^{j}")?,
            }
        }
        Ok(())
    }
}
