use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::poly::{aberth_roots, squarefree_decomposition, IntPoly};
use crate::{json, Error, Result};

/// `P(z) = (1/q) * sum c_j z^j` with `z = e^{i k u}`, stored with coprime
/// integer coefficients and `c_0 = q > 0`, so `P(0) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SecularPolynomial {
    unit: BigRational,
    poly: IntPoly,
}

impl SecularPolynomial {
    /// Normalizes any nonzero multiple of a secular determinant.
    pub fn from_multiple(unit: BigRational, det: &IntPoly) -> Result<Self> {
        if det.coeff(0).is_zero() {
            return Err(Error::Internal(format!("secular determinant vanishes at z = 0: {det}")));
        }
        let mut poly = det.primitive();
        if poly.coeff(0).is_negative() {
            poly = -poly;
        }
        Ok(SecularPolynomial { unit, poly })
    }

    pub fn unit(&self) -> &BigRational {
        &self.unit
    }

    /// Integer numerator polynomial.
    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn coeffs(&self) -> &[BigInt] {
        self.poly.coeffs()
    }

    pub fn denom(&self) -> BigInt {
        self.poly.coeff(0)
    }

    pub fn degree(&self) -> usize {
        self.poly.deg()
    }

    /// Exact value at a rational point.
    pub fn eval(&self, z: &BigRational) -> BigRational {
        self.poly.eval_rational(z) / BigRational::from_integer(self.denom())
    }

    /// Re-expresses the polynomial in a unit `unit / k`: `P(z) -> P(z^k)`.
    pub fn stretch(&self, k: usize) -> SecularPolynomial {
        SecularPolynomial {
            unit: &self.unit / BigRational::from_integer(BigInt::from(k)),
            poly: self.poly.stretch(k),
        }
    }

    /// Representation in a finer unit dividing the current one.
    pub fn to_unit(&self, unit: &BigRational) -> Result<SecularPolynomial> {
        let r = &self.unit / unit;
        if !r.is_integer() || !r.is_positive() {
            return Err(Error::UnitMismatch(self.unit.to_string(), unit.to_string()));
        }
        let k: usize = r
            .to_integer()
            .try_into()
            .map_err(|_| Error::Internal("unit ratio overflow".into()))?;
        Ok(self.stretch(k))
    }

    /// Coarsest representation: exponents divided by their gcd and the unit
    /// enlarged to match. Two graphs of equal total length are isospectral
    /// iff their keys are equal.
    pub fn spectral_key(&self) -> (BigRational, IntPoly) {
        let g = self.poly.exponent_gcd().max(1);
        (&self.unit * BigRational::from_integer(BigInt::from(g)), self.poly.compress(g))
    }

    /// Same spectrum up to the choice of unit.
    pub fn same_spectrum(&self, other: &SecularPolynomial) -> bool {
        self.spectral_key() == other.spectral_key()
    }

    /// Checks `P(0) = 1`, degree `2L` and the palindrome `c_j = s c_{2L-j}`.
    /// Returns the sign `s`.
    pub fn check_exact_invariants(&self, total_units: u64) -> Result<i8> {
        if !self.denom().is_positive() {
            return Err(Error::Internal("constant term must be positive".into()));
        }
        if self.degree() as u64 != 2 * total_units {
            return Err(Error::Internal(format!(
                "degree {} differs from 2L = {}",
                self.degree(),
                2 * total_units
            )));
        }
        self.poly
            .self_inversive_sign()
            .ok_or_else(|| Error::Internal("secular polynomial is not self-inversive".into()))
    }

    /// Largest distance of a numerically located root from the unit circle.
    /// Roots are taken from the squarefree factors, which keeps them simple.
    pub fn max_root_deviation(&self) -> f64 {
        squarefree_decomposition(&self.poly)
            .iter()
            .flat_map(|f| aberth_roots(&f.factor))
            .map(|z| (z.norm() - 1.0).abs())
            .fold(0.0, f64::max)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "unit": json::rational(&self.unit),
            "denom": json::int(&self.denom()),
            "coeffs": json::poly(&self.poly),
        })
    }

    /// Smallest unit in which both polynomials can be written.
    pub fn common_unit(&self, other: &SecularPolynomial) -> BigRational {
        BigRational::new(
            self.unit.numer().gcd(other.unit.numer()),
            self.unit.denom().lcm(other.unit.denom()),
        )
    }
}

impl fmt::Display for SecularPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / {}   [z = exp(i k {})]", self.poly, self.denom(), self.unit)
    }
}
