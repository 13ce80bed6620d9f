//! Small helpers for emitting exact numbers as JSON.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{Number, Value};

use crate::poly::IntPoly;

/// Arbitrary-size integer as a JSON number.
pub fn int(x: &BigInt) -> Value {
    Value::Number(x.to_string().parse::<Number>().expect("integer literal is a JSON number"))
}

pub fn ints(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(int).collect())
}

pub fn poly(p: &IntPoly) -> Value {
    ints(p.coeffs())
}

/// Rational as `"p/q"`, denominator always written.
pub fn rational(x: &BigRational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}
