//! Eigenfrequencies with multiplicities read off a secular polynomial, and
//! exact isospectrality.
//!
//! A nonzero eigenfrequency `k` has the multiplicity of `z = e^{iku}` as a
//! root of `P`. The eigenvalue `0` of a connected graph is simple and is
//! reported on its own, whatever the order of the root `z = 1`.

use std::cmp::Ordering;
use std::f64::consts::{PI, TAU};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::graph::{common_rescale, MetricGraph};
use crate::poly::{cyclotomic, squarefree_decomposition, unit_circle_angles, CyclotomicTable, IntPoly};
use crate::secular::{secular_polynomial, SecularPolynomial};
use crate::{json, Error, Result};

const ANGLE_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq)]
pub enum FrequencyValue {
    /// `k = pi * k_over_pi`, coming from a primitive `n`-th root of unity.
    Exact { k_over_pi: BigRational, order: u64 },
    /// Root of a non-cyclotomic squarefree factor; `root_index` counts the
    /// factor's roots by increasing angle in `(0, 2 pi)`.
    Algebraic { factor: IntPoly, root_index: usize, k: f64 },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Eigenfrequency {
    pub value: FrequencyValue,
    pub multiplicity: u32,
}

impl Eigenfrequency {
    pub fn approx(&self) -> f64 {
        match &self.value {
            FrequencyValue::Exact { k_over_pi, .. } => k_over_pi.to_f64().unwrap_or(f64::NAN) * PI,
            FrequencyValue::Algebraic { k, .. } => *k,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.value, FrequencyValue::Exact { .. })
    }

    pub fn to_json(&self) -> Value {
        match &self.value {
            FrequencyValue::Exact { k_over_pi, .. } => json!({
                "type": "rational_pi",
                "num": json::int(k_over_pi.numer()),
                "den": json::int(k_over_pi.denom()),
                "multiplicity": self.multiplicity,
            }),
            FrequencyValue::Algebraic { factor, root_index, k } => json!({
                "type": "algebraic",
                "factor": json::poly(factor),
                "root_index": root_index,
                "approx": format!("{k:.12}"),
                "multiplicity": self.multiplicity,
            }),
        }
    }
}

/// Which part of the spectrum to list.
#[derive(Clone, Debug, PartialEq)]
pub enum Window {
    /// Every eigenfrequency in `(0, k_max]`.
    UpTo(f64),
    /// The first `m` nonzero eigenfrequencies, counted without multiplicity.
    First(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    pub unit: BigRational,
    pub k0_multiplicity: u32,
    pub entries: Vec<Eigenfrequency>,
}

impl SpectrumReport {
    /// Number of eigenvalues (with multiplicity, `k = 0` included) with `k <= kk`.
    pub fn counting(&self, kk: f64) -> u64 {
        self.k0_multiplicity as u64
            + self.entries.iter().filter(|e| e.approx() <= kk).map(|e| e.multiplicity as u64).sum::<u64>()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "unit": json::rational(&self.unit),
            "k0_multiplicity": self.k0_multiplicity,
            "entries": self.entries.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// One root of `P` on the circle, `theta in [0, 2 pi)`.
#[derive(Clone, Debug)]
enum BaseRoot {
    Exact { frac: BigRational, order: u64 },
    Algebraic { factor: IntPoly, index: usize, theta: f64 },
}

impl BaseRoot {
    fn theta(&self) -> f64 {
        match self {
            BaseRoot::Exact { frac, .. } => frac.to_f64().unwrap_or(f64::NAN) * TAU,
            BaseRoot::Algebraic { theta, .. } => *theta,
        }
    }
}

/// Roots of unity are peeled off each squarefree component by trial
/// division with every `Phi_n` of small enough degree; the rest is located
/// numerically.
fn base_roots(p: &IntPoly) -> Result<Vec<(BaseRoot, u32)>> {
    let mut table = CyclotomicTable::new(p.deg());
    let orders: Vec<u64> = table.orders().to_vec();
    let mut out = Vec::new();
    for sf in squarefree_decomposition(p) {
        let mut rest = sf.factor.clone();
        for &n in &orders {
            let phi = table.get(n);
            if phi.deg() > rest.deg() {
                continue;
            }
            if let Some(q) = rest.div_exact(phi) {
                rest = q;
                for a in (0..n).filter(|a| a.gcd(&n) == 1) {
                    let frac = BigRational::new(BigInt::from(a), BigInt::from(n));
                    out.push((BaseRoot::Exact { frac, order: n }, sf.multiplicity));
                }
            }
        }
        if rest.deg() > 0 {
            let factor = rest.primitive();
            let angles = unit_circle_angles(&factor, ANGLE_TOL).ok_or_else(|| {
                Error::Internal(format!("factor {factor} has roots off the unit circle"))
            })?;
            if angles.len() != factor.deg() {
                return Err(Error::Internal(format!("lost roots of {factor}")));
            }
            for (index, theta) in angles.into_iter().enumerate() {
                out.push((BaseRoot::Algebraic { factor: factor.clone(), index, theta }, sf.multiplicity));
            }
        }
    }
    out.sort_by(|(a, _), (b, _)| match (a, b) {
        (BaseRoot::Exact { frac: x, .. }, BaseRoot::Exact { frac: y, .. }) => x.cmp(y),
        _ => a.theta().partial_cmp(&b.theta()).unwrap_or(Ordering::Equal),
    });
    Ok(out)
}

pub fn eigenfrequencies(p: &SecularPolynomial, window: &Window) -> Result<SpectrumReport> {
    let base = base_roots(p.poly())?;
    let unit = p.unit().clone();
    let unit_f = unit.to_f64().unwrap_or(f64::NAN);
    let period = TAU / unit_f;
    let mut entries = Vec::new();
    let done = |entries: &Vec<Eigenfrequency>, next_k: f64| match window {
        Window::UpTo(kmax) => next_k > *kmax,
        Window::First(m) => entries.len() >= *m,
    };
    if base.is_empty() {
        return Ok(SpectrumReport { unit, k0_multiplicity: 1, entries });
    }
    let mut turn = 0u64;
    'outer: loop {
        for (root, mult) in &base {
            let value = match root {
                BaseRoot::Exact { frac, order } => {
                    if turn == 0 && frac.is_zero() {
                        continue;
                    }
                    let r = (frac + BigRational::from_integer(BigInt::from(turn))) * BigInt::from(2);
                    FrequencyValue::Exact { k_over_pi: r / &unit, order: *order }
                }
                BaseRoot::Algebraic { factor, index, theta } => FrequencyValue::Algebraic {
                    factor: factor.clone(),
                    root_index: *index,
                    k: (theta + TAU * turn as f64) / unit_f,
                },
            };
            let e = Eigenfrequency { value, multiplicity: *mult };
            if done(&entries, e.approx()) {
                break 'outer;
            }
            entries.push(e);
        }
        turn += 1;
        if let Window::UpTo(kmax) = window {
            if period * turn as f64 > kmax + period {
                break;
            }
        }
    }
    Ok(SpectrumReport { unit, k0_multiplicity: 1, entries })
}

/// Exponent of `Phi_n` in `P`, i.e. the multiplicity of `e^{2 pi i a / n}`.
pub fn multiplicity_at(p: &SecularPolynomial, a: i64, n: u64) -> Result<u32> {
    if n == 0 || a.rem_euclid(n as i64).gcd(&(n as i64)) != 1 && n != 1 {
        return Err(Error::InvalidSpec(format!("{a}/{n} is not in lowest terms")));
    }
    Ok(p.poly().remove_factor(&cyclotomic(n)).0)
}

/// Exact isospectrality of two connected metric graphs of equal total length.
pub fn is_isospectral(g1: &MetricGraph, g2: &MetricGraph) -> Result<bool> {
    let (a, b) = common_rescale(g1, g2)?;
    Ok(secular_polynomial(&a)? == secular_polynomial(&b)?)
}
