//! Direct evaluation of `det(I - S_v D(z0))` at a rational point, by
//! fraction-free elimination on an integer matrix. Shares nothing with the
//! interpolation path beyond the bond numbering.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use super::scattering::{bonds, reverse};
use crate::graph::MetricGraph;

/// Exact `det(I - S_v D(z0))`.
pub fn secular_at(g: &MetricGraph, z0: &BigRational) -> BigRational {
    let bs = bonds(g.graph());
    let deg = g.graph().valences();
    let n = bs.len();
    let (p, q) = (z0.numer().clone(), z0.denom().clone());
    let len = |b: usize| g.lengths()[bs[b].edge] as u32;
    // row b' times d(origin), column b times q^{L_b}
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for (to, bt) in bs.iter().enumerate() {
        let d = BigInt::from(deg[bt.origin]);
        m[to][to] += &d * Pow::pow(&q, len(to));
        for (from, bf) in bs.iter().enumerate() {
            if bf.terminus == bt.origin {
                let back = if to == reverse(from) { d.clone() } else { BigInt::zero() };
                m[to][from] -= (BigInt::from(2) - back) * Pow::pow(&p, len(from));
            }
        }
    }
    let det = bareiss(m);
    let mut scale = BigInt::one();
    for (b, bt) in bs.iter().enumerate() {
        scale *= BigInt::from(deg[bt.origin]) * Pow::pow(&q, len(b));
    }
    BigRational::new(det, scale)
}

fn bareiss(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}
