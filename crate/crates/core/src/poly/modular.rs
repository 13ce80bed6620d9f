//! Exact determinants of integer polynomial matrices by multi-modular
//! evaluation and interpolation.
//!
//! For each word-sized prime the determinant is evaluated at `D + 1`
//! consecutive points (`D` an a priori degree bound), interpolated, and the
//! residues are lifted with the Chinese remainder theorem. The number of
//! primes comes from a Hadamard-style bound on the coefficients, so the
//! result is exact, not probabilistic.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use super::IntPoly;

/// Square matrix whose entries are integer polynomials with small coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<Vec<i64>>,
}

impl PolyMatrix {
    pub fn zeros(n: usize) -> Self {
        PolyMatrix { n, entries: vec![Vec::new(); n * n] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Adds `c * z^power` to entry `(i, j)`.
    pub fn add_term(&mut self, i: usize, j: usize, c: i64, power: usize) {
        let e = &mut self.entries[i * self.n + j];
        if e.len() <= power {
            e.resize(power + 1, 0);
        }
        e[power] += c;
    }

    pub fn entry(&self, i: usize, j: usize) -> &[i64] {
        &self.entries[i * self.n + j]
    }

    fn entry_degree(&self, i: usize, j: usize) -> Option<usize> {
        self.entry(i, j).iter().rposition(|&c| c != 0)
    }

    fn entry_norm(&self, i: usize, j: usize) -> f64 {
        self.entry(i, j).iter().map(|c| c.unsigned_abs() as f64).sum()
    }

    /// Degree bound for the determinant, or `None` if a row or column is zero.
    fn degree_bound(&self) -> Option<usize> {
        let n = self.n;
        let mut rows = 0usize;
        for i in 0..n {
            rows += (0..n).filter_map(|j| self.entry_degree(i, j)).max()?;
        }
        let mut cols = 0usize;
        for j in 0..n {
            cols += (0..n).filter_map(|i| self.entry_degree(i, j)).max()?;
        }
        Some(rows.min(cols))
    }

    /// log2 of a bound on the absolute value of every determinant coefficient.
    fn coefficient_bits(&self) -> f64 {
        let n = self.n;
        let rows: f64 = (0..n)
            .map(|i| (0..n).map(|j| self.entry_norm(i, j)).sum::<f64>().max(1.0).log2())
            .sum();
        let cols: f64 = (0..n)
            .map(|j| (0..n).map(|i| self.entry_norm(i, j)).sum::<f64>().max(1.0).log2())
            .sum();
        rows.min(cols)
    }

    /// Exact determinant as an integer polynomial.
    pub fn det(&self) -> IntPoly {
        if self.n == 0 {
            return IntPoly::one();
        }
        let Some(deg) = self.degree_bound() else {
            return IntPoly::zero();
        };
        // sign bit plus slack for floating-point rounding in the bound
        let bits = self.coefficient_bits() + 4.0;
        let primes = primes();
        let mut needed = 0usize;
        let mut acc = 0.0;
        while acc < bits {
            acc += (primes[needed] as f64).log2();
            needed += 1;
        }
        assert!(needed <= primes.len(), "determinant coefficients exceed prime supply");
        assert!((deg as u64) < primes[needed - 1], "degree bound exceeds prime size");

        let residues: Vec<Vec<u64>> = primes[..needed]
            .par_iter()
            .map(|&p| self.det_coeffs_mod(p, deg))
            .collect();
        let coeffs = (0..=deg)
            .map(|k| {
                let rs: Vec<u64> = residues.iter().map(|r| r[k]).collect();
                crt_symmetric(&rs, &primes[..needed])
            })
            .collect();
        IntPoly::new(coeffs)
    }

    /// Coefficients (mod p) of the determinant, degree at most `deg`.
    fn det_coeffs_mod(&self, p: u64, deg: usize) -> Vec<u64> {
        let n = self.n;
        let max_pow = self.entries.iter().map(|e| e.len()).max().unwrap_or(1).max(1);
        let reduced: Vec<Vec<u64>> = self
            .entries
            .iter()
            .map(|e| e.iter().map(|&c| c.rem_euclid(p as i64) as u64).collect())
            .collect();
        let mut values = Vec::with_capacity(deg + 1);
        let mut pows = vec![0u64; max_pow];
        let mut m = vec![0u64; n * n];
        for x in 0..=deg as u64 {
            pows[0] = 1;
            for k in 1..max_pow {
                pows[k] = mul_mod(pows[k - 1], x, p);
            }
            for (slot, e) in m.iter_mut().zip(&reduced) {
                let mut v = 0u64;
                for (c, pw) in e.iter().zip(&pows) {
                    if *c != 0 {
                        v = (v + mul_mod(*c, *pw, p)) % p;
                    }
                }
                *slot = v;
            }
            values.push(det_mod(&mut m, n, p));
        }
        interpolate_consecutive(&values, p)
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Determinant of a dense matrix over `F_p` (destroys `m`).
pub(crate) fn det_mod(m: &mut [u64], n: usize, p: u64) -> u64 {
    let mut det = 1u64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| m[r * n + col] != 0) else {
            return 0;
        };
        if piv != col {
            for k in 0..n {
                m.swap(piv * n + k, col * n + k);
            }
            det = (p - det) % p;
        }
        let pv = m[col * n + col];
        det = det * pv % p;
        let inv = inv_mod(pv, p);
        for r in col + 1..n {
            let f = m[r * n + col] * inv % p;
            if f == 0 {
                continue;
            }
            for k in col..n {
                let sub = f * m[col * n + k] % p;
                m[r * n + k] = (m[r * n + k] + p - sub) % p;
            }
        }
    }
    det
}

/// Newton interpolation through `(i, values[i])`, `i = 0..len`.
fn interpolate_consecutive(values: &[u64], p: u64) -> Vec<u64> {
    let d = values.len();
    let mut c = values.to_vec();
    for j in 1..d {
        let inv = inv_mod(j as u64, p);
        for i in (j..d).rev() {
            c[i] = (c[i] + p - c[i - 1]) % p * inv % p;
        }
    }
    // Newton basis -> monomial basis, nodes x_i = i
    let mut poly = vec![0u64; d];
    for i in (0..d).rev() {
        // poly = poly * (z - i) + c[i]
        let mut next = vec![0u64; d];
        for k in 0..d {
            if poly[k] == 0 {
                continue;
            }
            if k + 1 < d {
                next[k + 1] = (next[k + 1] + poly[k]) % p;
            }
            let sub = poly[k] * (i as u64 % p) % p;
            next[k] = (next[k] + p - sub) % p;
        }
        next[0] = (next[0] + c[i]) % p;
        poly = next;
    }
    poly
}

/// Lifts residues to the unique integer in `(-M/2, M/2]`.
fn crt_symmetric(residues: &[u64], primes: &[u64]) -> BigInt {
    let mut x = BigInt::from(residues[0]);
    let mut modulus = BigInt::from(primes[0]);
    for (&r, &p) in residues.iter().zip(primes).skip(1) {
        let pb = BigInt::from(p);
        let xm = x.mod_floor(&pb).to_u64().unwrap_or(0);
        let mm = modulus.mod_floor(&pb).to_u64().unwrap_or(0);
        let t = (r + p - xm) % p * inv_mod(mm, p) % p;
        x += &modulus * BigInt::from(t);
        modulus *= BigInt::from(p);
    }
    let half = &modulus >> 1usize;
    if x > half {
        x -= &modulus;
    }
    if x.is_zero() {
        BigInt::zero()
    } else {
        x
    }
}

/// Descending 31-bit primes; products stay inside `u64`.
pub(crate) fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(512);
        let mut c = (1u64 << 31) - 1;
        while out.len() < 512 {
            if is_prime(c) {
                out.push(c);
            }
            c -= 2;
        }
        out
    })
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_secular_determinant() {
        // det [[1, -z], [-z, 1]] = 1 - z^2
        let mut m = PolyMatrix::zeros(2);
        m.add_term(0, 0, 1, 0);
        m.add_term(1, 1, 1, 0);
        m.add_term(0, 1, -1, 1);
        m.add_term(1, 0, -1, 1);
        assert_eq!(m.det(), IntPoly::from_i64s(&[1, 0, -1]));
    }

    #[test]
    fn large_coefficients_survive_crt() {
        // diag(10^6 z + 10^6) repeated 12 times: (10^6)^12 (z+1)^12
        let n = 12;
        let mut m = PolyMatrix::zeros(n);
        for i in 0..n {
            m.add_term(i, i, 1_000_000, 0);
            m.add_term(i, i, 1_000_000, 1);
        }
        let expected = IntPoly::from_i64s(&[1, 1]).pow(12).scale(&BigInt::from(10).pow(72));
        assert_eq!(m.det(), expected);
    }

    #[test]
    fn singular_and_empty() {
        let mut m = PolyMatrix::zeros(2);
        m.add_term(0, 0, 1, 1);
        m.add_term(0, 1, 1, 1);
        m.add_term(1, 0, 2, 1);
        m.add_term(1, 1, 2, 1);
        assert!(m.det().is_zero());
        assert!(PolyMatrix::zeros(0).det().is_one());
        assert!(PolyMatrix::zeros(3).det().is_zero());
    }

    #[test]
    fn crt_negative_values() {
        let ps = &primes()[..3];
        let v = -123456789012345678i64;
        let rs: Vec<u64> = ps.iter().map(|&p| v.rem_euclid(p as i64) as u64).collect();
        assert_eq!(crt_symmetric(&rs, ps), BigInt::from(v));
    }
}
