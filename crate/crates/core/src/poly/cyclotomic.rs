use std::collections::HashMap;

use super::IntPoly;

/// Euler's totient.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The `n`-th cyclotomic polynomial.
///
/// Built from `Φ_{mp}(z) = Φ_m(z^p) / Φ_m(z)` over the distinct primes of
/// `n`, then `Φ_n(z) = Φ_{rad n}(z^{n / rad n})`, so intermediate degrees
/// never exceed `p·φ(m)`.
pub fn cyclotomic(n: u64) -> IntPoly {
    assert!(n >= 1);
    let mut phi = IntPoly::from_i64s(&[-1, 1]);
    let mut rad = 1u64;
    for p in prime_factors(n) {
        let stretched = phi.stretch(p as usize);
        phi = stretched.div_exact(&phi).expect("cyclotomic recursion is exact");
        rad *= p;
    }
    phi.stretch((n / rad) as usize)
}

/// Memoized cyclotomic polynomials for every `n` with `φ(n) ≤ max_degree`.
#[derive(Debug, Clone)]
pub struct CyclotomicTable {
    max_degree: usize,
    orders: Vec<u64>,
    cache: HashMap<u64, IntPoly>,
}

impl CyclotomicTable {
    pub fn new(max_degree: usize) -> Self {
        // φ(n) ≥ sqrt(n/2), so n ≤ 2·d² bounds every candidate order.
        let limit = (2 * max_degree * max_degree).max(2) as u64;
        let orders = (1..=limit)
            .filter(|&n| euler_phi(n) as usize <= max_degree)
            .collect();
        CyclotomicTable { max_degree, orders, cache: HashMap::new() }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Orders `n` with `φ(n)` no larger than the table's degree, ascending.
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn get(&mut self, n: u64) -> &IntPoly {
        self.cache.entry(n).or_insert_with(|| cyclotomic(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic(2), IntPoly::from_i64s(&[1, 1]));
        assert_eq!(cyclotomic(4), IntPoly::from_i64s(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), IntPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), IntPoly::from_i64s(&[1, 0, -1, 0, 1]));
        // Φ_105 is the first with a coefficient of absolute value 2
        assert!(cyclotomic(105).coeffs().iter().any(|c| *c == (-2).into()));
    }

    #[test]
    fn product_over_divisors_is_binomial() {
        for n in 1..40u64 {
            let prod: IntPoly = (1..=n).filter(|d| n % d == 0).map(cyclotomic).product();
            assert_eq!(prod, IntPoly::binomial(n as usize, -1), "n = {n}");
            assert_eq!(cyclotomic(n).deg() as u64, euler_phi(n));
        }
    }

    #[test]
    fn table_orders_respect_degree() {
        let t = CyclotomicTable::new(4);
        assert_eq!(t.orders(), &[1, 2, 3, 4, 5, 6, 8, 10, 12]);
    }
}
