use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::graph::CombinatorialGraph;
use crate::poly::PolyMatrix;

/// Directed copy of an edge. Edge `e` owns bonds `2e` (first endpoint to
/// second) and `2e + 1` (reverse).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bond {
    pub edge: usize,
    pub origin: usize,
    pub terminus: usize,
}

pub fn bonds(g: &CombinatorialGraph) -> Vec<Bond> {
    g.edges()
        .iter()
        .enumerate()
        .flat_map(|(edge, &(u, v))| {
            [Bond { edge, origin: u, terminus: v }, Bond { edge, origin: v, terminus: u }]
        })
        .collect()
}

/// Reversal of a bond.
pub fn reverse(b: usize) -> usize {
    b ^ 1
}

/// Vertex scattering matrix on bonds: `sigma(b'|b) = 2/d - [b' = rev b]`
/// whenever `b` ends where `b'` starts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BondScattering {
    bonds: Vec<Bond>,
    entries: Vec<BigRational>,
}

impl BondScattering {
    pub fn dimension(&self) -> usize {
        self.bonds.len()
    }

    pub fn bonds(&self) -> &[Bond] {
        &self.bonds
    }

    /// Amplitude scattered into `to` from `from`.
    pub fn entry(&self, to: usize, from: usize) -> &BigRational {
        &self.entries[to * self.dimension() + from]
    }

    pub fn rows(&self) -> Vec<Vec<BigRational>> {
        self.entries.chunks(self.dimension().max(1)).map(|r| r.to_vec()).collect()
    }

    /// Exact check of `S^T S = I`.
    pub fn is_orthogonal(&self) -> bool {
        let n = self.dimension();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let dot: BigRational = (0..n).map(|k| self.entry(k, i) * self.entry(k, j)).sum();
                dot == if i == j { BigRational::one() } else { BigRational::zero() }
            })
        })
    }
}

pub fn bond_scattering(g: &CombinatorialGraph) -> BondScattering {
    let bonds = bonds(g);
    let deg = g.valences();
    let n = bonds.len();
    let mut entries = vec![BigRational::zero(); n * n];
    for (to, bt) in bonds.iter().enumerate() {
        let d = deg[bt.origin] as i64;
        for (from, bf) in bonds.iter().enumerate() {
            if bf.terminus == bt.origin {
                let back = if to == reverse(from) { 1 } else { 0 };
                entries[to * n + from] = BigRational::new(BigInt::from(2 - back * d), BigInt::from(d));
            }
        }
    }
    BondScattering { bonds, entries }
}

/// Column weight of a bond in `I - S_v D`: `coeff * z^power`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Weight {
    pub coeff: i64,
    pub power: usize,
}

/// `I - S_v D` with row `b'` multiplied by the valence of its origin, so that
/// all entries are integer polynomials. Its determinant is
/// `prod_v d_v^{d_v}` times the secular determinant.
pub(crate) fn scaled_secular_matrix(g: &CombinatorialGraph, weights: &[Weight]) -> PolyMatrix {
    let bonds = bonds(g);
    let deg = g.valences();
    let n = bonds.len();
    let mut m = PolyMatrix::zeros(n);
    for (to, bt) in bonds.iter().enumerate() {
        let d = deg[bt.origin] as i64;
        m.add_term(to, to, d, 0);
        for (from, bf) in bonds.iter().enumerate() {
            if bf.terminus == bt.origin {
                let back = if to == reverse(from) { 1 } else { 0 };
                let w = weights[from];
                let c = (2 - back * d) * w.coeff;
                if c != 0 {
                    m.add_term(to, from, -c, w.power);
                }
            }
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half(n: i64) -> BigRational {
        BigRational::new(n.into(), 2.into())
    }

    #[test]
    fn loop_transmits_perfectly() {
        let g = CombinatorialGraph::new(1, vec![(0, 0)]).unwrap();
        let s = bond_scattering(&g);
        assert_eq!(s.dimension(), 2);
        assert_eq!(s.entry(0, 0), &BigRational::one());
        assert_eq!(s.entry(1, 1), &BigRational::one());
        assert!(s.entry(0, 1).is_zero() && s.entry(1, 0).is_zero());
    }

    #[test]
    fn star_center_and_leaves() {
        let g = CombinatorialGraph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let s = bond_scattering(&g);
        let third = |n: i64| BigRational::new(n.into(), 3.into());
        // bond 1 is leaf 1 -> center; it scatters into bonds 0, 2, 4
        assert_eq!(s.entry(0, 1), &third(-1));
        assert_eq!(s.entry(2, 1), &third(2));
        assert_eq!(s.entry(4, 1), &third(2));
        // leaf reflection
        assert_eq!(s.entry(1, 0), &BigRational::one());
        assert!(s.is_orthogonal());
    }

    #[test]
    fn fig3b_block_structure() {
        // pendant, loop, pendant at a valence-4 vertex 0
        let g = CombinatorialGraph::new(3, vec![(1, 0), (0, 0), (0, 2)]).unwrap();
        let s = bond_scattering(&g);
        assert!(s.is_orthogonal());
        // bond 0 arrives at the hub: reflection -1/2, transmission 1/2
        assert_eq!(s.entry(1, 0), &half(-1));
        for to in [2, 3, 4] {
            assert_eq!(s.entry(to, 0), &half(1));
        }
        // around the loop: bond 2 continues as bond 2, reverses into bond 3
        assert_eq!(s.entry(2, 2), &half(1));
        assert_eq!(s.entry(3, 2), &half(-1));
        assert_eq!(s.entry(0, 1), &BigRational::one());
    }
}
