use super::IntPoly;

/// One factor `f^multiplicity` of a squarefree decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeFactor {
    pub factor: IntPoly,
    pub multiplicity: u32,
}

/// Yun's algorithm over `Z[z]`.
///
/// Returns pairwise coprime, squarefree, primitive factors (positive leading
/// coefficient) with `prim(f) = ± Π factor^multiplicity`. Constant factors
/// are omitted.
pub fn squarefree_decomposition(f: &IntPoly) -> Vec<SquarefreeFactor> {
    let f = f.primitive();
    if f.deg() == 0 {
        return Vec::new();
    }
    let df = f.derivative();
    let g = f.gcd(&df);
    let exact = |a: &IntPoly, b: &IntPoly| {
        a.div_exact(b).expect("Yun quotient must be exact over primitive divisors")
    };
    let mut c = exact(&f, &g.primitive());
    let mut d = &exact(&df, &g.primitive()) - &c.derivative();
    let mut out = Vec::new();
    let mut i = 1u32;
    while c.deg() > 0 {
        let a = c.gcd(&d).primitive();
        if a.deg() > 0 {
            out.push(SquarefreeFactor { factor: a.clone(), multiplicity: i });
        }
        c = exact(&c, &a);
        d = &exact(&d, &a) - &c.derivative();
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loop_and_k4_factors() {
        // (1 - z)^2
        let sf = squarefree_decomposition(&IntPoly::from_i64s(&[1, -2, 1]));
        assert_eq!(sf, vec![SquarefreeFactor { factor: IntPoly::from_i64s(&[-1, 1]), multiplicity: 2 }]);

        // (3z^2 + 2z + 3)^3 (z - 1)^4 (z + 1)^2
        let q = IntPoly::from_i64s(&[3, 2, 3]);
        let zm = IntPoly::from_i64s(&[-1, 1]);
        let zp = IntPoly::from_i64s(&[1, 1]);
        let f = &(&q.pow(3) * &zm.pow(4)) * &zp.pow(2);
        let sf = squarefree_decomposition(&f);
        let rebuilt: IntPoly = sf.iter().map(|s| s.factor.pow(s.multiplicity)).product();
        assert_eq!(rebuilt.primitive(), f.primitive());
        let mults: Vec<u32> = sf.iter().map(|s| s.multiplicity).collect();
        assert_eq!(mults, vec![2, 3, 4]);
        assert_eq!(sf[0].factor, zp);
        assert_eq!(sf[1].factor, q);
        assert_eq!(sf[2].factor, zm);
    }

    #[test]
    fn squarefree_input_is_single_factor() {
        let f = IntPoly::from_i64s(&[3, 7, 0, 7, 3]);
        let sf = squarefree_decomposition(&f);
        assert_eq!(sf.len(), 1);
        assert_eq!(sf[0].multiplicity, 1);
    }
}
