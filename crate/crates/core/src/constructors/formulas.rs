use num_traits::Signed;
use serde_json::{json, Value};

use super::{double, figure, FamilySpec};
use crate::graph::MetricGraph;
use crate::poly::IntPoly;
use crate::secular::{secular_polynomial, SecularPolynomial};
use crate::{json, Error, Result};

/// A computed secular polynomial next to a closed form.
#[derive(Clone, Debug)]
pub struct FormulaReport {
    pub subject: String,
    pub formula: &'static str,
    pub computed: SecularPolynomial,
    pub expected: IntPoly,
    pub matches: bool,
}

impl FormulaReport {
    pub fn to_json(&self) -> Value {
        json!({
            "subject": self.subject,
            "formula": self.formula,
            "matches": self.matches,
            "computed": self.computed.to_json(),
            "expected": json::poly(&self.expected),
        })
    }
}

/// Scalar multiple and power of `z` removed; constant term positive.
fn normalized(p: &IntPoly) -> IntPoly {
    let q = p.strip_z().primitive();
    if q.coeff(0).is_negative() {
        -q
    } else {
        q
    }
}

/// Equal up to a nonzero scalar and a power of `z`.
pub fn proportional(a: &IntPoly, b: &IntPoly) -> bool {
    !a.is_zero() && !b.is_zero() && normalized(a) == normalized(b)
}

fn report(subject: String, formula: &'static str, g: &MetricGraph, expected: IntPoly) -> Result<FormulaReport> {
    let computed = secular_polynomial(g)?;
    let matches = proportional(computed.poly(), &expected);
    Ok(FormulaReport { subject, formula, computed, expected, matches })
}

pub fn validate_formula(spec: &FamilySpec) -> Result<FormulaReport> {
    let (formula, expected) = spec
        .closed_form()
        .ok_or_else(|| Error::NoFormula(spec.to_string()))?;
    report(spec.to_string(), formula, &spec.build()?, expected)
}

/// Doubling multiplies the secular polynomial by `z^{2L_e} - 1` per edge.
pub fn validate_doubling(g: &MetricGraph) -> Result<FormulaReport> {
    let base = secular_polynomial(g)?;
    let mut expected = base.poly().clone();
    for &l in g.lengths() {
        expected = &expected * &IntPoly::binomial(2 * l as usize, -1);
    }
    report(format!("double of {g}"), "doubling", &double(g)?, expected)
}

/// The hand-computed lasso polynomial `(z^2 - 1)^2 (3 + 7z^2 + 7z^4 + 3z^6)`
/// for both members of the small triplet-derived pair.
pub fn validate_appendix() -> Result<Vec<FormulaReport>> {
    let expected = &IntPoly::binomial(2, -1).pow(2) * &IntPoly::from_i64s(&[3, 0, 7, 0, 7, 0, 3]);
    ["6c", "6d"]
        .iter()
        .map(|name| {
            let g = figure(name)?;
            report(format!("figure:{name}"), "lasso pair", &g, expected.clone())
        })
        .collect()
}

/// Families accepted by [`formula_sweep`].
pub const SWEEP_FAMILIES: &[&str] = &[
    "interval", "loop", "star", "complete", "flower", "pumpkin", "pumpkin-pair", "pumpkin-star",
    "chain-of-loops", "ring-of-loops", "doubling", "appendix",
];

/// Multisets of positive integers with sum at most `max`, as non-increasing
/// sequences.
fn multisets(max: u64) -> Vec<Vec<u64>> {
    fn go(rest: u64, cap: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for x in (1..=cap.min(rest)).rev() {
            cur.push(x);
            go(rest - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max, max, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `k` into exactly `s` positive parts, non-increasing.
fn partitions(k: usize, s: usize) -> Vec<Vec<usize>> {
    multisets(k as u64)
        .into_iter()
        .filter(|p| p.len() == s && p.iter().sum::<u64>() == k as u64)
        .map(|p| p.into_iter().map(|x| x as usize).collect())
        .collect()
}

fn sweep_specs(family: &str, max: Option<usize>) -> Result<Vec<FamilySpec>> {
    use FamilySpec::*;
    let upto = |default: usize| max.unwrap_or(default);
    Ok(match family {
        "interval" => (1..=upto(4) as u64).map(Path).collect(),
        "loop" => (1..=upto(4) as u64).map(Loop).collect(),
        "star" => (1..=upto(6)).flat_map(|s| (1..=2).map(move |l| Star(vec![l; s]))).collect(),
        "complete" => (3..=upto(10)).map(Complete).collect(),
        "flower" => (1..=upto(5)).flat_map(|s| (1..=2).map(move |l| Flower { petals: s, length: l })).collect(),
        "pumpkin" => (1..=upto(6)).flat_map(|d| (1..=2).map(move |l| Pumpkin { degree: d, length: l })).collect(),
        "pumpkin-pair" => (2..=upto(12))
            .flat_map(|k| (1..=k / 2).map(move |k2| ConnectedPumpkinPair { k1: k - k2, k2, length: 1 }))
            .collect(),
        "pumpkin-star" => (2..=5)
            .flat_map(|s| (s..=upto(12)).flat_map(move |k| partitions(k, s)))
            .map(|edges| StarWithPumpkinLeaves { edges, lengths: vec![1] })
            .collect(),
        "chain-of-loops" => multisets(upto(12) as u64).into_iter().map(ChainOfLoops).collect(),
        "ring-of-loops" => multisets(upto(12) as u64).into_iter().filter(|m| m.len() >= 2).map(RingOfLoops).collect(),
        _ => return Err(Error::InvalidSpec(format!("unknown formula family `{family}`"))),
    })
}

/// Checks every closed form over a standard parameter range; `max` bounds
/// the main size parameter of the family (vertices, total length, edges).
pub fn formula_sweep(family: Option<&str>, max: Option<usize>) -> Result<Vec<FormulaReport>> {
    let families: Vec<&str> = match family {
        Some(f) if SWEEP_FAMILIES.contains(&f) => vec![f],
        Some(f) => return Err(Error::InvalidSpec(format!("unknown formula family `{f}`"))),
        None => SWEEP_FAMILIES.to_vec(),
    };
    let mut out = Vec::new();
    for f in families {
        match f {
            "appendix" => out.extend(validate_appendix()?),
            "doubling" => {
                for name in super::FIGURES {
                    out.push(validate_doubling(&figure(name)?)?);
                }
                for spec in ["complete:4", "tadpole:3,2", "star:1,2,3", "pumpkin-star:3+2@1"] {
                    out.push(validate_doubling(&spec.parse::<FamilySpec>()?.build()?)?);
                }
            }
            _ => {
                let reports: Vec<Result<FormulaReport>> = {
                    use rayon::prelude::*;
                    sweep_specs(f, max)?.par_iter().map(validate_formula).collect()
                };
                for r in reports {
                    out.push(r?);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families_match() {
        for s in ["complete:4", "loop:3", "interval:2", "pumpkin:3@1", "flower:2@1", "pumpkin-pair:7+5@1"] {
            let r = validate_formula(&s.parse().unwrap()).unwrap();
            assert!(r.matches, "{s}: {} vs {}", r.computed, r.expected);
        }
        assert!(matches!(validate_formula(&FamilySpec::Tadpole { loop_len: 2, tail: 1 }), Err(Error::NoFormula(_))));
    }

    #[test]
    fn proportional_ignores_scalar_and_monomial() {
        let a = IntPoly::from_i64s(&[1, 0, -1]);
        let b = IntPoly::from_i64s(&[0, 0, -3, 0, 3]);
        assert!(proportional(&a, &b));
        assert!(!proportional(&a, &IntPoly::from_i64s(&[1, 0, 1])));
    }

    #[test]
    fn sweep_helpers() {
        assert_eq!(multisets(3), vec![vec![3], vec![2], vec![2, 1], vec![1], vec![1, 1], vec![1, 1, 1]]);
        assert_eq!(partitions(5, 2), vec![vec![4, 1], vec![3, 2]]);
        let r = formula_sweep(Some("pumpkin-pair"), Some(5)).unwrap();
        assert_eq!(r.len(), 1 + 1 + 2 + 2);
        assert!(r.iter().all(|r| r.matches));
        assert!(formula_sweep(Some("dodecahedron"), None).is_err());
    }
}
