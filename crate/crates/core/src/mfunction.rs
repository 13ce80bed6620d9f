//! M-functions at a boundary vertex: the pendant-attachment signature and a
//! direct Dirichlet-to-Neumann solve used to double-check it.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::graph::MetricGraph;
use crate::poly::{BiPoly, IntPoly, PolyMatrix};
use crate::secular::bivariate_secular;
use crate::{json, Error, Result};

/// `w`-primitive part of the pendant secular polynomial `Q(z, w)`, plus the
/// `z`-only factor that was divided out. The latter collects eigenfunctions
/// vanishing at the vertex, which the M-function cannot see.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MSignature {
    signature: BiPoly,
    discarded: IntPoly,
    vertex: usize,
    unit: BigRational,
}

impl MSignature {
    pub fn signature(&self) -> &BiPoly {
        &self.signature
    }

    pub fn discarded_factor(&self) -> &IntPoly {
        &self.discarded
    }

    pub fn vertex(&self) -> usize {
        self.vertex
    }

    pub fn unit(&self) -> &BigRational {
        &self.unit
    }

    pub fn to_json(&self) -> Value {
        let terms: serde_json::Map<String, Value> = self
            .signature
            .terms()
            .iter()
            .map(|((i, j), c)| (format!("[{i},{j}]"), json::int(c)))
            .collect();
        json!({
            "vertex": self.vertex,
            "unit": json::rational(&self.unit),
            "signature": terms,
            "discarded_factor": json::poly(&self.discarded),
        })
    }
}

pub fn m_signature(g: &MetricGraph, v: usize) -> Result<MSignature> {
    let q = bivariate_secular(g, v)?;
    let gz = q.poly().z_gcd().primitive();
    let signature = q
        .poly()
        .div_z(&gz)
        .ok_or_else(|| Error::Internal("z-gcd does not divide".into()))?
        .primitive();
    Ok(MSignature { signature, discarded: gz, vertex: v, unit: g.unit().clone() })
}

/// `M(k) = i k N(z) / D(z)` in lowest terms, `D` with positive leading
/// coefficient. The derivative is taken along each edge away from the vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MRational {
    num: IntPoly,
    den: IntPoly,
    vertex: usize,
    unit: BigRational,
}

impl MRational {
    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn vertex(&self) -> usize {
        self.vertex
    }

    fn reduced(num: IntPoly, den: IntPoly, vertex: usize, unit: BigRational) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Internal("Dirichlet problem is singular".into()));
        }
        if num.is_zero() {
            return Ok(MRational { num, den: IntPoly::one(), vertex, unit });
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap());
        if d.leading().is_negative() {
            n = -n;
            d = -d;
        }
        Ok(MRational { num: n, den: d, vertex, unit })
    }

    /// Sum of two M-functions at a shared vertex.
    pub fn add(&self, other: &MRational) -> Result<MRational> {
        if self.unit != other.unit {
            return Err(Error::UnitMismatch(self.unit.to_string(), other.unit.to_string()));
        }
        let num = &(&self.num * &other.den) + &(&other.num * &self.den);
        MRational::reduced(num, &self.den * &other.den, self.vertex, self.unit.clone())
    }

    /// Equality as functions of `k`.
    pub fn same_function(&self, other: &MRational) -> bool {
        self.unit == other.unit && self.num == other.num && self.den == other.den
    }
}

impl fmt::Display for MRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ik ({}) / ({})", self.num, self.den)
    }
}

/// Solves for `f = alpha e^{ikx} + beta e^{ik(L - x)}` on every edge with
/// continuity everywhere, Neumann balance away from `v` and `f(v) = 1`; the
/// derivative sum at `v` over `ik` is `-det([[A, b], [c, 0]]) / det(A)`.
pub fn m_rational(g: &MetricGraph, v: usize) -> Result<MRational> {
    g.graph().check_vertex(v)?;
    if !g.graph().is_connected() {
        return Err(Error::Disconnected);
    }
    let step = g.length_gcd() as usize;
    let n = g.n_vertices();
    let e = g.n_edges();
    // unknowns: alpha_e = 2e, beta_e = 2e+1, then f_u for u != v
    let fcol = |u: usize| 2 * e + if u < v { u } else { u - 1 };
    let size = 2 * e + n - 1;
    let mut a = PolyMatrix::zeros(size + 1);
    let rhs = size;
    let mut row = 0;
    let mut neumann_row = vec![usize::MAX; n];
    for u in (0..n).filter(|&u| u != v) {
        neumann_row[u] = 2 * e + if u < v { u } else { u - 1 };
    }
    for (i, (&(x, y), &len)) in g.graph().edges().iter().zip(g.lengths()).enumerate() {
        let l = len as usize / step;
        let (al, be) = (2 * i, 2 * i + 1);
        // continuity at the start: alpha + beta z^L = f_x
        a.add_term(row, al, 1, 0);
        a.add_term(row, be, 1, l);
        if x == v {
            a.add_term(row, rhs, 1, 0);
        } else {
            a.add_term(row, fcol(x), -1, 0);
        }
        row += 1;
        // continuity at the end: alpha z^L + beta = f_y
        a.add_term(row, al, 1, l);
        a.add_term(row, be, 1, 0);
        if y == v {
            a.add_term(row, rhs, 1, 0);
        } else {
            a.add_term(row, fcol(y), -1, 0);
        }
        row += 1;
        // derivatives away from the vertex: alpha - beta z^L at x, beta - alpha z^L at y
        if x != v {
            a.add_term(neumann_row[x], al, 1, 0);
            a.add_term(neumann_row[x], be, -1, l);
        } else {
            a.add_term(size, al, 1, 0);
            a.add_term(size, be, -1, l);
        }
        if y != v {
            a.add_term(neumann_row[y], be, 1, 0);
            a.add_term(neumann_row[y], al, -1, l);
        } else {
            a.add_term(size, be, 1, 0);
            a.add_term(size, al, -1, l);
        }
    }
    let bordered = a.det();
    let mut inner = PolyMatrix::zeros(size);
    for i in 0..size {
        for j in 0..size {
            for (p, &c) in a.entry(i, j).iter().enumerate() {
                if c != 0 {
                    inner.add_term(i, j, c, p);
                }
            }
        }
    }
    let den = inner.det();
    MRational::reduced((-bordered).stretch(step), den.stretch(step), v, g.unit().clone())
}

/// M-function equality by signature, confirmed by the direct solve.
pub fn same_m(g1: &MetricGraph, v1: usize, g2: &MetricGraph, v2: usize) -> Result<bool> {
    if g1.unit() != g2.unit() {
        return Err(Error::UnitMismatch(g1.unit().to_string(), g2.unit().to_string()));
    }
    let by_sig = m_signature(g1, v1)?.signature == m_signature(g2, v2)?.signature;
    let by_solve = m_rational(g1, v1)?.same_function(&m_rational(g2, v2)?);
    if by_sig != by_solve {
        return Err(Error::Internal(format!(
            "signature ({by_sig}) and direct solve ({by_solve}) disagree"
        )));
    }
    Ok(by_sig)
}

/// Classes of `(graph index, vertex)` with equal M-functions, singletons
/// dropped, ordered by their first member.
pub fn hot_classes(graphs: &[MetricGraph]) -> Result<Vec<Vec<(usize, usize)>>> {
    if let Some(first) = graphs.first() {
        if let Some(bad) = graphs.iter().find(|g| g.unit() != first.unit()) {
            return Err(Error::UnitMismatch(first.unit().to_string(), bad.unit().to_string()));
        }
    }
    let slots: Vec<(usize, usize)> = graphs
        .iter()
        .enumerate()
        .flat_map(|(i, g)| (0..g.n_vertices()).map(move |v| (i, v)))
        .collect();
    let keyed: Vec<(BiPoly, MRational)> = slots
        .par_iter()
        .map(|&(i, v)| {
            let sig = m_signature(&graphs[i], v)?.signature;
            let mr = m_rational(&graphs[i], v)?;
            Ok((sig, mr))
        })
        .collect::<Result<_>>()?;
    let mut by_sig: BTreeMap<&BiPoly, Vec<usize>> = BTreeMap::new();
    for (idx, (sig, _)) in keyed.iter().enumerate() {
        by_sig.entry(sig).or_default().push(idx);
    }
    let mut classes: Vec<Vec<(usize, usize)>> = Vec::new();
    for members in by_sig.values() {
        let head = &keyed[members[0]].1;
        if members.iter().any(|&m| !keyed[m].1.same_function(head)) {
            return Err(Error::Internal("equal signatures with different M-functions".into()));
        }
        if members.len() > 1 {
            classes.push(members.iter().map(|&m| slots[m]).collect());
        }
    }
    // distinct signatures must also give distinct M-functions
    let mut by_m: BTreeMap<(&IntPoly, &IntPoly), &BiPoly> = BTreeMap::new();
    for (sig, mr) in &keyed {
        if let Some(prev) = by_m.insert((&mr.num, &mr.den), sig) {
            if prev != sig {
                return Err(Error::Internal("equal M-functions with different signatures".into()));
            }
        }
    }
    classes.sort();
    Ok(classes)
}
