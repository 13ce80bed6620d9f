use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use super::scattering::{scaled_secular_matrix, Weight};
use crate::graph::{CombinatorialGraph, MetricGraph};
use crate::poly::BiPoly;
use crate::{json, Error, Result};

/// `Q(z, w)`: secular determinant of the graph with a pendant edge of
/// symbolic length attached at `vertex`; pendant bonds carry `w = e^{ikc}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BivariateSecular {
    q: BiPoly,
    vertex: usize,
    unit: BigRational,
}

impl BivariateSecular {
    pub fn poly(&self) -> &BiPoly {
        &self.q
    }

    pub fn vertex(&self) -> usize {
        self.vertex
    }

    pub fn unit(&self) -> &BigRational {
        &self.unit
    }

    pub fn to_json(&self) -> Value {
        let terms: serde_json::Map<String, Value> = self
            .q
            .terms()
            .iter()
            .map(|((i, j), c)| (format!("[{i},{j}]"), json::int(c)))
            .collect();
        json!({ "vertex": self.vertex, "unit": json::rational(&self.unit), "terms": terms })
    }
}

pub fn bivariate_secular(g: &MetricGraph, vertex: usize) -> Result<BivariateSecular> {
    g.graph().check_vertex(vertex)?;
    if !g.graph().is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.n_vertices();
    let mut edges = g.graph().edges().to_vec();
    edges.push((vertex, n));
    let aug = CombinatorialGraph::new(n + 1, edges)?;
    let step = g.length_gcd() as usize;
    let mut weights: Vec<Weight> = g
        .lengths()
        .iter()
        .flat_map(|&l| {
            let w = Weight { coeff: 1, power: l as usize / step };
            [w, w]
        })
        .collect();
    let mut at = |w0: i64| {
        weights.truncate(2 * g.n_edges());
        weights.extend([Weight { coeff: w0, power: 0 }; 2]);
        scaled_secular_matrix(&aug, &weights).det().stretch(step)
    };
    let (f0, f1, fm) = (at(0), at(1), at(-1));
    let two = BigInt::from(2);
    let b = (&f1 - &fm).div_scalar(&two);
    let c = &(&f1 + &fm).div_scalar(&two) - &f0;
    Ok(BivariateSecular {
        q: BiPoly::new(vec![f0, b, c]).primitive(),
        vertex,
        unit: g.unit().clone(),
    })
}
