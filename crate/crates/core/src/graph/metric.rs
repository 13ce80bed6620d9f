use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};

use super::CombinatorialGraph;
use crate::{Error, Result};

/// Combinatorial graph with positive integer edge lengths measured in an
/// exact rational `unit`. Physical length of edge `e` is `unit * lengths[e]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MetricGraph {
    graph: CombinatorialGraph,
    lengths: Vec<u64>,
    unit: BigRational,
}

impl MetricGraph {
    pub fn new(graph: CombinatorialGraph, lengths: Vec<u64>, unit: BigRational) -> Result<Self> {
        if !unit.is_positive() {
            return Err(Error::InvalidUnit(unit.to_string()));
        }
        if lengths.len() != graph.n_edges() {
            return Err(Error::InvalidSpec(format!(
                "{} lengths for {} edges",
                lengths.len(),
                graph.n_edges()
            )));
        }
        if graph.n_edges() == 0 {
            return Err(Error::EmptyGraph);
        }
        if lengths.contains(&0) {
            return Err(Error::InvalidSpec("edge lengths must be positive".into()));
        }
        Ok(MetricGraph { graph, lengths, unit })
    }

    /// Every edge gets integer length 1 in the given unit.
    pub fn equilateral(graph: CombinatorialGraph, unit: BigRational) -> Result<Self> {
        let lengths = vec![1; graph.n_edges()];
        Self::new(graph, lengths, unit)
    }

    /// Equilateral with unit `1/E`, i.e. total length one.
    pub fn equilateral_normalized(graph: CombinatorialGraph) -> Result<Self> {
        let e = graph.n_edges().max(1);
        Self::equilateral(graph, BigRational::new(BigInt::one(), BigInt::from(e)))
    }

    /// Builds from `(u, v, length)` triples with unit 1.
    pub fn from_edges(n: usize, edges: &[(usize, usize, u64)]) -> Result<Self> {
        let graph = CombinatorialGraph::new(n, edges.iter().map(|&(u, v, _)| (u, v)).collect())?;
        let lengths = edges.iter().map(|&(_, _, l)| l).collect();
        Self::new(graph, lengths, BigRational::one())
    }

    pub fn graph(&self) -> &CombinatorialGraph {
        &self.graph
    }

    pub fn lengths(&self) -> &[u64] {
        &self.lengths
    }

    pub fn unit(&self) -> &BigRational {
        &self.unit
    }

    pub fn n_vertices(&self) -> usize {
        self.graph.n_vertices()
    }

    pub fn n_edges(&self) -> usize {
        self.graph.n_edges()
    }

    /// Sum of the integer lengths.
    pub fn total_units(&self) -> u64 {
        self.lengths.iter().sum()
    }

    pub fn total_length(&self) -> BigRational {
        &self.unit * BigRational::from_integer(BigInt::from(self.total_units()))
    }

    pub fn length_gcd(&self) -> u64 {
        self.lengths.iter().fold(0u64, |g, &l| g.gcd(&l))
    }

    /// Same integer lengths, unit rescaled so the total length is one.
    pub fn normalized(&self) -> MetricGraph {
        MetricGraph {
            graph: self.graph.clone(),
            lengths: self.lengths.clone(),
            unit: BigRational::new(BigInt::one(), BigInt::from(self.total_units())),
        }
    }

    pub fn with_same_lengths_and_unit(&self, unit: BigRational) -> Result<MetricGraph> {
        MetricGraph::new(self.graph.clone(), self.lengths.clone(), unit)
    }

    /// Re-expresses the graph in a finer unit that divides the current one.
    pub fn to_unit(&self, unit: &BigRational) -> Result<MetricGraph> {
        let ratio = &self.unit / unit;
        if !ratio.is_integer() || !ratio.is_positive() {
            return Err(Error::UnitMismatch(self.unit.to_string(), unit.to_string()));
        }
        let k = ratio
            .to_integer()
            .to_u64()
            .ok_or_else(|| Error::Internal("unit ratio overflow".into()))?;
        Ok(MetricGraph {
            graph: self.graph.clone(),
            lengths: self.lengths.iter().map(|l| l * k).collect(),
            unit: unit.clone(),
        })
    }

    /// Divides all lengths by their gcd, enlarging the unit accordingly.
    pub fn coarsest(&self) -> MetricGraph {
        let g = self.length_gcd();
        MetricGraph {
            graph: self.graph.clone(),
            lengths: self.lengths.iter().map(|l| l / g).collect(),
            unit: &self.unit * BigRational::from_integer(BigInt::from(g)),
        }
    }

    /// Replaces `edge` by a path of new valence-two vertices with the given
    /// integer lengths. The first piece keeps the edge's position, the other
    /// pieces and the new vertices are appended.
    pub fn subdivide(&self, edge: usize, parts: &[u64]) -> Result<MetricGraph> {
        if edge >= self.n_edges() {
            return Err(Error::InvalidSubdivision(format!("edge {edge} out of range")));
        }
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidSubdivision("parts must be positive".into()));
        }
        let total: u64 = parts.iter().sum();
        if total != self.lengths[edge] {
            return Err(Error::InvalidSubdivision(format!(
                "parts sum to {total}, edge length is {}",
                self.lengths[edge]
            )));
        }
        let (u, v) = self.graph.edges()[edge];
        let n0 = self.n_vertices();
        let k = parts.len();
        let mut edges = self.graph.edges().to_vec();
        let mut lengths = self.lengths.clone();
        let mut path = vec![u];
        path.extend(n0..n0 + k - 1);
        path.push(v);
        edges[edge] = (path[0], path[1]);
        lengths[edge] = parts[0];
        for i in 1..k {
            edges.push((path[i], path[i + 1]));
            lengths.push(parts[i]);
        }
        let graph = CombinatorialGraph::new(n0 + k - 1, edges)?;
        MetricGraph::new(graph, lengths, self.unit.clone())
    }

    /// Removes a valence-two vertex, merging its two edges. The merged edge
    /// sits at the smaller of the two edge positions; vertices above the
    /// removed one shift down by one.
    pub fn smooth(&self, vertex: usize) -> Result<MetricGraph> {
        self.graph.check_vertex(vertex)?;
        let d = self.graph.valence(vertex);
        if d != 2 {
            return Err(Error::NotSmoothable { vertex, reason: format!("valence is {d}, not 2") });
        }
        let incident: Vec<usize> = self
            .graph
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| a == vertex || b == vertex)
            .map(|(i, _)| i)
            .collect();
        if incident.len() != 2 {
            return Err(Error::NotSmoothable {
                vertex,
                reason: "vertex only carries a self-loop".into(),
            });
        }
        let (e1, e2) = (incident[0], incident[1]);
        let far = |e: usize| {
            let (a, b) = self.graph.edges()[e];
            if a == vertex {
                b
            } else {
                a
            }
        };
        let merged = (far(e1), far(e2));
        let shift = |x: usize| if x > vertex { x - 1 } else { x };
        let mut edges = Vec::with_capacity(self.n_edges() - 1);
        let mut lengths = Vec::with_capacity(self.n_edges() - 1);
        for (i, &(a, b)) in self.graph.edges().iter().enumerate() {
            if i == e1 {
                edges.push((shift(merged.0), shift(merged.1)));
                lengths.push(self.lengths[e1] + self.lengths[e2]);
            } else if i != e2 {
                edges.push((shift(a), shift(b)));
                lengths.push(self.lengths[i]);
            }
        }
        let graph = CombinatorialGraph::new(self.n_vertices() - 1, edges)?;
        MetricGraph::new(graph, lengths, self.unit.clone())
    }

    /// Subdivides every edge into unit-length pieces.
    pub fn fully_subdivided(&self) -> MetricGraph {
        let mut g = self.clone();
        for e in 0..self.n_edges() {
            let l = self.lengths[e];
            if l > 1 {
                g = g.subdivide(e, &vec![1; l as usize]).expect("unit parts always valid");
            }
        }
        g
    }
}

impl fmt::Display for MetricGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} unit={} edges=[", self.n_vertices(), self.unit)?;
        for (i, (&(u, v), l)) in self.graph.edges().iter().zip(&self.lengths).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}@{l}")?;
        }
        write!(f, "]")
    }
}

/// Largest rational dividing both units: `gcd(a, c) / lcm(b, d)`.
pub fn common_unit(a: &BigRational, b: &BigRational) -> BigRational {
    BigRational::new(a.numer().gcd(b.numer()), a.denom().lcm(b.denom()))
}

/// Re-expresses two graphs of equal total length in their common unit.
pub fn common_rescale(g1: &MetricGraph, g2: &MetricGraph) -> Result<(MetricGraph, MetricGraph)> {
    let (t1, t2) = (g1.total_length(), g2.total_length());
    if t1 != t2 {
        return Err(Error::Incomparable(t1.to_string(), t2.to_string()));
    }
    let u = common_unit(g1.unit(), g2.unit());
    Ok((g1.to_unit(&u)?, g2.to_unit(&u)?))
}
