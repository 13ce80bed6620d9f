use std::fs::File;
use std::io::BufReader;

use num_rational::BigRational;
use num_traits::One;

use super::{figure, FamilySpec};
use crate::graph::{parse_graph6, read_graph6_lines, CombinatorialGraph, MetricGraph};
use crate::{Error, Result};

/// Reads a graph from text:
///
/// * a family such as `chain-of-loops:1,1,2`
/// * `figure:3b`
/// * `edges:0-1@2,1-1@4` with an optional `;unit=1/2` (length defaults to 1)
/// * `g6:Bw` or a bare graph6 string, edges of length 1
/// * `file:corpus.g6#5` for the graph on the sixth non-blank line
pub fn parse_graph_spec(text: &str) -> Result<MetricGraph> {
    let text = text.trim();
    let Some((kind, rest)) = text.split_once(':') else {
        return MetricGraph::equilateral(parse_graph6(text)?, BigRational::one());
    };
    match kind {
        "figure" | "fig" => figure(rest),
        "edges" => parse_edges(rest),
        "g6" | "graph6" => MetricGraph::equilateral(parse_graph6(rest)?, BigRational::one()),
        "file" => {
            let (path, idx) = match rest.rsplit_once('#') {
                Some((p, i)) => (p, i.parse::<usize>().map_err(|_| bad(format!("bad index `{i}`")))?),
                None => (rest, 0),
            };
            let graphs = read_graph6_lines(BufReader::new(File::open(path)?))?;
            let g = graphs
                .into_iter()
                .nth(idx)
                .ok_or_else(|| bad(format!("{path} has no graph #{idx}")))?;
            MetricGraph::equilateral(g, BigRational::one())
        }
        _ => text.parse::<FamilySpec>()?.build(),
    }
}

fn bad(msg: String) -> Error {
    Error::InvalidSpec(msg)
}

fn parse_edges(s: &str) -> Result<MetricGraph> {
    let (list, unit) = match s.split_once(';') {
        Some((l, u)) => {
            let u = u.trim().strip_prefix("unit=").ok_or_else(|| bad(format!("expected unit=, got `{u}`")))?;
            let unit: BigRational = u.parse().map_err(|_| Error::InvalidUnit(u.to_string()))?;
            (l, unit)
        }
        None => (s, BigRational::one()),
    };
    let mut edges = Vec::new();
    let mut lengths = Vec::new();
    for item in list.split(',').map(str::trim).filter(|x| !x.is_empty()) {
        let (pair, len) = item.split_once('@').unwrap_or((item, "1"));
        let (a, b) = pair.split_once('-').ok_or_else(|| bad(format!("bad edge `{item}`")))?;
        let num = |x: &str| x.trim().parse::<usize>().map_err(|_| bad(format!("bad vertex `{x}`")));
        edges.push((num(a)?, num(b)?));
        lengths.push(len.trim().parse::<u64>().map_err(|_| bad(format!("bad length `{len}`")))?);
    }
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    MetricGraph::new(CombinatorialGraph::new(n, edges)?, lengths, unit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_forms() {
        assert_eq!(parse_graph_spec("loop:8").unwrap(), figure("3a").unwrap());
        assert_eq!(parse_graph_spec("figure:6c").unwrap(), figure("6c").unwrap());
        let e = parse_graph_spec("edges:0-1@2,1-1@4;unit=1/2").unwrap();
        assert_eq!(e.lengths(), &[2, 4]);
        assert_eq!(e.unit(), &BigRational::new(1.into(), 2.into()));
        assert_eq!(parse_graph_spec("edges:0-1").unwrap().lengths(), &[1]);
        assert_eq!(parse_graph_spec("Bw").unwrap().n_edges(), 3);
        assert_eq!(parse_graph_spec("g6:A_").unwrap().n_edges(), 1);
        assert!(parse_graph_spec("edges:0-1;unit=-1").is_err());
        assert!(parse_graph_spec("nope:1").is_err());
    }
}
