use std::io::BufRead;

use super::CombinatorialGraph;
use crate::{Error, Result};

const HEADER: &str = ">>graph6<<";

/// Parses one graph6 line. A leading `>>graph6<<` header is skipped.
pub fn parse_graph6(text: &str) -> Result<CombinatorialGraph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (skip, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest),
        None => (0, line),
    };
    let bytes = body.as_bytes();
    let err = |i: usize, msg: &str| Error::Parse { offset: skip + i, msg: msg.to_string() };
    let Some(&b0) = bytes.first() else {
        return Err(err(0, "empty graph6 string"));
    };
    if !(63..=126).contains(&b0) {
        return Err(err(0, "byte outside graph6 range"));
    }
    if b0 == 126 {
        return Err(Error::UnsupportedSize(long_size(bytes).unwrap_or(63)));
    }
    let n = (b0 - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let data = &bytes[1..];
    if let Some(i) = data.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(i + 1, "byte outside graph6 range"));
    }
    if data.len() != need {
        let at = 1 + data.len().min(need);
        return Err(err(at, &format!("expected {need} adjacency bytes, found {}", data.len())));
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    for pad in nbits..need * 6 {
        if bit(pad) {
            return Err(err(1 + pad / 6, "nonzero padding bits"));
        }
    }
    CombinatorialGraph::new(n, edges)
}

fn long_size(bytes: &[u8]) -> Option<usize> {
    if bytes.len() < 4 || bytes[1] == 126 {
        return None;
    }
    Some(bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b.wrapping_sub(63) as usize & 63)))
}

/// Encodes a simple graph with at most 62 vertices.
pub fn encode_graph6(g: &CombinatorialGraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::NotSimple);
    }
    let n = g.n_vertices();
    if n > 62 {
        return Err(Error::UnsupportedSize(n));
    }
    let m = g.multiplicity_matrix();
    let mut bits = Vec::with_capacity(n * n / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(m[i][j] > 0);
        }
    }
    let mut out = String::with_capacity(1 + bits.len().div_ceil(6));
    out.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                v |= 1 << (5 - k);
            }
        }
        out.push((v + 63) as char);
    }
    Ok(out)
}

/// Reads every non-blank line of a graph6 stream.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> Result<Vec<CombinatorialGraph>> {
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() || t == HEADER {
            continue;
        }
        out.push(parse_graph6(t)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.n_vertices(), k2.edges()), (2, &[(0, 1)][..]));
        let k3 = parse_graph6("Bw").unwrap();
        assert_eq!(k3.edges(), &[(0, 1), (0, 2), (1, 2)]);
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.n_vertices(), k1.n_edges()), (1, 0));
        assert_eq!(parse_graph6(">>graph6<<Bw").unwrap(), k3);
    }

    #[test]
    fn round_trip() {
        for s in ["A_", "Bw", "@", "C~", "DQo", "E?~o", "Fs\\zw"] {
            let g = parse_graph6(s).unwrap();
            assert_eq!(encode_graph6(&g).unwrap(), s);
        }
    }

    #[test]
    fn errors_report_offsets() {
        assert!(matches!(parse_graph6("B"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6("A`"), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_graph6("Bww"), Err(Error::Parse { .. })));
        assert!(matches!(parse_graph6("~?@@"), Err(Error::UnsupportedSize(65))));
        assert!(matches!(parse_graph6("B "), Err(Error::Parse { offset: 1, .. })));
    }
}
