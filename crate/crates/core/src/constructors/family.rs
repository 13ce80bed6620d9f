use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::graph::{CombinatorialGraph, MetricGraph};
use crate::poly::IntPoly;
use crate::{Error, Result};

/// Named graph families with integer lengths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(u64),
    Loop(u64),
    Star(Vec<u64>),
    Complete(usize),
    Flower { petals: usize, length: u64 },
    Pumpkin { degree: usize, length: u64 },
    PumpkinChain(Vec<(usize, u64)>),
    ChainOfLoops(Vec<u64>),
    RingOfLoops(Vec<u64>),
    Tadpole { loop_len: u64, tail: u64 },
    StarWithPumpkinLeaves { edges: Vec<usize>, lengths: Vec<u64> },
    ConnectedPumpkinPair { k1: usize, k2: usize, length: u64 },
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidSpec(msg.into())
}

fn positive(xs: &[u64], what: &str) -> Result<()> {
    if xs.contains(&0) {
        return Err(bad(format!("{what}: lengths must be positive")));
    }
    Ok(())
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// Appends a pumpkin of `degree` parallel edges between `a` and `b`.
fn push_pumpkin(edges: &mut Vec<(usize, usize, u64)>, a: usize, b: usize, degree: usize, len: u64) {
    for _ in 0..degree {
        edges.push((a, b, len));
    }
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        match self {
            Path(l) | Loop(l) => positive(&[*l], "length"),
            Star(ls) => {
                if ls.is_empty() {
                    return Err(bad("star needs at least one leaf"));
                }
                positive(ls, "star")
            }
            Complete(v) if *v < 2 => Err(bad("complete graph needs at least 2 vertices")),
            Complete(_) => Ok(()),
            Flower { petals, length } => {
                if *petals == 0 {
                    return Err(bad("flower needs at least one petal"));
                }
                positive(&[*length], "flower")
            }
            Pumpkin { degree, length } => {
                if *degree == 0 {
                    return Err(bad("pumpkin degree must be at least 1"));
                }
                positive(&[*length], "pumpkin")
            }
            PumpkinChain(ps) => {
                if ps.is_empty() || ps.iter().any(|&(d, l)| d == 0 || l == 0) {
                    return Err(bad("pumpkin chain needs positive degrees and lengths"));
                }
                Ok(())
            }
            ChainOfLoops(ls) => {
                if ls.is_empty() {
                    return Err(bad("chain of loops needs at least one loop"));
                }
                positive(ls, "chain of loops")
            }
            RingOfLoops(ls) => {
                if ls.len() < 2 {
                    return Err(bad("ring of loops needs at least two loops"));
                }
                positive(ls, "ring of loops")
            }
            Tadpole { loop_len, tail } => positive(&[*loop_len, *tail], "tadpole"),
            StarWithPumpkinLeaves { edges, lengths } => {
                if edges.is_empty() || edges.contains(&0) {
                    return Err(bad("pumpkin leaves need at least one edge each"));
                }
                if lengths.len() != 1 && lengths.len() != edges.len() {
                    return Err(bad("give one length or one per leaf"));
                }
                positive(lengths, "pumpkin star")
            }
            ConnectedPumpkinPair { k1, k2, length } => {
                if *k1 == 0 || *k2 == 0 {
                    return Err(bad("both pumpkins need at least one edge"));
                }
                positive(&[*length], "pumpkin pair")
            }
        }
    }

    /// Builds the graph. Families of loops are built from two-edge pumpkins
    /// with half-length edges, in unit 1/2; everything else uses unit 1.
    pub fn build(&self) -> Result<MetricGraph> {
        use FamilySpec::*;
        self.validate()?;
        let mut e: Vec<(usize, usize, u64)> = Vec::new();
        let mut unit = BigRational::one();
        let n = match self {
            Path(l) => {
                e.push((0, 1, *l));
                2
            }
            Loop(l) => {
                e.push((0, 0, *l));
                1
            }
            Star(ls) => {
                for (i, &l) in ls.iter().enumerate() {
                    e.push((0, i + 1, l));
                }
                ls.len() + 1
            }
            Complete(v) => {
                for j in 1..*v {
                    for i in 0..j {
                        e.push((i, j, 1));
                    }
                }
                *v
            }
            Flower { petals, length } => {
                for _ in 0..*petals {
                    e.push((0, 0, *length));
                }
                1
            }
            Pumpkin { degree, length } => {
                push_pumpkin(&mut e, 0, 1, *degree, *length);
                2
            }
            PumpkinChain(ps) => {
                for (i, &(d, l)) in ps.iter().enumerate() {
                    push_pumpkin(&mut e, i, i + 1, d, l);
                }
                ps.len() + 1
            }
            ChainOfLoops(ls) => {
                unit = half();
                for (i, &l) in ls.iter().enumerate() {
                    push_pumpkin(&mut e, i, i + 1, 2, l);
                }
                ls.len() + 1
            }
            RingOfLoops(ls) => {
                unit = half();
                let k = ls.len();
                for (i, &l) in ls.iter().enumerate() {
                    push_pumpkin(&mut e, i, (i + 1) % k, 2, l);
                }
                k
            }
            Tadpole { loop_len, tail } => {
                e.push((0, 0, *loop_len));
                e.push((0, 1, *tail));
                2
            }
            StarWithPumpkinLeaves { edges, lengths } => {
                for (i, &d) in edges.iter().enumerate() {
                    let l = if lengths.len() == 1 { lengths[0] } else { lengths[i] };
                    push_pumpkin(&mut e, 0, i + 1, d, l);
                }
                edges.len() + 1
            }
            ConnectedPumpkinPair { k1, k2, length } => {
                push_pumpkin(&mut e, 0, 1, *k1, *length);
                push_pumpkin(&mut e, 1, 2, *k2, *length);
                3
            }
        };
        let g = CombinatorialGraph::new(n, e.iter().map(|&(u, v, _)| (u, v)).collect())?;
        MetricGraph::new(g, e.iter().map(|&(_, _, l)| l).collect(), unit)
    }

    /// Closed-form secular polynomial in the variable of `build()`'s unit,
    /// for families that have one. Equality is up to scalar and a power of z.
    pub fn closed_form(&self) -> Option<(&'static str, IntPoly)> {
        use FamilySpec::*;
        let b = |k: u64, s: i64| IntPoly::binomial(k as usize, s);
        let prod = |fs: Vec<IntPoly>| fs.into_iter().product::<IntPoly>();
        match self {
            Path(l) => Some(("interval", b(2 * l, -1))),
            Loop(l) => Some(("loop", b(*l, -1).pow(2))),
            Star(ls) if ls.iter().all(|&l| l == ls[0]) => {
                let l = ls[0];
                Some(("equal star", &b(2 * l, -1) * &b(2 * l, 1).pow(ls.len() as u32 - 1)))
            }
            Complete(v) => {
                let v = *v as i64;
                let f = v - 1;
                let p = (v * v - 3 * v) / 2;
                let quad = IntPoly::from_i64s(&[f, 2, f]).pow(f as u32);
                let rest = &b(1, -1).pow((p + 2) as u32) * &b(1, 1).pow(p as u32);
                Some(("complete graph", &quad * &rest))
            }
            Flower { petals, length } => {
                let s = *petals as u32;
                Some(("flower", &b(*length, -1).pow(s + 1) * &b(*length, 1).pow(s - 1)))
            }
            Pumpkin { degree, length } => Some(("pumpkin", b(2 * length, -1).pow(*degree as u32))),
            ChainOfLoops(ls) => {
                // variable is e^{ik/2}: a loop of length L gives z^{2L} - 1
                let total: u64 = ls.iter().sum();
                let mut fs = vec![b(2 * total, -1)];
                fs.extend(ls.iter().map(|&l| b(2 * l, -1)));
                Some(("chain of loops", prod(fs)))
            }
            RingOfLoops(ls) => {
                let total: u64 = ls.iter().sum();
                let mut fs = vec![b(total, -1).pow(2)];
                fs.extend(ls.iter().map(|&l| b(2 * l, -1)));
                Some(("ring of loops", prod(fs)))
            }
            StarWithPumpkinLeaves { edges, lengths } if lengths.iter().all(|&l| l == lengths[0]) => {
                let l = lengths[0];
                let k: usize = edges.iter().sum();
                let s = edges.len();
                Some((
                    "star with pumpkin leaves",
                    &b(2 * l, -1).pow((k - s + 1) as u32) * &b(2 * l, 1).pow(s as u32 - 1),
                ))
            }
            ConnectedPumpkinPair { k1, k2, length } => {
                let k = (k1 + k2) as u32;
                Some(("connected pumpkins", &b(2 * length, -1).pow(k - 1) * &b(2 * length, 1)))
            }
            _ => None,
        }
    }
}

fn parse_list(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|x| x.trim().parse::<u64>().map_err(|_| bad(format!("bad number `{x}`"))))
        .collect()
}

fn parse_one<T: FromStr>(s: &str) -> Result<T> {
    s.trim().parse::<T>().map_err(|_| bad(format!("bad number `{s}`")))
}

/// `a@b` with `b` defaulting to 1.
fn split_at_len(s: &str) -> (&str, &str) {
    match s.split_once('@') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use FamilySpec::*;
        let (name, args) = s.split_once(':').ok_or_else(|| bad(format!("missing `:` in `{s}`")))?;
        let spec = match name.trim() {
            "interval" | "path" => Path(parse_one(args)?),
            "loop" => Loop(parse_one(args)?),
            "star" => Star(parse_list(args)?),
            "complete" => Complete(parse_one(args)?),
            "flower" => {
                let (s, l) = split_at_len(args);
                Flower { petals: parse_one(s)?, length: parse_one(l)? }
            }
            "pumpkin" => {
                let (d, l) = split_at_len(args);
                Pumpkin { degree: parse_one(d)?, length: parse_one(l)? }
            }
            "pumpkin-chain" => PumpkinChain(
                args.split(',')
                    .map(|p| {
                        let (d, l) = split_at_len(p);
                        Ok((parse_one(d)?, parse_one(l)?))
                    })
                    .collect::<Result<_>>()?,
            ),
            "chain-of-loops" => ChainOfLoops(parse_list(args)?),
            "ring-of-loops" => RingOfLoops(parse_list(args)?),
            "tadpole" => {
                let v = parse_list(args)?;
                if v.len() != 2 {
                    return Err(bad("tadpole takes loop,tail"));
                }
                Tadpole { loop_len: v[0], tail: v[1] }
            }
            "pumpkin-star" => {
                let (ks, ls) = split_at_len(args);
                StarWithPumpkinLeaves {
                    edges: ks.split('+').map(parse_one).collect::<Result<_>>()?,
                    lengths: parse_list(ls)?,
                }
            }
            "pumpkin-pair" => {
                let (ks, l) = split_at_len(args);
                let k: Vec<usize> = ks.split('+').map(parse_one).collect::<Result<_>>()?;
                if k.len() != 2 {
                    return Err(bad("pumpkin-pair takes k1+k2"));
                }
                ConnectedPumpkinPair { k1: k[0], k2: k[1], length: parse_one(l)? }
            }
            other => return Err(bad(format!("unknown family `{other}`"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

fn join<T: fmt::Display>(xs: &[T], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Path(l) => write!(f, "interval:{l}"),
            Loop(l) => write!(f, "loop:{l}"),
            Star(ls) => write!(f, "star:{}", join(ls, ",")),
            Complete(v) => write!(f, "complete:{v}"),
            Flower { petals, length } => write!(f, "flower:{petals}@{length}"),
            Pumpkin { degree, length } => write!(f, "pumpkin:{degree}@{length}"),
            PumpkinChain(ps) => {
                let parts: Vec<String> = ps.iter().map(|(d, l)| format!("{d}@{l}")).collect();
                write!(f, "pumpkin-chain:{}", parts.join(","))
            }
            ChainOfLoops(ls) => write!(f, "chain-of-loops:{}", join(ls, ",")),
            RingOfLoops(ls) => write!(f, "ring-of-loops:{}", join(ls, ",")),
            Tadpole { loop_len, tail } => write!(f, "tadpole:{loop_len},{tail}"),
            StarWithPumpkinLeaves { edges, lengths } => {
                write!(f, "pumpkin-star:{}@{}", join(edges, "+"), join(lengths, ","))
            }
            ConnectedPumpkinPair { k1, k2, length } => write!(f, "pumpkin-pair:{k1}+{k2}@{length}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        for s in [
            "interval:3",
            "loop:8",
            "star:1,1,2",
            "complete:4",
            "flower:3@1",
            "pumpkin:3@2",
            "pumpkin-chain:2@1,3@1,3@2",
            "chain-of-loops:1,1,2",
            "ring-of-loops:1,2,3",
            "tadpole:2,2",
            "pumpkin-star:4+3+3@1",
            "pumpkin-star:2+1@1,2",
            "pumpkin-pair:7+5@1",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert!(spec.build().is_ok(), "{s}");
        }
        assert_eq!("path:2".parse::<FamilySpec>().unwrap(), FamilySpec::Path(2));
        assert!("ring-of-loops:3".parse::<FamilySpec>().is_err());
        assert!("blob:3".parse::<FamilySpec>().is_err());
        assert!("pumpkin-star:2+2@1,2,3".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn build_shapes() {
        let k4 = FamilySpec::Complete(4).build().unwrap();
        assert_eq!((k4.n_vertices(), k4.n_edges()), (4, 6));
        let chain = FamilySpec::ChainOfLoops(vec![1, 1, 2]).build().unwrap();
        assert_eq!(chain.total_length(), BigRational::from_integer(4.into()));
        assert_eq!(chain.n_vertices(), 4);
        let ps = "pumpkin-star:4+3+3@1".parse::<FamilySpec>().unwrap().build().unwrap();
        assert_eq!((ps.n_vertices(), ps.n_edges()), (4, 10));
    }
}
