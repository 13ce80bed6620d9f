//! M-functions seen through pendant edges: a loop of length 4 and the
//! midpoint of an interval of length 4 look the same from the vertex.

use isograph::constructors::parse_graph_spec;
use isograph::mfunction::{m_rational, m_signature, same_m};

fn main() -> isograph::Result<()> {
    let lp = parse_graph_spec("loop:4")?;
    let iv = parse_graph_spec("edges:0-1@2,1-2@2")?;
    for (name, g, v) in [("loop", &lp, 0), ("interval midpoint", &iv, 1), ("interval end", &iv, 0)] {
        let sig = m_signature(g, v)?;
        println!("{name}:");
        println!("  Q(z, w)   = {}", sig.signature());
        println!("  discarded = {}", sig.discarded_factor());
        println!("  M(k)      = {}", m_rational(g, v)?);
    }
    println!("loop ~ midpoint: {}", same_m(&lp, 0, &iv, 1)?);
    println!("loop ~ end:      {}", same_m(&lp, 0, &iv, 0)?);
    Ok(())
}
