//! graph6 input and output, canonical forms and the characteristic
//! polynomial used for prefiltering.

use isograph::graph::{canonical_form, char_poly, encode_graph6, is_isomorphic, parse_graph6};

fn main() -> isograph::Result<()> {
    let a = parse_graph6("ER\\w")?;
    let b = parse_graph6("ET\\w")?;
    for g in [&a, &b] {
        println!("{} vertices, valences {:?}", g.n_vertices(), g.valences());
        println!("  C(x) = {}", char_poly(g)?);
        println!("  normalized = {}", char_poly(g)?.normalized());
        println!("  canonical graph6 = {}", encode_graph6(&canonical_form(g).graph())?);
    }
    println!("isomorphic: {}", is_isomorphic(&a, &b));
    let shuffled = a.relabel(&[5, 3, 1, 0, 2, 4]);
    println!("relabelled copy isomorphic: {}", is_isomorphic(&a, &shuffled));
    print!("{}", a.to_dot(None));
    Ok(())
}
