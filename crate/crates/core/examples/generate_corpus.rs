//! Writes graph6 corpora of connected graphs and trees.
//!
//! cargo run --release --example generate_corpus -- data 8 13

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;

use isograph::enumerate::{connected_graphs, trees, write_graph6};

fn main() -> isograph::Result<()> {
    let mut args = std::env::args().skip(1);
    let dir = PathBuf::from(args.next().unwrap_or_else(|| "data".into()));
    let max_connected: usize = args.next().map_or(8, |s| s.parse().expect("vertex count"));
    let max_tree: usize = args.next().map_or(13, |s| s.parse().expect("vertex count"));
    std::fs::create_dir_all(&dir)?;
    for n in 1..=max_connected {
        let t = std::time::Instant::now();
        let gs = connected_graphs(n);
        write_graph6(BufWriter::new(File::create(dir.join(format!("connected{n}.g6")))?), &gs)?;
        println!("connected {n}: {} graphs ({:.2?})", gs.len(), t.elapsed());
    }
    for n in 1..=max_tree {
        let gs = trees(n);
        write_graph6(BufWriter::new(File::create(dir.join(format!("trees{n}.g6")))?), &gs)?;
        println!("trees {n}: {}", gs.len());
    }
    Ok(())
}
