//! Isospectral trees: none up to 8 vertices, then 1, 2, 5, 6 pairs.

use std::path::PathBuf;

use isograph::search::{read_corpus, tree_search, SearchConfig};

fn main() -> isograph::Result<()> {
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data");
    for n in 2..=12 {
        let corpus = read_corpus(&data.join(format!("trees{n}.g6")))?;
        let out = tree_search(&corpus, &SearchConfig { jobs: 4, ..SearchConfig::default() })?;
        println!("{n:>2} vertices: {:>4} trees, {} sets", corpus.len(), out.sets.len());
        for s in &out.sets {
            let g6: Vec<&str> = s.members.iter().map(|m| m.encoding.as_str()).collect();
            println!("      {}", g6.join("  "));
        }
    }
    Ok(())
}
