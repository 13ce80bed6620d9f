//! Isospectral sets among all connected graphs with 6, 7 and 8 vertices.
//!
//! cargo run --release --example corpus_search [jobs]

use std::path::PathBuf;

use isograph::search::{read_corpus, search, SearchConfig};

fn main() -> isograph::Result<()> {
    let jobs = std::env::args().nth(1).map_or(4, |s| s.parse().expect("worker count"));
    let data = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data");
    for n in 6..=8 {
        let corpus = read_corpus(&data.join(format!("connected{n}.g6")))?;
        let t = std::time::Instant::now();
        let out = search(&corpus, &SearchConfig { jobs, ..SearchConfig::default() })?;
        println!(
            "{n} vertices: {} graphs, {} secular polynomials, sets by size {:?}, {:.2?}",
            corpus.len(),
            out.secular_computed,
            out.size_counts(),
            t.elapsed()
        );
        assert!(out.failures.is_empty());
    }
    let six = read_corpus(&data.join("connected6.g6"))?;
    let out = search(&six, &SearchConfig::default())?;
    out.write_jsonl(std::io::stdout().lock())?;
    Ok(())
}
