//! Loops decorated with pendant trees, searched across vertex counts.

use isograph::constructors::decorated_loop_enumerator;
use isograph::search::{corpus_from_graphs, search, SearchConfig};

fn main() -> isograph::Result<()> {
    for (n, m) in [(4, 10), (6, 12)] {
        let d = decorated_loop_enumerator(n, m, 100_000)?;
        let corpus = corpus_from_graphs(&format!("C{n}+trees"), d.graphs.iter().map(|g| g.graph().clone()));
        // members may differ in size, which the characteristic polynomial cannot match
        let out = search(&corpus, &SearchConfig { prefilter: false, jobs: 4, ..SearchConfig::default() })?;
        println!("cycle {n}, at most {m} vertices: {} graphs, sets by size {:?}", corpus.len(), out.size_counts());
        for s in &out.sets {
            let sizes: Vec<usize> = s.members.iter().map(|m| m.graph.n_vertices()).collect();
            if sizes.iter().any(|&v| v != sizes[0]) {
                println!("  mixed sizes {sizes:?}: {}", s.members.iter().map(|m| m.encoding.as_str()).collect::<Vec<_>>().join(" "));
            }
        }
    }
    Ok(())
}
