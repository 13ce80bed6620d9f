//! The characteristic-polynomial prefilter loses nothing on 7 vertices.

use std::path::PathBuf;

use isograph::search::{prefilter_soundness_audit, read_corpus};

fn main() -> isograph::Result<()> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/connected7.g6");
    let report = prefilter_soundness_audit(&read_corpus(&path)?, 4)?;
    println!("{:#}", report.to_json());
    Ok(())
}
