//! Regenerate the JSON corpus: `cargo run --example gen_corpus [DIR]`
//! (directory defaults to `corpus/` at the workspace root).

use std::path::PathBuf;

fn main() {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| {
            PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
        });
    if let Err(e) = wreathkit::corpus::write_all(&dir) {
        eprintln!("failed to write corpus: {e}");
        std::process::exit(1);
    }
    println!("wrote corpus to {}", dir.display());
}
