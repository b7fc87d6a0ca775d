//! Enumerates the indecomposable modules of the A3 path algebra and prints its
//! Auslander-Reiten quiver in DOT.
//!
//! `cargo run -p siltlab --example indecomposables | dot -Tsvg > ar.svg`

use std::sync::Arc;

use siltlab::algebra::{parse_document, DEFAULT_NILPOTENCY_BOUND};
use siltlab::rep::EnumerationOptions;
use siltlab::twoterm::KUniverse;

fn main() -> siltlab::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/a3.quiver");
    let doc = parse_document(&std::fs::read_to_string(path).expect("fixture"), None, DEFAULT_NILPOTENCY_BOUND)?;
    let alg = Arc::new(doc.algebra);
    let ku = KUniverse::build(&alg, &EnumerationOptions::default())?;
    let mu = ku.modules();
    for (i, m) in mu.modules().iter().enumerate() {
        eprintln!("{:<4} dims {:?}", mu.name(i), m.dims());
    }
    eprintln!("complete: {}", mu.is_complete());
    print!("{}", siltlab::cli::ar_quiver_dot(&ku));
    Ok(())
}
