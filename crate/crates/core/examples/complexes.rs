//! Hom and extension dimensions between the indecomposable 2-term complexes of
//! A3, printed as two matrices indexed by universe names.
//!
//! `cargo run -p siltlab --example complexes`

use std::sync::Arc;

use siltlab::algebra::{parse_document, DEFAULT_NILPOTENCY_BOUND};
use siltlab::rep::EnumerationOptions;
use siltlab::twoterm::KUniverse;

fn main() -> siltlab::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/a3.quiver");
    let doc = parse_document(&std::fs::read_to_string(path).expect("fixture"), None, DEFAULT_NILPOTENCY_BOUND)?;
    let alg = Arc::new(doc.algebra);
    let ku = KUniverse::build(&alg, &EnumerationOptions::default())?;

    for (i, x) in ku.complexes().iter().enumerate() {
        println!("{:<10} g = {:<12} H0 dims {:?}", ku.name(i), format!("{:?}", x.g_vector()), x.h0().dims());
    }
    for (title, f) in [
        ("dim Hom_K(row, col)", &(|a: usize, b: usize| ku.get(a).hom_k(ku.get(b)).dim()) as &dyn Fn(usize, usize) -> usize),
        ("dim E(row, col)", &|a, b| ku.get(a).ext(ku.get(b)).dim()),
    ] {
        println!("\n{title}");
        print!("{:<10}", "");
        for j in 0..ku.len() {
            print!("{:>9}", ku.name(j));
        }
        println!();
        for i in 0..ku.len() {
            print!("{:<10}", ku.name(i));
            for j in 0..ku.len() {
                print!("{:>9}", f(i, j));
            }
            println!();
        }
    }
    Ok(())
}
