//! Lists the basic 2-term silting objects of A3 and the Bongartz completion of
//! every indecomposable presilting complex.
//!
//! `cargo run -p siltlab --example silting_census`

use siltlab::algebra::{parse_document, DEFAULT_NILPOTENCY_BOUND};
use siltlab::corr::Corr;
use siltlab::rep::EnumerationOptions;

fn main() -> siltlab::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/a3.quiver");
    let doc = parse_document(&std::fs::read_to_string(path).expect("fixture"), None, DEFAULT_NILPOTENCY_BOUND)?;
    let c = Corr::build(&std::sync::Arc::new(doc.algebra), &EnumerationOptions::default(), siltlab::DEFAULT_SEED)?;

    let silting = c.k.enumerate_two_term_silting()?;
    println!("{} silting objects", silting.len());
    for u in &silting {
        let (lambda, rho) = c.k.split_lambda_rho(u)?;
        println!("  {}  lambda = {}  rho = {}", c.k.display(u), c.k.display(&lambda), c.k.display(&rho));
    }

    println!("\nBongartz completions");
    for i in c.k.presilting_indecomposables() {
        let b = c.k.bongartz_completion(&[i].into())?;
        println!("  {:<10} -> {}", c.universe().name(i), c.k.display(&b));
    }
    Ok(())
}
