//! Checks the correspondence diagram edge by edge, then prints the Hasse
//! diagram of thick subcategories in DOT.
//!
//! `cargo run -p siltlab --example thick_hasse | dot -Tpng > thick.png`

use siltlab::algebra::{parse_document, DEFAULT_NILPOTENCY_BOUND};
use siltlab::corr::Corr;
use siltlab::rep::EnumerationOptions;

fn main() -> siltlab::Result<()> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/a3.quiver");
    let doc = parse_document(&std::fs::read_to_string(path).expect("fixture"), None, DEFAULT_NILPOTENCY_BOUND)?;
    let c = Corr::build(&std::sync::Arc::new(doc.algebra), &EnumerationOptions::default(), siltlab::DEFAULT_SEED)?;

    let report = c.verify_main_diagram()?;
    let passed = report.edges.iter().filter(|e| e.pass).count();
    eprintln!("{passed} of {} edge checks pass", report.edges.len());

    let thick = c.thick_subcategories()?;
    let with_inj = c.thick_with_enough_injectives()?;
    eprintln!("{} thick subcategories, {} with enough injectives", thick.len(), with_inj.len());
    print!("{}", c.hasse_dot(&thick));
    Ok(())
}
