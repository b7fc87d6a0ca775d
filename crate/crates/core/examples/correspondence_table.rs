//! The five-column correspondence for a fixture, as JSON on stdout.
//!
//! `cargo run -p siltlab --example correspondence_table -- square`

use siltlab::algebra::{parse_document, DEFAULT_NILPOTENCY_BOUND};
use siltlab::corr::Corr;
use siltlab::rep::EnumerationOptions;

fn main() -> siltlab::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "a3".into());
    let path = format!("{}/fixtures/{name}.quiver", env!("CARGO_MANIFEST_DIR"));
    let doc = parse_document(&std::fs::read_to_string(path).expect("fixture"), None, DEFAULT_NILPOTENCY_BOUND)?;
    let c = Corr::build(&std::sync::Arc::new(doc.algebra), &EnumerationOptions::default(), siltlab::DEFAULT_SEED)?;
    let rows = c.correspondence_table()?;
    let value = serde_json::json!({
        "fixture": name,
        "complete": c.is_complete(),
        "rows": rows.iter().map(|r| c.row_json(r)).collect::<Vec<_>>(),
    });
    println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    Ok(())
}
