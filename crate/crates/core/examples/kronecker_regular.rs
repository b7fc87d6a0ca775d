//! The Kronecker algebra up to a dimension bound: regular presentations, the
//! wide subcategory `𝒲_θ` for `θ = (-1, 1)`, and `M`-semistability between
//! presentations of regular simples.
//!
//! `cargo run -p siltlab --example kronecker_regular`

use std::sync::Arc;

use siltlab::algebra::{parse_document, DEFAULT_NILPOTENCY_BOUND};
use siltlab::rep::{EnumerationOptions, Strategy};
use siltlab::stability;
use siltlab::twoterm::KUniverse;

fn main() -> siltlab::Result<()> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/kronecker.quiver")).expect("fixture");
    let doc = parse_document(&text, None, DEFAULT_NILPOTENCY_BOUND)?;
    let alg = Arc::new(doc.algebra);
    let opts = EnumerationOptions {
        strategy: Strategy::Combined { prime: 2 },
        dim_bound: 4,
        ..Default::default()
    };
    let ku = KUniverse::build(&alg, &opts)?;
    let mu = ku.modules();
    println!("{} modules, {} complexes, complete: {}", mu.len(), ku.len(), ku.is_complete());
    for n in mu.notes() {
        println!("note: {n}");
    }

    let theta = [-1i64, 1];
    let w = stability::w_theta_members(&theta, &ku, 2);
    let names: Vec<&str> = w.members.iter().map(|&i| mu.name(i)).collect();
    println!("W_theta for {theta:?}: {{{}}}  exact: {}", names.join(", "), w.exact);

    let regular: Vec<usize> = (0..ku.len()).filter(|&i| ku.get(i).g_vector() == theta).collect();
    for &i in &regular {
        let hits: Vec<&str> = (0..mu.len())
            .filter(|&j| stability::is_m_semistable(&ku.get(i).minimize(), mu.get(j)))
            .map(|j| mu.name(j))
            .collect();
        println!("{:<12} is semistable for {}", ku.name(i), hits.join(", "));
    }
    Ok(())
}
