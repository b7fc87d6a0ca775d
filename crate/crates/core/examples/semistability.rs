//! The three semistability notions on the square algebra with `αβ = βα = 0`.
//!
//! `cargo run -p siltlab --example semistability`

use std::sync::Arc;

use siltlab::algebra::{parse_document, DEFAULT_NILPOTENCY_BOUND};
use siltlab::field::Field;
use siltlab::rep::{EnumerationOptions, Module};
use siltlab::stability::{self, NumericalBudget, NumericalVerdict};
use siltlab::twoterm::{dim_weight, Complex, KUniverse};

fn main() -> siltlab::Result<()> {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/square.quiver")).expect("fixture");
    let doc = parse_document(&text, None, DEFAULT_NILPOTENCY_BOUND)?;
    let alg = Arc::new(doc.algebra.clone());
    let ku = KUniverse::build(&alg, &EnumerationOptions::default())?;

    let complexes: Vec<(String, Complex)> = doc
        .complexes
        .iter()
        .map(|d| Ok((d.name.clone(), Complex::from_decl(&alg, d)?)))
        .collect::<siltlab::Result<_>>()?;
    let modules: Vec<(String, Module)> = doc
        .modules
        .iter()
        .map(|d| Ok((d.name.clone(), Module::from_decl(alg.clone(), d)?)))
        .collect::<siltlab::Result<_>>()?;

    println!("determinantal semi-invariants");
    for (xn, x) in &complexes {
        for (mn, m) in &modules {
            match stability::det_semi_invariant(&x.minimize(), m) {
                Ok(si) => println!("  s({xn}, {mn}) = {}", si.value),
                Err(e) => println!("  s({xn}, {mn}): {e}"),
            }
        }
    }

    println!("numerical semistability, default budget");
    for (xn, x) in &complexes {
        for (mn, m) in &modules {
            let v = stability::is_numerically_semistable(x, &dim_weight(m), &ku, NumericalBudget::default())?;
            let verdict = match v {
                NumericalVerdict::Unbalanced(p) => format!("unbalanced, pairing {p}"),
                NumericalVerdict::Refuted { pairing, .. } => format!("refuted, pairing {pairing}"),
                NumericalVerdict::WithinBudget { candidates, .. } => format!("semistable within budget ({candidates} candidates)"),
            };
            println!("  {xn} against dim {mn}: {verdict}");
        }
    }

    // King's criterion enumerates submodules, so it needs a prime field
    let fp = parse_document(&text, Some(Field::Prime(7)), DEFAULT_NILPOTENCY_BOUND)?;
    let alg7 = Arc::new(fp.algebra);
    println!("King semistability over F_7");
    for d in &fp.modules {
        let m = Module::from_decl(alg7.clone(), d)?;
        for theta in [[1i64, -1], [-1, 1]] {
            println!("  {} with theta {theta:?}: {}", d.name, stability::king_semistable(&m, &theta)?);
        }
    }
    Ok(())
}
