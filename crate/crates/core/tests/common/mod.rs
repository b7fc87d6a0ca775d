#![allow(dead_code)]

use std::sync::Arc;

use siltlab::algebra::{parse_document, Algebra, Document, DEFAULT_NILPOTENCY_BOUND};

pub fn fixture_text(name: &str) -> String {
    let path = format!("{}/fixtures/{name}.quiver", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(path).expect("fixture present")
}

pub fn document(name: &str) -> Document {
    parse_document(&fixture_text(name), None, DEFAULT_NILPOTENCY_BOUND).expect("fixture parses")
}

pub fn algebra(name: &str) -> Arc<Algebra> {
    Arc::new(document(name).algebra)
}

pub fn corr(name: &str) -> siltlab::corr::Corr {
    let alg = algebra(name);
    siltlab::corr::Corr::build(&alg, &siltlab::rep::EnumerationOptions::default(), siltlab::DEFAULT_SEED)
        .expect("universe builds")
}

/// One row of the A3 correspondence table: silting object, cotorsion pair
/// `(X, Y)`, thick subcategory, wide subcategory and torsion class, as names.
pub struct Row {
    pub u: &'static [&'static str],
    pub x: &'static [&'static str],
    pub y: &'static [&'static str],
    pub thick: &'static [&'static str],
    pub wide: &'static [&'static str],
    pub torsion: &'static [&'static str],
}

const ALL_K: &[&str] = &["P1", "P2", "P3", "P1[1]", "P2[1]", "P3[1]", "pres(S2)", "pres(I2)", "pres(I3)"];
const ALL_M: &[&str] = &["P1", "P2", "P3", "S2", "I2", "I3"];

/// Hand-encoded from the table of the fourteen 2-term silting objects over the
/// linearly oriented A3 quiver.
pub const A3_TABLE: [Row; 14] = [
    Row {
        u: &["P1", "P2", "P3"],
        x: &["P1", "P2", "P3"],
        y: ALL_K,
        thick: &[],
        wide: ALL_M,
        torsion: ALL_M,
    },
    Row {
        u: &["P1[1]", "P2[1]", "P3[1]"],
        x: ALL_K,
        y: &["P1[1]", "P2[1]", "P3[1]"],
        thick: ALL_K,
        wide: &[],
        torsion: &[],
    },
    Row {
        u: &["P3", "pres(I2)", "pres(S2)"],
        x: &["P1", "P2", "P3", "pres(I2)", "pres(S2)"],
        y: &["P1[1]", "P2[1]", "P3", "P3[1]", "pres(I2)", "pres(I3)", "pres(S2)"],
        thick: &["pres(I2)"],
        wide: &["P3", "S2"],
        torsion: &["I2", "I3", "P3", "S2"],
    },
    Row {
        u: &["P1[1]", "pres(I2)", "pres(S2)"],
        x: &["P1", "P1[1]", "P2", "P3", "pres(I2)", "pres(S2)"],
        y: &["P1[1]", "P2[1]", "P3[1]", "pres(I2)", "pres(I3)", "pres(S2)"],
        thick: &["P1", "P1[1]"],
        wide: &["I2", "I3", "S2"],
        torsion: &["I2", "I3", "S2"],
    },
    Row {
        u: &["P2", "P3", "pres(S2)"],
        x: &["P1", "P2", "P3", "pres(S2)"],
        y: &["P1[1]", "P2", "P2[1]", "P3", "P3[1]", "pres(I2)", "pres(I3)", "pres(S2)"],
        thick: &["pres(S2)"],
        wide: &["I3", "P2", "P3"],
        torsion: &["I2", "I3", "P2", "P3", "S2"],
    },
    Row {
        u: &["P1", "P3", "pres(I3)"],
        x: &["P1", "P2", "P3", "pres(I3)"],
        y: &["P1", "P1[1]", "P2[1]", "P3", "P3[1]", "pres(I2)", "pres(I3)"],
        thick: &["pres(I3)"],
        wide: &["I2", "P1", "P3"],
        torsion: &["I2", "I3", "P1", "P3"],
    },
    Row {
        u: &["P1", "P2[1]", "pres(I3)"],
        x: &["P1", "P2", "P2[1]", "P3", "pres(I3)"],
        y: &["P1", "P1[1]", "P2[1]", "P3[1]", "pres(I3)"],
        thick: &["P2", "P2[1]"],
        wide: &["I3", "P1"],
        torsion: &["I3", "P1"],
    },
    Row {
        u: &["P1", "P2", "P3[1]"],
        x: &["P1", "P2", "P3", "P3[1]"],
        y: &["P1", "P1[1]", "P2", "P2[1]", "P3[1]", "pres(S2)"],
        thick: &["P3", "P3[1]"],
        wide: &["P1", "P2", "S2"],
        torsion: &["P1", "P2", "S2"],
    },
    Row {
        u: &["P1", "P2[1]", "P3[1]"],
        x: &["P1", "P2", "P2[1]", "P3", "P3[1]", "pres(I3)"],
        y: &["P1", "P1[1]", "P2[1]", "P3[1]"],
        thick: &["P2", "P2[1]", "P3", "P3[1]", "pres(I3)"],
        wide: &["P1"],
        torsion: &["P1"],
    },
    Row {
        u: &["P1[1]", "P3[1]", "pres(S2)"],
        x: &["P1", "P1[1]", "P2", "P3", "P3[1]", "pres(I2)", "pres(S2)"],
        y: &["P1[1]", "P2[1]", "P3[1]", "pres(S2)"],
        thick: &["P1", "P1[1]", "P3", "P3[1]", "pres(I2)"],
        wide: &["S2"],
        torsion: &["S2"],
    },
    Row {
        u: &["P1[1]", "P2[1]", "pres(I3)"],
        x: &["P1", "P1[1]", "P2", "P2[1]", "P3", "pres(I2)", "pres(I3)", "pres(S2)"],
        y: &["P1[1]", "P2[1]", "P3[1]", "pres(I3)"],
        thick: &["P1", "P1[1]", "P2", "P2[1]", "pres(S2)"],
        wide: &["I3"],
        torsion: &["I3"],
    },
    Row {
        u: &["P2", "P3[1]", "pres(S2)"],
        x: &["P1", "P2", "P3", "P3[1]", "pres(S2)"],
        y: &["P1[1]", "P2", "P2[1]", "P3[1]", "pres(S2)"],
        thick: &["P3", "P3[1]", "pres(S2)"],
        wide: &["P2"],
        torsion: &["P2", "S2"],
    },
    Row {
        u: &["P1[1]", "pres(I2)", "pres(I3)"],
        x: &["P1", "P1[1]", "P2", "P3", "pres(I2)", "pres(I3)", "pres(S2)"],
        y: &["P1[1]", "P2[1]", "P3[1]", "pres(I2)", "pres(I3)"],
        thick: &["P1", "P1[1]", "pres(I3)"],
        wide: &["I2"],
        torsion: &["I2", "I3"],
    },
    Row {
        u: &["P3", "pres(I2)", "pres(I3)"],
        x: &["P1", "P2", "P3", "pres(I2)", "pres(I3)", "pres(S2)"],
        y: &["P1[1]", "P2[1]", "P3", "P3[1]", "pres(I2)", "pres(I3)"],
        thick: &["pres(I2)", "pres(I3)", "pres(S2)"],
        wide: &["P3"],
        torsion: &["I2", "I3", "P3"],
    },
];

pub fn sorted(names: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = names.iter().map(|s| s.to_string()).collect();
    v.sort();
    v
}

pub fn sorted_owned(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v
}

/// Universe ids of named complexes.
pub fn ids(c: &siltlab::corr::Corr, names: &[&str]) -> siltlab::silting::Members {
    names
        .iter()
        .map(|n| c.universe().find(n).unwrap_or_else(|| panic!("no complex named {n}")))
        .collect()
}
pub mod oracle;
