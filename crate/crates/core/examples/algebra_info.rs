//! Parses the bundled fixtures and prints the shape of each algebra: path
//! basis, nilpotency degree and indecomposable projectives.
//!
//! `cargo run -p siltlab --example algebra_info`

use siltlab::algebra::{parse_document, DEFAULT_NILPOTENCY_BOUND};

fn main() -> siltlab::Result<()> {
    for name in ["point", "a3", "square", "kronecker"] {
        let path = format!("{}/fixtures/{name}.quiver", env!("CARGO_MANIFEST_DIR"));
        let text = std::fs::read_to_string(&path).expect("fixture present");
        let doc = parse_document(&text, None, DEFAULT_NILPOTENCY_BOUND)?;
        let alg = &doc.algebra;
        println!("{name}: {}", alg.summary());
        let basis: Vec<String> = (0..alg.dim()).map(|i| alg.path_name(i)).collect();
        println!("  basis: {}", basis.join(", "));
        for v in 0..alg.num_vertices() {
            println!("  P{} dims {:?}   I{} dims {:?}", alg.label(v), alg.projective_dims(v), alg.label(v), alg.injective_dims(v));
        }
    }
    Ok(())
}
