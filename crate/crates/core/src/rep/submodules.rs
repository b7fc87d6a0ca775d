//! Exhaustive submodule enumeration over a prime field.

use super::{Module, Morphism};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// Largest total dimension accepted by [`enumerate_submodules`].
pub const DEFAULT_SUBMODULE_GUARD: usize = 6;

/// All submodules of `m`, as inclusion morphisms (per-vertex column bases).
pub fn enumerate_submodules(m: &Module, guard: usize) -> Result<Vec<(Module, Morphism)>> {
    let Field::Prime(p) = m.field() else {
        return Err(Error::Refused("submodules over Q form a variety, not a finite list".into()));
    };
    if m.dim() > guard {
        return Err(Error::Refused(format!("total dimension {} exceeds guard {guard}", m.dim())));
    }
    let f = m.field();
    let per_vertex: Vec<Vec<Matrix>> = m.dims().iter().map(|&d| subspaces(f, p, d)).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<Matrix> = Vec::new();
    search(m, &per_vertex, &mut chosen, &mut out);
    Ok(out)
}

fn search(m: &Module, options: &[Vec<Matrix>], chosen: &mut Vec<Matrix>, out: &mut Vec<(Module, Morphism)>) {
    let v = chosen.len();
    if v == options.len() {
        out.push(m.submodule(chosen).expect("stability checked"));
        return;
    }
    let q = m.algebra().quiver();
    for s in &options[v] {
        chosen.push(s.clone());
        // check every arrow whose endpoints are both chosen
        let ok = q.arrows.iter().enumerate().all(|(ai, a)| {
            if a.source > v || a.target > v || (a.source != v && a.target != v) {
                return true;
            }
            let img = m.map(ai).mul(&chosen[a.target]);
            chosen[a.source].hstack(&img).rank() == chosen[a.source].cols()
        });
        if ok {
            search(m, options, chosen, out);
        }
        chosen.pop();
    }
}

/// Every subspace of `F_p^d`, one reduced-echelon basis each.
fn subspaces(f: Field, p: u32, d: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << d) {
        let pivots: Vec<usize> = (0..d).filter(|i| mask & (1 << i) != 0).collect();
        // free positions: (row k, column j) with j > pivot k and j not a pivot
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(k, &pk)| (pk + 1..d).filter(|j| !pivots.contains(j)).map(move |j| (k, j)))
            .collect();
        let count = (p as u64).pow(free.len() as u32);
        for code in 0..count {
            let mut rows = Matrix::zeros(f, pivots.len(), d);
            for (k, &pk) in pivots.iter().enumerate() {
                rows.set(k, pk, f.one());
            }
            let mut c = code;
            for &(k, j) in &free {
                rows.set(k, j, f.from_i64((c % p as u64) as i64));
                c /= p as u64;
            }
            out.push(rows.transpose());
        }
    }
    out
}
