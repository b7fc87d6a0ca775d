//! Generation and Hom-orthogonality tests over a module universe.

use super::{Module, ModuleUniverse};
use crate::matrix::Matrix;

/// Whether `n ∈ Fac(⊕ gens)`: the images of all maps from the generators span `n`.
pub fn is_fac_of(n: &Module, gens: &[&Module]) -> bool {
    let f = n.field();
    let mut spans: Vec<Matrix> = n.dims().iter().map(|&d| Matrix::zeros(f, d, 0)).collect();
    for g in gens {
        for phi in g.hom(n).basis {
            for (v, b) in phi.blocks.iter().enumerate() {
                spans[v] = spans[v].hstack(b);
            }
        }
    }
    spans.iter().zip(n.dims()).all(|(s, &d)| s.rank() == d)
}

/// Whether `n ∈ Sub(⊕ gens)`: the maps into the generators are jointly injective.
pub fn is_sub_of(n: &Module, gens: &[&Module]) -> bool {
    let f = n.field();
    let mut stacks: Vec<Matrix> = n.dims().iter().map(|&d| Matrix::zeros(f, 0, d)).collect();
    for g in gens {
        for phi in n.hom(g).basis {
            for (v, b) in phi.blocks.iter().enumerate() {
                stacks[v] = stacks[v].vstack(b);
            }
        }
    }
    stacks.iter().zip(n.dims()).all(|(s, &d)| s.rank() == d)
}

/// Members of the universe lying in `Fac` of the given modules.
pub fn fac_closure(universe: &ModuleUniverse, gens: &[&Module]) -> Vec<usize> {
    (0..universe.len())
        .filter(|&i| is_fac_of(universe.get(i), gens))
        .collect()
}

/// `{U : Hom(U, S) = 0 for all S}`.
pub fn hom_left_perp(universe: &ModuleUniverse, set: &[&Module]) -> Vec<usize> {
    (0..universe.len())
        .filter(|&i| set.iter().all(|s| universe.get(i).hom(s).dim() == 0))
        .collect()
}

/// `{U : Hom(S, U) = 0 for all S}`.
pub fn hom_right_perp(universe: &ModuleUniverse, set: &[&Module]) -> Vec<usize> {
    (0..universe.len())
        .filter(|&i| set.iter().all(|s| s.hom(universe.get(i)).dim() == 0))
        .collect()
}
