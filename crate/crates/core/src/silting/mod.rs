//! Presilting and silting objects of `K_Λ`, approximations and completions.
//!
//! Objects are handled as sets of indices into a [`KUniverse`]; a basic object is
//! the sum of the listed indecomposables.

mod records;

use std::collections::BTreeSet;

use serde::Serialize;

pub use records::{CoconeRecord, ConeRecord, ExtensionRecord, Members, Records};

use crate::error::{Error, Result};
use crate::twoterm::{ChainMap, Complex};
use records::{hcat_all, vcat_all};

impl Records {
    /// `E(U, U) = 0`.
    pub fn is_presilting(&self, u: &Members) -> bool {
        u.iter().all(|&a| u.iter().all(|&b| self.ext[a][b].dim() == 0))
    }

    /// Presilting with `thick(U) = K_Λ`. Needs a complete universe.
    pub fn is_silting(&self, u: &Members) -> Result<bool> {
        if !self.is_presilting(u) {
            return Ok(false);
        }
        if u.len() == self.universe.algebra().num_vertices() {
            // presilting with n pairwise distinct summands is silting
            return Ok(true);
        }
        if !self.is_complete() {
            return Err(Error::Incomplete("thick closure over a truncated universe".into()));
        }
        Ok(self.thick_closure(u) == self.all())
    }

    /// Indecomposables without self-extensions.
    pub fn presilting_indecomposables(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.ext[i][i].dim() == 0).collect()
    }

    /// All basic 2-term silting objects, as maximal cliques of the compatibility
    /// graph on presilting indecomposables that pass [`Records::is_silting`].
    pub fn enumerate_two_term_silting(&self) -> Result<Vec<Members>> {
        let verts = self.presilting_indecomposables();
        let adj = |a: usize, b: usize| a != b && self.ext[a][b].dim() == 0 && self.ext[b][a].dim() == 0;
        let mut cliques = Vec::new();
        bron_kerbosch(&mut Vec::new(), verts.clone(), Vec::new(), &adj, &mut cliques);
        let mut out = Vec::new();
        for c in cliques {
            let m: Members = c.into_iter().collect();
            if self.is_silting(&m)? {
                out.push(m);
            }
        }
        out.sort();
        Ok(out)
    }

    /// Minimal left `add(C)`-approximation `t -> U0` and its cone.
    pub fn min_left_approx(&self, t: &Complex, c: &Members) -> Result<Approximation> {
        let alg = self.universe.algebra();
        let mut comps: Vec<(usize, ChainMap)> = Vec::new();
        for &k in c {
            for b in &t.hom_k(self.universe.get(k)).basis {
                comps.push((k, b.clone()));
            }
        }
        let homs: Vec<_> = c.iter().map(|&k| (k, t.hom_k(self.universe.get(k)))).collect();
        let holds = |comps: &[(usize, ChainMap)]| {
            let ids: Vec<usize> = comps.iter().map(|p| p.0).collect();
            let u0 = self.universe.sum(&ids);
            let f = assemble_out(alg, t, comps);
            homs.iter().all(|(k, h)| {
                let images: Vec<Vec<crate::Scalar>> = u0
                    .hom_k(self.universe.get(*k))
                    .basis
                    .iter()
                    .map(|g| h.class_coords(alg, &f.then(alg, g)))
                    .collect();
                crate::matrix::Coordinates::new(alg.field(), h.dim(), &images).rank() == h.dim()
            })
        };
        let mut i = 0;
        while i < comps.len() {
            let mut trial = comps.clone();
            trial.remove(i);
            if holds(&trial) {
                comps = trial;
            } else {
                i += 1;
            }
        }
        let ids: Vec<usize> = comps.iter().map(|p| p.0).collect();
        let approx = self.universe.sum(&ids);
        let map = assemble_out(alg, t, &comps);
        let third = t
            .cone(&map, &approx)
            .ok_or_else(|| Error::Precondition("left approximation is not an inflation".into()))?;
        Ok(Approximation {
            third_ids: self.universe.identify(&third)?,
            approx_ids: ids,
            approx,
            third,
            map,
        })
    }

    /// Minimal right `add(C)`-approximation `U0 -> t` and its cocone.
    pub fn min_right_approx(&self, t: &Complex, c: &Members) -> Result<Approximation> {
        let alg = self.universe.algebra();
        let mut comps: Vec<(usize, ChainMap)> = Vec::new();
        for &k in c {
            for b in &self.universe.get(k).hom_k(t).basis {
                comps.push((k, b.clone()));
            }
        }
        let homs: Vec<_> = c.iter().map(|&k| (k, self.universe.get(k).hom_k(t))).collect();
        let holds = |comps: &[(usize, ChainMap)]| {
            let ids: Vec<usize> = comps.iter().map(|p| p.0).collect();
            let u0 = self.universe.sum(&ids);
            let g = assemble_in(alg, t, comps);
            homs.iter().all(|(k, h)| {
                let images: Vec<Vec<crate::Scalar>> = self
                    .universe
                    .get(*k)
                    .hom_k(&u0)
                    .basis
                    .iter()
                    .map(|a| h.class_coords(alg, &a.then(alg, &g)))
                    .collect();
                crate::matrix::Coordinates::new(alg.field(), h.dim(), &images).rank() == h.dim()
            })
        };
        let mut i = 0;
        while i < comps.len() {
            let mut trial = comps.clone();
            trial.remove(i);
            if holds(&trial) {
                comps = trial;
            } else {
                i += 1;
            }
        }
        let ids: Vec<usize> = comps.iter().map(|p| p.0).collect();
        let approx = self.universe.sum(&ids);
        let map = assemble_in(alg, t, &comps);
        let third = approx
            .cocone(&map, t)
            .ok_or_else(|| Error::Precondition("right approximation is not a deflation".into()))?;
        Ok(Approximation {
            third_ids: self.universe.identify(&third)?,
            approx_ids: ids,
            approx,
            third,
            map,
        })
    }

    /// `(U_λ, U_ρ)` from the minimal left `add(U)`-approximation `Λ ↣ U0 ↠ U1`.
    pub fn split_lambda_rho(&self, u: &Members) -> Result<(Members, Members)> {
        let lam = Complex::regular(self.universe.algebra());
        let a = self.min_left_approx(&lam, u)?;
        let l: Members = a.approx_ids.iter().copied().collect();
        let r: Members = a.third_ids.iter().copied().collect();
        if !l.is_disjoint(&r) || !l.union(&r).all(|x| u.contains(x)) {
            return Err(Error::Inconsistency(format!(
                "approximation of Λ gives overlapping parts {} and {}",
                self.display(&l),
                self.display(&r)
            )));
        }
        Ok((l, r))
    }

    /// Completion `U ⊕ V0` of a presilting `U`, where `V0 ↣ U0 ↠ Λ[1]` with `U0` a
    /// minimal right `add(U)`-approximation of `Λ[1]`.
    pub fn bongartz_completion(&self, u: &Members) -> Result<Members> {
        if !self.is_presilting(u) {
            return Err(Error::Precondition(format!("{} is not presilting", self.display(u))));
        }
        let shift = Complex::regular_shifted(self.universe.algebra());
        let a = self.min_right_approx(&shift, u)?;
        let mut out = u.clone();
        out.extend(a.third_ids);
        Ok(out)
    }

    pub fn silting_report(&self, u: &Members) -> Result<SiltingReport> {
        let (lambda, rho) = self.split_lambda_rho(u)?;
        let names = |s: &Members| s.iter().map(|&i| self.universe.name(i).to_string()).collect();
        Ok(SiltingReport {
            summands: names(u),
            g_vectors: u.iter().map(|&i| self.universe.get(i).g_vector()).collect(),
            lambda: names(&lambda),
            rho: names(&rho),
        })
    }
}

/// A minimal approximation and the third term of its conflation.
#[derive(Clone, Debug)]
pub struct Approximation {
    /// `T -> U0` for a left approximation, `U0 -> T` for a right one.
    pub map: ChainMap,
    pub approx: Complex,
    pub approx_ids: Vec<usize>,
    /// Cone of a left approximation, cocone of a right one.
    pub third: Complex,
    pub third_ids: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SiltingReport {
    pub summands: Vec<String>,
    pub g_vectors: Vec<Vec<i64>>,
    pub lambda: Vec<String>,
    pub rho: Vec<String>,
}

fn assemble_out(alg: &crate::algebra::Algebra, t: &Complex, comps: &[(usize, ChainMap)]) -> ChainMap {
    ChainMap {
        f1: hcat_all(alg, t.src(), comps.iter().map(|p| &p.1.f1)),
        f0: hcat_all(alg, t.tgt(), comps.iter().map(|p| &p.1.f0)),
    }
}

fn assemble_in(alg: &crate::algebra::Algebra, t: &Complex, comps: &[(usize, ChainMap)]) -> ChainMap {
    ChainMap {
        f1: vcat_all(alg, t.src(), comps.iter().map(|p| &p.1.f1)),
        f0: vcat_all(alg, t.tgt(), comps.iter().map(|p| &p.1.f0)),
    }
}

/// Maximal cliques with pivoting.
fn bron_kerbosch<F: Fn(usize, usize) -> bool>(
    r: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    adj: &F,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| adj(u, v)).count())
        .expect("non-empty");
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj(pivot, v)).collect();
    let (mut p, mut x) = (p, x);
    for v in candidates {
        r.push(v);
        let np = p.iter().copied().filter(|&w| w != v && adj(v, w)).collect();
        let nx = x.iter().copied().filter(|&w| w != v && adj(v, w)).collect();
        bron_kerbosch(r, np, nx, adj, out);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}

/// Helper for callers that work with plain index lists.
pub fn members(ids: impl IntoIterator<Item = usize>) -> Members {
    ids.into_iter().collect::<BTreeSet<_>>()
}
