//! Subcategories of `mod Λ` over a finite module universe.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::rep::{fac_closure, Module, ModuleUniverse, Morphism};

/// `left ↣ middle ↠ right` in `mod Λ`.
#[derive(Clone, Debug)]
pub struct ModExtension {
    pub left: usize,
    pub right: usize,
    pub middle: Vec<usize>,
}

/// Extension tables of a module universe.
#[derive(Clone, Debug)]
pub struct ModRecords {
    pub universe: ModuleUniverse,
    pub hom_dims: Vec<Vec<usize>>,
    pub extensions: Vec<ModExtension>,
    /// Largest number of indecomposable summands in the varying end of the maps
    /// scanned for kernels and cokernels.
    pub sum_bound: usize,
    pub seed: u64,
    pub exhaustive: bool,
}

impl ModRecords {
    pub fn build(universe: ModuleUniverse, seed: u64) -> Result<ModRecords> {
        let n = universe.len();
        let mut rng = crate::seeded_rng(seed);
        let hom_dims: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| universe.get(i).hom(universe.get(j)).dim()).collect())
            .collect();
        let mut exhaustive = hom_dims.iter().flatten().all(|&d| d <= 1);
        let mut extensions = Vec::new();
        for c in 0..n {
            for a in 0..n {
                let cm = universe.get(c);
                let basis = cm.ext1_basis(universe.get(a));
                let mut classes = basis.clone();
                if basis.len() >= 2 {
                    exhaustive = false;
                    let (_, omega, _, _) = cm.syzygy();
                    let h = omega.hom(universe.get(a));
                    for _ in 0..4 {
                        // random combination of the chosen representatives
                        let coeffs: Vec<crate::Scalar> = (0..basis.len())
                            .map(|_| crate::random_scalar(cm.field(), &mut rng))
                            .collect();
                        let mut acc = h.combine(&vec![cm.field().zero(); h.dim()]);
                        for (b, s) in basis.iter().zip(&coeffs) {
                            acc = acc.add(&b.scale(s));
                        }
                        classes.push(acc);
                    }
                }
                for z in classes {
                    let mid = cm.extension_middle(universe.get(a), &z);
                    match universe.identify(&mid) {
                        Ok(middle) => extensions.push(ModExtension { left: a, right: c, middle }),
                        // a middle term with unlisted summands: the table is partial
                        Err(Error::Incomplete(_)) if !universe.is_complete() => exhaustive = false,
                        Err(e) => return Err(e),
                    }
                }
            }
        }
        Ok(ModRecords {
            universe,
            hom_dims,
            extensions,
            sum_bound: 2,
            seed,
            exhaustive,
        })
    }

    pub fn len(&self) -> usize {
        self.universe.len()
    }

    pub fn is_empty(&self) -> bool {
        self.universe.is_empty()
    }

    pub fn all(&self) -> BTreeSet<usize> {
        (0..self.len()).collect()
    }

    fn modules(&self, s: &BTreeSet<usize>) -> Vec<&Module> {
        s.iter().map(|&i| self.universe.get(i)).collect()
    }

    pub fn is_extension_closed(&self, s: &BTreeSet<usize>) -> bool {
        self.extensions
            .iter()
            .filter(|e| s.contains(&e.left) && s.contains(&e.right))
            .all(|e| e.middle.iter().all(|m| s.contains(m)))
    }

    /// `Fac(⊕ s)` among the universe.
    pub fn fac(&self, s: &BTreeSet<usize>) -> BTreeSet<usize> {
        fac_closure(&self.universe, &self.modules(s)).into_iter().collect()
    }

    /// `{N : Hom(s, N) = 0}`.
    pub fn right_perp(&self, s: &BTreeSet<usize>) -> BTreeSet<usize> {
        (0..self.len()).filter(|&n| s.iter().all(|&m| self.hom_dims[m][n] == 0)).collect()
    }

    /// `{N : Hom(N, s) = 0}`.
    pub fn left_perp(&self, s: &BTreeSet<usize>) -> BTreeSet<usize> {
        (0..self.len()).filter(|&n| s.iter().all(|&m| self.hom_dims[n][m] == 0)).collect()
    }

    /// Closed under quotients and extensions.
    pub fn is_torsion_class(&self, s: &BTreeSet<usize>) -> bool {
        self.fac(s).is_subset(s) && self.is_extension_closed(s)
    }

    /// Closed under kernels, cokernels and extensions.
    pub fn is_wide(&self, s: &BTreeSet<usize>) -> bool {
        if !self.is_extension_closed(s) {
            return false;
        }
        let mut ok = true;
        self.scan_maps(s, s, &mut |g, src, tgt| {
            let k = g.kernel(src).0;
            let c = g.cokernel(tgt).0;
            let inside = |m: &Module| {
                self.universe
                    .identify(m)
                    .map(|ids| ids.iter().all(|i| s.contains(i)))
                    .unwrap_or(false)
            };
            ok &= inside(&k) && inside(&c);
            ok
        });
        ok
    }

    /// `α(T) = {M ∈ T : ker g ∈ T for every g: N -> M with N ∈ T}`.
    pub fn alpha(&self, t: &BTreeSet<usize>) -> BTreeSet<usize> {
        t.iter()
            .copied()
            .filter(|&m| {
                let single: BTreeSet<usize> = [m].into();
                let mut ok = true;
                self.scan_maps(t, &single, &mut |g, src, _| {
                    let k = g.kernel(src).0;
                    ok &= self
                        .universe
                        .identify(&k)
                        .map(|ids| ids.iter().all(|i| t.contains(i)))
                        .unwrap_or(false);
                    ok
                });
                ok
            })
            .collect()
    }

    /// Calls `f(g, source, target)` on maps from sums of members of `sources` to
    /// sums of members of `targets`, both of at most `sum_bound` summands. Maps are
    /// the Hom basis vectors, their sum and a few random combinations. Stops when
    /// `f` returns false.
    fn scan_maps(
        &self,
        sources: &BTreeSet<usize>,
        targets: &BTreeSet<usize>,
        f: &mut impl FnMut(&Morphism, &Module, &Module) -> bool,
    ) {
        let mut rng = crate::seeded_rng(self.seed);
        let src_sets = multisets(&sources.iter().copied().collect::<Vec<_>>(), self.sum_bound);
        let tgt_sets = multisets(&targets.iter().copied().collect::<Vec<_>>(), self.sum_bound);
        for a in &src_sets {
            let am = sum(&self.universe, a);
            for b in &tgt_sets {
                let bm = sum(&self.universe, b);
                let h = am.hom(&bm);
                if h.dim() == 0 {
                    continue;
                }
                let mut maps = h.basis.clone();
                maps.push(h.combine(&vec![am.field().one(); h.dim()]));
                for _ in 0..3 {
                    maps.push(h.random_element(&mut rng));
                }
                for g in &maps {
                    if !f(g, &am, &bm) {
                        return;
                    }
                }
            }
        }
    }
}

fn sum(u: &ModuleUniverse, ids: &[usize]) -> Module {
    let parts: Vec<&Module> = ids.iter().map(|&i| u.get(i)).collect();
    Module::direct_sum_all(u.algebra(), &parts)
}

fn multisets(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(pool: &[usize], start: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == k {
            return;
        }
        for i in start..pool.len() {
            cur.push(pool[i]);
            rec(pool, i, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(pool, 0, k, &mut Vec::new(), &mut out);
    out
}
