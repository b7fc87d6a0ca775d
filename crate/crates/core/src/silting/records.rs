//! Precomputed conflations between members of a finite universe of indecomposables.
//!
//! Closure under cones, cocones and extensions reduces to conflations whose
//! inflation source (for cones), deflation target (for cocones) or both end terms
//! (for extensions) are indecomposable: a sum splits into iterated conflations with
//! one summand peeled off at a time. The middle term of a cone or cocone record is a
//! sum of universe members, one copy per chosen morphism component.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::twoterm::{ChainMap, Complex, ESpace, HomK, KUniverse};

/// `source ↣ ⊕middle ↠ ⊕result`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeRecord {
    pub source: usize,
    pub middle: Vec<usize>,
    pub result: Vec<usize>,
}

/// `⊕result ↣ ⊕middle ↠ target`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoconeRecord {
    pub target: usize,
    pub middle: Vec<usize>,
    pub result: Vec<usize>,
}

/// `left ↣ ⊕middle ↠ right`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtensionRecord {
    pub left: usize,
    pub right: usize,
    pub middle: Vec<usize>,
}

/// Membership set over universe indices.
pub type Members = BTreeSet<usize>;

/// The conflation tables of a universe.
#[derive(Clone, Debug)]
pub struct Records {
    pub universe: KUniverse,
    pub hom: Vec<Vec<HomK>>,
    pub ext: Vec<Vec<ESpace>>,
    pub cones: Vec<ConeRecord>,
    pub cocones: Vec<CoconeRecord>,
    pub extensions: Vec<ExtensionRecord>,
    /// True when every Hom and E space involved has dimension at most one, so
    /// the recorded component choices cover every conflation up to isomorphism.
    pub exhaustive: bool,
    pub seed: u64,
    /// Largest number of indecomposable summands in the varying end term used by
    /// [`Records::closure_vee`] and [`Records::closure_wedge`].
    pub sum_bound: usize,
}

/// Largest number of component choices tried per record family.
const CHOICE_CAP: usize = 1 << 10;

impl Records {
    pub fn build(universe: KUniverse, seed: u64) -> Result<Records> {
        let alg = universe.algebra().clone();
        let n = universe.len();
        let mut rng = crate::seeded_rng(seed);
        let hom: Vec<Vec<HomK>> = (0..n)
            .map(|i| (0..n).map(|j| universe.get(i).hom_k(universe.get(j))).collect())
            .collect();
        let ext: Vec<Vec<ESpace>> = (0..n)
            .map(|i| (0..n).map(|j| universe.get(i).ext(universe.get(j))).collect())
            .collect();
        let mut exhaustive = hom.iter().flatten().all(|h| h.dim() <= 1) && ext.iter().flatten().all(|e| e.dim() <= 1);
        let f = alg.field();

        let targets: Vec<usize> = (0..n).collect();
        let mut cones = Vec::new();
        for x in 0..n {
            let (found, capped) = cones_from(&universe, &[x], &targets, &mut rng)?;
            exhaustive &= !capped;
            cones.extend(found.into_iter().map(|(middle, result)| ConeRecord { source: x, middle, result }));
        }
        let mut cocones = Vec::new();
        for z in 0..n {
            let (found, capped) = cocones_into(&universe, &[z], &targets, &mut rng)?;
            exhaustive &= !capped;
            cocones.extend(found.into_iter().map(|(middle, result)| CoconeRecord { target: z, middle, result }));
        }

        let mut extensions = Vec::new();
        for c in 0..n {
            for a in 0..n {
                let e = &ext[c][a];
                let mut classes: Vec<crate::algebra::ProjMap> = e.basis.clone();
                if e.dim() >= 2 {
                    for _ in 0..4 {
                        let mut acc = crate::algebra::ProjMap::zero(&alg, universe.get(c).src(), universe.get(a).tgt());
                        for b in &e.basis {
                            acc = acc.add(&alg, &b.scale(&alg, &crate::random_scalar(f, &mut rng)));
                        }
                        classes.push(acc);
                    }
                }
                for cls in classes {
                    let mid = universe.get(c).extension_middle(universe.get(a), &cls);
                    match identified(&universe, &mid)? {
                        Some(middle) => extensions.push(ExtensionRecord { left: a, right: c, middle }),
                        None => exhaustive = false,
                    }
                }
            }
        }
        Ok(Records {
            universe,
            hom,
            ext,
            cones,
            cocones,
            extensions,
            exhaustive,
            seed,
            sum_bound: 2,
        })
    }

    pub fn len(&self) -> usize {
        self.universe.len()
    }

    pub fn is_empty(&self) -> bool {
        self.universe.is_empty()
    }

    pub fn all(&self) -> Members {
        (0..self.len()).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.universe.is_complete() && self.exhaustive
    }

    /// Closed under `Cone(S, S)`.
    pub fn closed_under_cones(&self, s: &Members) -> bool {
        self.cones
            .iter()
            .filter(|r| s.contains(&r.source) && r.middle.iter().all(|m| s.contains(m)))
            .all(|r| r.result.iter().all(|m| s.contains(m)))
    }

    /// Closed under `CCone(S, S)`.
    pub fn closed_under_cocones(&self, s: &Members) -> bool {
        self.cocones
            .iter()
            .filter(|r| s.contains(&r.target) && r.middle.iter().all(|m| s.contains(m)))
            .all(|r| r.result.iter().all(|m| s.contains(m)))
    }

    pub fn closed_under_extensions(&self, s: &Members) -> bool {
        self.extensions
            .iter()
            .filter(|r| s.contains(&r.left) && s.contains(&r.right))
            .all(|r| r.middle.iter().all(|m| s.contains(m)))
    }

    /// Smallest set containing `s` closed under cones, cocones and extensions.
    pub fn thick_closure(&self, s: &Members) -> Members {
        let mut cur = s.clone();
        loop {
            let mut next = cur.clone();
            for r in &self.cones {
                if cur.contains(&r.source) && r.middle.iter().all(|m| cur.contains(m)) {
                    next.extend(&r.result);
                }
            }
            for r in &self.cocones {
                if cur.contains(&r.target) && r.middle.iter().all(|m| cur.contains(m)) {
                    next.extend(&r.result);
                }
            }
            for r in &self.extensions {
                if cur.contains(&r.left) && cur.contains(&r.right) {
                    next.extend(&r.middle);
                }
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// `S^∨`: iterated cocones `Z ↣ B ↠ Y` with `B ∈ add S` and `Y ∈ add S^∨_{m-1}`.
    /// Targets run over sums of at most [`Records::sum_bound`] indecomposables.
    pub fn closure_vee(&self, s: &Members) -> Members {
        let gens: Vec<usize> = s.iter().copied().collect();
        let mut rng = crate::seeded_rng(self.seed);
        let mut cur = s.clone();
        let mut tried: BTreeSet<Vec<usize>> = BTreeSet::new();
        loop {
            let mut next = cur.clone();
            let pool: Vec<usize> = cur.iter().copied().collect();
            for tgt in multisets(&pool, self.sum_bound) {
                if !tried.insert(tgt.clone()) {
                    continue;
                }
                let (found, _) = cocones_into(&self.universe, &tgt, &gens, &mut rng).expect("identification");
                for (_, result) in found {
                    next.extend(result);
                }
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// `S^∧`: iterated cones `X ↣ B ↠ Z` with `X ∈ add S^∧_{m-1}` and `B ∈ add S`.
    /// Sources run over sums of at most [`Records::sum_bound`] indecomposables.
    pub fn closure_wedge(&self, s: &Members) -> Members {
        let gens: Vec<usize> = s.iter().copied().collect();
        let mut rng = crate::seeded_rng(self.seed);
        let mut cur = s.clone();
        let mut tried: BTreeSet<Vec<usize>> = BTreeSet::new();
        loop {
            let mut next = cur.clone();
            let pool: Vec<usize> = cur.iter().copied().collect();
            for src in multisets(&pool, self.sum_bound) {
                if !tried.insert(src.clone()) {
                    continue;
                }
                let (found, _) = cones_from(&self.universe, &src, &gens, &mut rng).expect("identification");
                for (_, result) in found {
                    next.extend(result);
                }
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// `{X : E(X, S) = 0}`.
    pub fn ext_left_perp(&self, s: &Members) -> Members {
        (0..self.len()).filter(|&x| s.iter().all(|&y| self.ext[x][y].dim() == 0)).collect()
    }

    /// `{Y : E(S, Y) = 0}`.
    pub fn ext_right_perp(&self, s: &Members) -> Members {
        (0..self.len()).filter(|&y| s.iter().all(|&x| self.ext[x][y].dim() == 0)).collect()
    }

    /// Whether some inflation `x ↣ C` with `C ∈ add(targets)` exists, tested on the
    /// universal map `x -> ⊕ C^{dim Hom(x, C)}`.
    pub fn has_inflation_into(&self, x: usize, targets: &Members) -> bool {
        let alg = self.universe.algebra();
        let src = self.universe.get(x);
        let maps: Vec<&ChainMap> = targets.iter().flat_map(|&c| self.hom[x][c].basis.iter()).collect();
        let map = ChainMap {
            f1: hcat_all(alg, src.src(), maps.iter().map(|m| &m.f1)),
            f0: hcat_all(alg, src.tgt(), maps.iter().map(|m| &m.f0)),
        };
        src.is_inflation(&map)
    }

    pub fn display(&self, s: &Members) -> String {
        self.universe.display_set(&s.iter().copied().collect::<Vec<_>>())
    }
}

/// Decomposes `z` over the universe. Over a truncated universe an object with
/// unlisted summands yields `None`, and the caller drops the record.
fn identified(universe: &KUniverse, z: &Complex) -> Result<Option<Vec<usize>>> {
    match universe.identify(z) {
        Ok(ids) => Ok(Some(ids)),
        Err(Error::Incomplete(_)) if !universe.is_complete() => Ok(None),
        Err(e) => Err(e),
    }
}

/// Cones of maps from `⊕src` into sums of `targets`, one record per component choice.
/// Returns `(middle, result)` pairs for the choices that are inflations.
#[allow(clippy::type_complexity)]
fn cones_from<R: rand::Rng>(
    universe: &KUniverse,
    src: &[usize],
    targets: &[usize],
    rng: &mut R,
) -> Result<(Vec<(Vec<usize>, Vec<usize>)>, bool)> {
    let alg = universe.algebra();
    let source = universe.sum(src);
    let options: Vec<Vec<Vec<ChainMap>>> = targets
        .iter()
        .map(|&k| component_options(alg, &source.hom_k(universe.get(k)), rng))
        .collect();
    let (choices, mut capped) = product(&options);
    let mut out = Vec::new();
    for choice in choices {
        let mut middle_ids = Vec::new();
        let mut maps: Vec<&ChainMap> = Vec::new();
        for (t, opt) in choice.iter().enumerate() {
            for m in &options[t][*opt] {
                middle_ids.push(targets[t]);
                maps.push(m);
            }
        }
        let middle = universe.sum(&middle_ids);
        let map = ChainMap {
            f1: hcat_all(alg, source.src(), maps.iter().map(|m| &m.f1)),
            f0: hcat_all(alg, source.tgt(), maps.iter().map(|m| &m.f0)),
        };
        if let Some(z) = source.cone(&map, &middle) {
            match identified(universe, &z)? {
                Some(ids) => out.push((middle_ids, ids)),
                None => capped = true,
            }
        }
    }
    Ok((out, capped))
}

/// Cocones of maps from sums of `sources` onto `⊕tgt`.
#[allow(clippy::type_complexity)]
fn cocones_into<R: rand::Rng>(
    universe: &KUniverse,
    tgt: &[usize],
    sources: &[usize],
    rng: &mut R,
) -> Result<(Vec<(Vec<usize>, Vec<usize>)>, bool)> {
    let alg = universe.algebra();
    let target = universe.sum(tgt);
    let options: Vec<Vec<Vec<ChainMap>>> = sources
        .iter()
        .map(|&k| component_options(alg, &universe.get(k).hom_k(&target), rng))
        .collect();
    let (choices, mut capped) = product(&options);
    let mut out = Vec::new();
    for choice in choices {
        let mut middle_ids = Vec::new();
        let mut maps: Vec<&ChainMap> = Vec::new();
        for (t, opt) in choice.iter().enumerate() {
            for m in &options[t][*opt] {
                middle_ids.push(sources[t]);
                maps.push(m);
            }
        }
        let middle = universe.sum(&middle_ids);
        let map = ChainMap {
            f1: vcat_all(alg, target.src(), maps.iter().map(|m| &m.f1)),
            f0: vcat_all(alg, target.tgt(), maps.iter().map(|m| &m.f0)),
        };
        if let Some(a) = middle.cocone(&map, &target) {
            match identified(universe, &a)? {
                Some(ids) => out.push((middle_ids, ids)),
                None => capped = true,
            }
        }
    }
    Ok((out, capped))
}

/// Multisets of size `1..=k` drawn from `pool`.
fn multisets(pool: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
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
    rec(pool, 0, k, &mut cur, &mut out);
    out
}

/// Options for the components of a map into (or out of) one universe member:
/// none, each basis vector, and for dimension >= 2 the full basis and a random vector.
fn component_options<R: rand::Rng>(alg: &crate::algebra::Algebra, h: &HomK, rng: &mut R) -> Vec<Vec<ChainMap>> {
    let mut out = vec![Vec::new()];
    for b in &h.basis {
        out.push(vec![b.clone()]);
    }
    if h.dim() >= 2 {
        out.push(h.basis.clone());
        let coeffs: Vec<Scalar> = (0..h.dim()).map(|_| crate::random_scalar(alg.field(), rng)).collect();
        out.push(vec![h.combine(alg, &coeffs)]);
    }
    out
}

/// Cartesian product of option indices. When it would exceed [`CHOICE_CAP`],
/// only the choices with a single non-empty component are returned and the
/// result is flagged as capped.
fn product<T>(options: &[Vec<T>]) -> (Vec<Vec<usize>>, bool) {
    let size = options
        .iter()
        .try_fold(1usize, |acc, o| acc.checked_mul(o.len()).filter(|&s| s <= CHOICE_CAP));
    if size.is_none() {
        let mut out = vec![vec![0; options.len()]];
        for (t, opts) in options.iter().enumerate() {
            for i in 1..opts.len() {
                let mut p = vec![0; options.len()];
                p[t] = i;
                out.push(p);
            }
        }
        return (out, true);
    }
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for opts in options {
        out = out
            .iter()
            .flat_map(|prefix| {
                (0..opts.len()).map(move |i| {
                    let mut p = prefix.clone();
                    p.push(i);
                    p
                })
            })
            .collect();
    }
    (out, false)
}

pub(crate) fn hcat_all<'a>(
    alg: &crate::algebra::Algebra,
    src: &[usize],
    parts: impl Iterator<Item = &'a crate::algebra::ProjMap>,
) -> crate::algebra::ProjMap {
    parts.fold(crate::algebra::ProjMap::zero(alg, src, &[]), |acc, p| acc.hcat(alg, p))
}

pub(crate) fn vcat_all<'a>(
    alg: &crate::algebra::Algebra,
    tgt: &[usize],
    parts: impl Iterator<Item = &'a crate::algebra::ProjMap>,
) -> crate::algebra::ProjMap {
    parts.fold(crate::algebra::ProjMap::zero(alg, &[], tgt), |acc, p| acc.vcat(alg, p))
}
