//! Semistability of 2-term complexes.
//!
//! Three notions live here: `M`-semistability through the determinantal
//! semi-invariant `s(x, M) = det(Hom(X⁰, M) -> Hom(X⁻¹, M))`, King's
//! `θ`-semistability of modules, and numerical `d`-semistability, which asks that
//! every inflation `Y ↣ X` has `⟨[Y], d⟩ >= 0`.

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;
use crate::rep::{enumerate_submodules, Module, ModuleUniverse, DEFAULT_SUBMODULE_GUARD};
use crate::twoterm::{dim_weight, euler_pairing, ChainMap, Complex, KUniverse};

/// `s(x, M)` together with the matrix of `x*` in the standard bases.
#[derive(Clone, Debug)]
pub struct SemiInvariant {
    pub value: Scalar,
    /// `x*: Hom(X⁰, M) -> Hom(X⁻¹, M)` with `Hom(P_v, M) = M_v`.
    pub matrix: Matrix,
}

/// The determinantal semi-invariant. Fails unless `⟨[X], [M]⟩ = 0`.
pub fn det_semi_invariant(x: &Complex, m: &Module) -> Result<SemiInvariant> {
    let p = euler_pairing(&x.g_vector(), &dim_weight(m));
    if p != 0 {
        return Err(Error::NonSquare(p));
    }
    let matrix = crate::rep::precomposition_matrix(m, x.differential());
    Ok(SemiInvariant {
        value: matrix.det(),
        matrix,
    })
}

/// `⟨[X], [M]⟩ = 0` and `x*` invertible.
pub fn is_m_semistable(x: &Complex, m: &Module) -> bool {
    det_semi_invariant(&x.minimize(), m).is_ok_and(|s| !s.value.is_zero())
}

/// `𝒯(H)`: universe members that are `M`-semistable for every `M ∈ H`.
pub fn script_t(h: &[&Module], ku: &KUniverse) -> Vec<usize> {
    (0..ku.len())
        .filter(|&i| h.iter().all(|m| is_m_semistable(ku.get(i), m)))
        .collect()
}

/// `𝒲(C)`: universe modules `M` with every `X ∈ C` `M`-semistable.
pub fn script_w(c: &[&Complex], mu: &ModuleUniverse) -> Vec<usize> {
    (0..mu.len())
        .filter(|&i| c.iter().all(|x| is_m_semistable(x, mu.get(i))))
        .collect()
}

/// King semistability: `⟨θ, [M]⟩ = 0` and `⟨θ, [N]⟩ <= 0` for every submodule.
/// Only over a prime field, by exhaustive submodule enumeration.
pub fn king_semistable(m: &Module, theta: &[i64]) -> Result<bool> {
    if matches!(m.field(), Field::Rationals) {
        return Err(Error::Refused("King semistability is decided only over a prime field".into()));
    }
    if euler_pairing(theta, &dim_weight(m)) != 0 {
        return Ok(false);
    }
    let subs = enumerate_submodules(m, DEFAULT_SUBMODULE_GUARD.max(m.dim()))?;
    Ok(subs.iter().all(|(n, _)| euler_pairing(theta, &dim_weight(n)) <= 0))
}

/// Members of `𝒲_θ` found among sums of universe complexes.
#[derive(Clone, Debug, Serialize)]
pub struct WTheta {
    pub members: Vec<usize>,
    /// True when a presilting complex of class `θ` was found, which makes the
    /// result exact; otherwise the union is only a lower bound.
    pub exact: bool,
    /// Universe ids of the complexes that contributed.
    pub witnesses: Vec<Vec<usize>>,
}

/// `𝒲_θ = ∪ 𝒲(X)` over complexes `X` with `[X] = kθ`, `1 <= k <= mult_bound`,
/// drawn from sums of at most `mult_bound · n` universe members.
pub fn w_theta_members(theta: &[i64], ku: &KUniverse, mult_bound: usize) -> WTheta {
    let n = ku.algebra().num_vertices();
    let gs: Vec<Vec<i64>> = ku.complexes().iter().map(Complex::g_vector).collect();
    let mut members = std::collections::BTreeSet::new();
    let mut witnesses = Vec::new();
    let mut exact = false;
    if theta.iter().all(|&t| t == 0) {
        // X = 0 is admissible, and 𝒲(0) is everything
        return WTheta {
            members: (0..ku.modules().len()).collect(),
            exact: true,
            witnesses: vec![Vec::new()],
        };
    }
    let max_size = mult_bound * n;
    let mut cur = Vec::new();
    let mut visit = |ids: &[usize]| {
        let mut g = vec![0i64; n];
        for &i in ids {
            for (a, b) in g.iter_mut().zip(&gs[i]) {
                *a += b;
            }
        }
        let k = (1..=mult_bound as i64).find(|&k| g.iter().zip(theta).all(|(a, t)| *a == k * t));
        if k.is_none() {
            return;
        }
        let x = ku.sum(ids);
        let w = script_w(&[&x], ku.modules());
        let presilting = ids.iter().all(|&a| ids.iter().all(|&b| ku.get(a).ext(ku.get(b)).dim() == 0));
        if presilting && k == Some(1) {
            exact = true;
        }
        members.extend(w);
        witnesses.push(ids.to_vec());
    };
    multisets(ku.len(), max_size, 0, &mut cur, &mut visit);
    WTheta {
        members: members.into_iter().collect(),
        exact,
        witnesses,
    }
}

fn multisets(len: usize, max: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if !cur.is_empty() {
        f(cur);
    }
    if cur.len() == max {
        return;
    }
    for i in start..len {
        cur.push(i);
        multisets(len, max, i, cur, f);
        cur.pop();
    }
}

/// Knobs for the numerical semistability search.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct NumericalBudget {
    /// Largest number of universe summands in a candidate source.
    pub mult_bound: usize,
    /// Random chain maps tried per candidate source, after the basis sweep.
    pub samples: usize,
    pub seed: u64,
}

impl Default for NumericalBudget {
    fn default() -> Self {
        NumericalBudget {
            mult_bound: 2,
            samples: 16,
            seed: crate::DEFAULT_SEED,
        }
    }
}

/// Outcome of [`is_numerically_semistable`].
#[derive(Clone, Debug)]
pub enum NumericalVerdict {
    /// `⟨[X], d⟩ != 0`.
    Unbalanced(i64),
    /// An inflation `Y ↣ X` with `⟨[Y], d⟩ < 0`. The map is absent when `Y` is a
    /// direct summand of `X`, where the split inclusion serves.
    Refuted {
        source: Vec<usize>,
        map: Option<ChainMap>,
        pairing: i64,
    },
    /// No violating inflation among the candidates allowed by the budget.
    WithinBudget { budget: NumericalBudget, candidates: usize },
}

impl NumericalVerdict {
    pub fn is_refuted(&self) -> bool {
        !matches!(self, NumericalVerdict::WithinBudget { .. })
    }

    pub fn to_json(&self, ku: &KUniverse) -> Value {
        match self {
            NumericalVerdict::Unbalanced(p) => json!({ "semistable": false, "pairing": p }),
            NumericalVerdict::Refuted { source, pairing, .. } => json!({
                "semistable": false,
                "witness": source.iter().map(|&i| ku.name(i)).collect::<Vec<_>>(),
                "pairing": pairing,
            }),
            NumericalVerdict::WithinBudget { budget, candidates } => json!({
                "semistable": "true-within-budget",
                "budget": { "mult_bound": budget.mult_bound, "samples": budget.samples },
                "candidates": candidates,
                "seed": budget.seed,
            }),
        }
    }
}

/// Searches for an inflation `Y ↣ X` with `⟨[Y], d⟩ < 0`.
///
/// Candidates are the sub-sums of the decomposition of `X` (split inclusions) and
/// sums of at most `mult_bound` universe members of negative pairing, each tried
/// with every Hom basis vector, the sum of the basis, and `samples` random maps.
pub fn is_numerically_semistable(x: &Complex, d: &[i64], ku: &KUniverse, budget: NumericalBudget) -> Result<NumericalVerdict> {
    let p = euler_pairing(&x.g_vector(), d);
    if p != 0 {
        return Ok(NumericalVerdict::Unbalanced(p));
    }
    let alg = ku.algebra();
    let x = x.minimize();
    let pair = |ids: &[usize]| ids.iter().map(|&i| euler_pairing(&ku.get(i).g_vector(), d)).sum::<i64>();
    let parts = ku.identify(&x)?;
    let mut candidates = 0;
    // split summands
    let mut sub = Vec::new();
    let mut found = None;
    subsets(&parts, 0, &mut sub, &mut |s| {
        candidates += 1;
        if found.is_none() && !s.is_empty() && pair(s) < 0 {
            found = Some(s.to_vec());
        }
    });
    if let Some(source) = found {
        let pairing = pair(&source);
        return Ok(NumericalVerdict::Refuted {
            map: None,
            source,
            pairing,
        });
    }
    let negative: Vec<usize> = (0..ku.len()).filter(|&i| pair(&[i]) < 0).collect();
    let mut rng = crate::seeded_rng(budget.seed);
    let mut cur = Vec::new();
    let mut sources = Vec::new();
    let k = negative.len();
    multisets(k, budget.mult_bound, 0, &mut cur, &mut |s: &[usize]| {
        sources.push(s.iter().map(|&i| negative[i]).collect::<Vec<_>>())
    });
    for source in sources {
        let y = ku.sum(&source);
        let h = y.hom_k(&x);
        if h.dim() == 0 {
            continue;
        }
        candidates += 1;
        let mut trials: Vec<ChainMap> = h.basis.clone();
        let ones = vec![alg.field().one(); h.dim()];
        trials.push(h.combine(alg, &ones));
        for _ in 0..budget.samples {
            let c: Vec<Scalar> = (0..h.dim()).map(|_| crate::random_scalar(alg.field(), &mut rng)).collect();
            trials.push(h.combine(alg, &c));
        }
        if let Some(map) = trials.into_iter().find(|f| y.is_inflation(f)) {
            let pairing = pair(&source);
            return Ok(NumericalVerdict::Refuted {
                source,
                map: Some(map),
                pairing,
            });
        }
    }
    Ok(NumericalVerdict::WithinBudget { budget, candidates })
}

fn subsets(items: &[usize], start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    f(cur);
    for i in start..items.len() {
        cur.push(items[i]);
        subsets(items, i + 1, cur, f);
        cur.pop();
    }
}

/// A pair `(X, M)` where `M`-semistability holds but a numerical refutation was found.
#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub complex: String,
    pub module: String,
    pub witness: Vec<String>,
    pub pairing: i64,
}

/// `M`-semistable implies numerically `[M]`-semistable; returns a violation if the
/// search ever contradicts it.
pub fn check_m_implies_numerical(
    x: &Complex,
    m: &Module,
    ku: &KUniverse,
    budget: NumericalBudget,
) -> Result<Option<Violation>> {
    if !is_m_semistable(x, m) {
        return Ok(None);
    }
    match is_numerically_semistable(x, &dim_weight(m), ku, budget)? {
        NumericalVerdict::Refuted { source, pairing, .. } => Ok(Some(Violation {
            complex: x.display(),
            module: format!("{:?}", m.dims()),
            witness: source.iter().map(|&i| ku.name(i).to_string()).collect(),
            pairing,
        })),
        _ => Ok(None),
    }
}
