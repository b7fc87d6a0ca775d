//! Cotorsion pairs, torsion pairs, thick and wide subcategories, and the maps
//! between them.
//!
//! Subcategories are sets of indecomposables of a finite universe: complexes of
//! `K_Λ` on one side, modules on the other. Every closure axiom becomes a scan of
//! the precomputed conflation tables, so verdicts are exact when both universes are
//! complete and the tables exhaustive.

mod modules;
mod table;

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

pub use modules::{ModExtension, ModRecords};
pub use table::{CorrespondenceRow, DiagramEdge, DiagramReport};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::rep::EnumerationOptions;
use crate::silting::{Members, Records};
use crate::twoterm::{Complex, KUniverse};

/// `(𝒳, 𝒴)` in `K_Λ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CotorsionPair {
    pub x: Members,
    pub y: Members,
}

/// `(𝒯, ℱ)` in `mod Λ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct TorsionPair {
    pub t: BTreeSet<usize>,
    pub f: BTreeSet<usize>,
}

/// Both universes with their conflation tables.
#[derive(Clone, Debug)]
pub struct Corr {
    pub k: Records,
    pub m: ModRecords,
}

impl Corr {
    pub fn build(alg: &Arc<Algebra>, opts: &EnumerationOptions, seed: u64) -> Result<Corr> {
        let ku = KUniverse::build(alg, opts)?;
        Corr::from_universe(ku, seed)
    }

    pub fn from_universe(ku: KUniverse, seed: u64) -> Result<Corr> {
        let m = ModRecords::build(ku.modules().clone(), seed)?;
        let k = Records::build(ku, seed)?;
        Ok(Corr { k, m })
    }

    pub fn universe(&self) -> &KUniverse {
        &self.k.universe
    }

    /// Both universes complete and all tables exhaustive.
    pub fn is_complete(&self) -> bool {
        self.k.is_complete() && self.m.exhaustive
    }

    fn require_complete(&self, what: &str) -> Result<()> {
        if self.k.universe.is_complete() {
            Ok(())
        } else {
            Err(Error::Incomplete(what.into()))
        }
    }

    /// Complex names of a member set.
    pub fn names(&self, s: &Members) -> Vec<String> {
        s.iter().map(|&i| self.k.universe.name(i).to_string()).collect()
    }

    /// Module names of a member set.
    pub fn module_names(&self, s: &BTreeSet<usize>) -> Vec<String> {
        s.iter().map(|&i| self.m.universe.name(i).to_string()).collect()
    }

    pub fn display_modules(&self, s: &BTreeSet<usize>) -> String {
        if s.is_empty() {
            return "{0}".into();
        }
        format!("{{{}}}", self.module_names(s).join(", "))
    }

    // ---- predicates on K_Λ ----

    pub fn is_thick(&self, s: &Members) -> bool {
        self.k.closed_under_cones(s) && self.k.closed_under_cocones(s) && self.k.closed_under_extensions(s)
    }

    pub fn is_extension_closed(&self, s: &Members) -> bool {
        self.k.closed_under_extensions(s)
    }

    /// Contains every `P_i`, closed under extensions and cocones.
    ///
    /// `K = Cone(K, 𝒳)` is equivalent to `Λ ⊆ 𝒳`: each `Z` is the cone of
    /// `Z⁻¹ ↣ Z⁰`, and a deflation onto a projective splits.
    pub fn is_resolving(&self, s: &Members) -> bool {
        self.stalks().is_subset(s) && self.k.closed_under_extensions(s) && self.k.closed_under_cocones(s)
    }

    /// Universe ids of the stalks `0 -> P_i`.
    pub fn stalks(&self) -> Members {
        let ku = &self.k.universe;
        (0..ku.len())
            .filter(|&i| ku.get(i).src().is_empty() && ku.get(i).tgt().len() == 1)
            .collect()
    }

    /// Injective objects of the extriangulated subcategory `t`.
    pub fn injectives_of(&self, t: &Members) -> Members {
        t.iter()
            .copied()
            .filter(|&i| t.iter().all(|&x| self.k.ext[x][i].dim() == 0))
            .collect()
    }

    /// For thick `t`: some presilting, cone-closed `𝒰` has `thick(𝒰) = t`. The
    /// only candidate that needs testing is `𝒰 = inj t`.
    pub fn has_enough_injectives(&self, t: &Members) -> bool {
        let u = self.injectives_of(t);
        self.k.is_presilting(&u) && self.k.closed_under_cones(&u) && self.k.thick_closure(&u) == *t
    }

    /// The definition: each member of `t` inflates into `add(inj t)`.
    pub fn has_enough_injectives_by_inflations(&self, t: &Members) -> bool {
        let inj = self.injectives_of(t);
        t.iter().all(|&x| self.k.has_inflation_into(x, &inj))
    }

    pub fn is_cotorsion_pair(&self, c: &CotorsionPair) -> bool {
        c.y == self.k.ext_right_perp(&c.x) && c.x == self.k.ext_left_perp(&c.y)
    }

    /// Every indecomposable `Z` sits in conflations `Y ↣ X ↠ Z` and `Z ↣ Y' ↠ X'`,
    /// tested on the minimal approximations.
    pub fn is_complete_cotorsion_pair(&self, c: &CotorsionPair) -> bool {
        if !self.is_cotorsion_pair(c) {
            return false;
        }
        let ku = &self.k.universe;
        (0..ku.len()).all(|z| {
            let right = self
                .k
                .min_right_approx(ku.get(z), &c.x)
                .is_ok_and(|a| a.third_ids.iter().all(|i| c.y.contains(i)));
            let left = self
                .k
                .min_left_approx(ku.get(z), &c.y)
                .is_ok_and(|a| a.third_ids.iter().all(|i| c.x.contains(i)));
            right && left
        })
    }

    // ---- maps ----

    /// Module ids of `H⁰` of the members.
    pub fn h0(&self, s: &Members) -> BTreeSet<usize> {
        s.iter().filter_map(|&i| self.k.universe.h0_index(i)).collect()
    }

    /// `Φ(𝒳, 𝒴) = (H⁰(𝒴), H⁰(𝒴)^⊥)`.
    pub fn phi(&self, c: &CotorsionPair) -> TorsionPair {
        let t = self.h0(&c.y);
        TorsionPair {
            f: self.m.right_perp(&t),
            t,
        }
    }

    /// `Θ(𝒯, ℱ) = (^{⊥₁}𝒵, 𝒵)` with `𝒵 = (H⁰)^{-1}(𝒯)`.
    pub fn theta_map(&self, t: &TorsionPair) -> CotorsionPair {
        let ku = &self.k.universe;
        let z: Members = (0..ku.len())
            .filter(|&i| ku.h0_index(i).is_none_or(|m| t.t.contains(&m)))
            .collect();
        CotorsionPair {
            x: self.k.ext_left_perp(&z),
            y: z,
        }
    }

    /// `Ξ(U) = (add(U)^∨, add(U)^∧)`.
    pub fn xi(&self, u: &Members) -> CotorsionPair {
        CotorsionPair {
            x: self.k.closure_vee(u),
            y: self.k.closure_wedge(u),
        }
    }

    /// `Ψ(𝒳, 𝒴)`: the basic generator of `𝒳 ∩ 𝒴`, which must be silting.
    pub fn psi(&self, c: &CotorsionPair) -> Result<Members> {
        let u: Members = c.x.intersection(&c.y).copied().collect();
        if !self.k.is_silting(&u)? {
            return Err(Error::Inconsistency(format!("{} is not silting", self.k.display(&u))));
        }
        Ok(u)
    }

    /// `β(𝒳)`: members `X` such that every conflation `X ↣ X' ↠ X''` with
    /// `X' ∈ 𝒳` has `X'' ∈ 𝒳`.
    pub fn beta_map(&self, x: &Members) -> Members {
        x.iter()
            .copied()
            .filter(|&s| {
                self.k
                    .cones
                    .iter()
                    .filter(|r| r.source == s && r.middle.iter().all(|m| x.contains(m)))
                    .all(|r| r.result.iter().all(|m| x.contains(m)))
            })
            .collect()
    }

    /// `ι(𝒞)`: objects admitting an inflation into `add 𝒞`.
    pub fn iota_map(&self, c: &Members) -> Members {
        (0..self.k.len()).filter(|&x| self.k.has_inflation_into(x, c)).collect()
    }

    /// `α(𝒯)`, the wide subcategory attached to a torsion class.
    pub fn alpha_map(&self, t: &BTreeSet<usize>) -> BTreeSet<usize> {
        self.m.alpha(t)
    }

    /// `ϑ(M) = (Fac M, M^⊥)`.
    pub fn vartheta(&self, m: &BTreeSet<usize>) -> TorsionPair {
        TorsionPair {
            t: self.m.fac(m),
            f: self.m.right_perp(m),
        }
    }

    /// `thick(U_ρ)`.
    pub fn thick_of_rho(&self, u: &Members) -> Result<Members> {
        let (_, rho) = self.k.split_lambda_rho(u)?;
        Ok(self.k.thick_closure(&rho))
    }

    /// `𝒲` of a set of universe complexes.
    pub fn script_w(&self, c: &Members) -> BTreeSet<usize> {
        let xs: Vec<&Complex> = c.iter().map(|&i| self.k.universe.get(i)).collect();
        crate::stability::script_w(&xs, &self.m.universe).into_iter().collect()
    }

    /// `𝒯` of a set of universe modules.
    pub fn script_t(&self, h: &BTreeSet<usize>) -> Members {
        let ms: Vec<&crate::rep::Module> = h.iter().map(|&i| self.m.universe.get(i)).collect();
        crate::stability::script_t(&ms, &self.k.universe).into_iter().collect()
    }

    // ---- enumerations ----

    fn subsets_guard(&self) -> Result<()> {
        self.require_complete("subcategory enumeration")?;
        if self.k.len() > 20 {
            return Err(Error::Refused(format!("{} indecomposables is too many to enumerate subsets", self.k.len())));
        }
        Ok(())
    }

    fn all_subsets(&self) -> impl Iterator<Item = Members> + '_ {
        let n = self.k.len();
        (0u64..1 << n).map(move |mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
    }

    pub fn thick_subcategories(&self) -> Result<Vec<Members>> {
        self.subsets_guard()?;
        Ok(self.all_subsets().filter(|s| self.is_thick(s)).collect())
    }

    pub fn thick_with_enough_injectives(&self) -> Result<Vec<Members>> {
        Ok(self
            .thick_subcategories()?
            .into_iter()
            .filter(|t| self.has_enough_injectives(t))
            .collect())
    }

    pub fn cotorsion_pairs(&self) -> Result<Vec<CotorsionPair>> {
        self.subsets_guard()?;
        let mut out: Vec<CotorsionPair> = self
            .all_subsets()
            .filter_map(|x| {
                let y = self.k.ext_right_perp(&x);
                (self.k.ext_left_perp(&y) == x).then_some(CotorsionPair { x, y })
            })
            .collect();
        out.sort();
        Ok(out)
    }

    pub fn complete_cotorsion_pairs(&self) -> Result<Vec<CotorsionPair>> {
        Ok(self
            .cotorsion_pairs()?
            .into_iter()
            .filter(|c| self.is_complete_cotorsion_pair(c))
            .collect())
    }

    pub fn resolving_subcategories(&self) -> Result<Vec<Members>> {
        self.subsets_guard()?;
        Ok(self.all_subsets().filter(|s| self.is_resolving(s)).collect())
    }
}
