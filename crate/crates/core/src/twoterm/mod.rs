//! The category `K_Λ` of 2-term complexes `X⁻¹ -> X⁰` of projectives, up to homotopy.
//!
//! A complex stores the vertices of its projective summands in each degree and the
//! differential as a [`ProjMap`]. Chain maps `f: X -> Y` are pairs `(f1, f0)` with
//! `x·f0 = f1·y` (composition written left to right).

mod cone;
mod hom;
mod json;
mod universe;

use std::sync::Arc;

pub use cone::Conflation;
pub use hom::{ESpace, HomK};
pub use json::{ComplexJson, DifferentialEntryJson};
pub use universe::{ComplexKind, KUniverse};

use crate::algebra::{Algebra, ComplexDecl, ProjMap};
use crate::error::{Error, Result};
use crate::rep::{nakayama, projmap_to_morphism, Module};

/// An object `X⁻¹ -> X⁰` of `K^{[-1,0]}(proj Λ)`.
#[derive(Clone, Debug)]
pub struct Complex {
    alg: Arc<Algebra>,
    d: ProjMap,
}

impl PartialEq for Complex {
    fn eq(&self, o: &Complex) -> bool {
        self.d == o.d
    }
}

impl Eq for Complex {}

/// A chain map `(f1: X⁻¹ -> Y⁻¹, f0: X⁰ -> Y⁰)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChainMap {
    pub f1: ProjMap,
    pub f0: ProjMap,
}

impl Complex {
    pub fn new(alg: &Arc<Algebra>, d: ProjMap) -> Result<Complex> {
        if !d.is_well_formed(alg) {
            return Err(Error::InvalidComplex("differential entries must run between the declared summands".into()));
        }
        Ok(Complex { alg: alg.clone(), d })
    }

    pub fn from_decl(alg: &Arc<Algebra>, decl: &ComplexDecl) -> Result<Complex> {
        let f = alg.field();
        let mut d = ProjMap::zero(alg, &decl.src, &decl.tgt);
        for (r, row) in decl.entries.iter().enumerate() {
            for (c, terms) in row.iter().enumerate() {
                let terms = terms
                    .iter()
                    .map(|(q, p)| Ok((f.from_rational(q)?, p.clone())))
                    .collect::<Result<Vec<_>>>()?;
                d.set(r, c, alg.elem_from_terms(&terms));
            }
        }
        Complex::new(alg, d)
    }

    pub fn zero(alg: &Arc<Algebra>) -> Complex {
        Complex {
            alg: alg.clone(),
            d: ProjMap::zero(alg, &[], &[]),
        }
    }

    /// The stalk complex `0 -> ⊕P_v` in degree 0.
    pub fn stalk(alg: &Arc<Algebra>, vs: &[usize]) -> Complex {
        Complex {
            alg: alg.clone(),
            d: ProjMap::zero(alg, &[], vs),
        }
    }

    /// The shifted stalk `⊕P_v -> 0`.
    pub fn shifted(alg: &Arc<Algebra>, vs: &[usize]) -> Complex {
        Complex {
            alg: alg.clone(),
            d: ProjMap::zero(alg, vs, &[]),
        }
    }

    /// `Λ` as a stalk complex.
    pub fn regular(alg: &Arc<Algebra>) -> Complex {
        Complex::stalk(alg, &(0..alg.num_vertices()).collect::<Vec<_>>())
    }

    /// `Λ[1]`.
    pub fn regular_shifted(alg: &Arc<Algebra>) -> Complex {
        Complex::shifted(alg, &(0..alg.num_vertices()).collect::<Vec<_>>())
    }

    /// Minimal projective presentation of a module.
    pub fn presentation_of(m: &Module) -> Complex {
        let p = m.presentation();
        Complex {
            alg: m.algebra().clone(),
            d: p.map,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn differential(&self) -> &ProjMap {
        &self.d
    }

    /// Vertices of the summands of `X⁻¹`.
    pub fn src(&self) -> &[usize] {
        &self.d.src
    }

    /// Vertices of the summands of `X⁰`.
    pub fn tgt(&self) -> &[usize] {
        &self.d.tgt
    }

    pub fn is_zero(&self) -> bool {
        self.d.src.is_empty() && self.d.tgt.is_empty()
    }

    /// Multiplicities of `P_i` in degree −1.
    pub fn mult_m1(&self) -> Vec<usize> {
        counts(self.alg.num_vertices(), &self.d.src)
    }

    /// Multiplicities of `P_i` in degree 0.
    pub fn mult_0(&self) -> Vec<usize> {
        counts(self.alg.num_vertices(), &self.d.tgt)
    }

    /// `[X] = [X⁰] - [X⁻¹]` in `K₀(proj Λ)`.
    pub fn g_vector(&self) -> Vec<i64> {
        self.mult_0()
            .iter()
            .zip(self.mult_m1())
            .map(|(&a, b)| a as i64 - b as i64)
            .collect()
    }

    /// True when all differential entries lie in the radical.
    pub fn is_minimal(&self) -> bool {
        self.d.is_radical(&self.alg)
    }

    pub fn direct_sum(&self, o: &Complex) -> Complex {
        Complex {
            alg: self.alg.clone(),
            d: self.d.direct_sum(&self.alg, &o.d),
        }
    }

    pub fn direct_sum_all(alg: &Arc<Algebra>, parts: &[&Complex]) -> Complex {
        parts.iter().fold(Complex::zero(alg), |acc, c| acc.direct_sum(c))
    }

    /// `H⁰(X) = coker x`.
    pub fn h0(&self) -> Module {
        let f = projmap_to_morphism(&self.alg, &self.d);
        let tgt = Module::projective_sum(&self.alg, &self.d.tgt);
        f.cokernel(&tgt).0
    }

    /// `H⁻¹(X) = ker x`.
    pub fn h_minus1(&self) -> Module {
        let f = projmap_to_morphism(&self.alg, &self.d);
        let src = Module::projective_sum(&self.alg, &self.d.src);
        f.kernel(&src).0
    }

    /// `H⁻¹(νX) = ker νx`.
    pub fn h_minus1_nu(&self) -> Module {
        let f = nakayama(&self.alg, &self.d);
        let src = Module::injective_sum(&self.alg, &self.d.src);
        f.kernel(&src).0
    }

    pub fn identity(&self) -> ChainMap {
        ChainMap {
            f1: ProjMap::identity(&self.alg, &self.d.src),
            f0: ProjMap::identity(&self.alg, &self.d.tgt),
        }
    }

    pub fn zero_map(&self, to: &Complex) -> ChainMap {
        ChainMap {
            f1: ProjMap::zero(&self.alg, &self.d.src, &to.d.src),
            f0: ProjMap::zero(&self.alg, &self.d.tgt, &to.d.tgt),
        }
    }

    /// Whether `f` satisfies the chain-map condition `x·f0 = f1·y`.
    pub fn is_chain_map(&self, f: &ChainMap, to: &Complex) -> bool {
        let a = &self.alg;
        self.d.then(a, &f.f0) == f.f1.then(a, &to.d)
    }

    /// Text form, e.g. `P1 -> P2 : [[a]]`.
    pub fn display(&self) -> String {
        let obj = |vs: &[usize]| {
            if vs.is_empty() {
                "0".to_string()
            } else {
                vs.iter().map(|&v| format!("P{}", self.alg.label(v))).collect::<Vec<_>>().join(" + ")
            }
        };
        let mut s = format!("{} -> {}", obj(&self.d.src), obj(&self.d.tgt));
        if !self.d.src.is_empty() && !self.d.tgt.is_empty() {
            s.push_str(" : ");
            s.push_str(&self.d.display(&self.alg));
        }
        s
    }
}

impl ChainMap {
    /// `self` followed by `g`.
    pub fn then(&self, alg: &Algebra, g: &ChainMap) -> ChainMap {
        ChainMap {
            f1: self.f1.then(alg, &g.f1),
            f0: self.f0.then(alg, &g.f0),
        }
    }

    pub fn add(&self, alg: &Algebra, o: &ChainMap) -> ChainMap {
        ChainMap {
            f1: self.f1.add(alg, &o.f1),
            f0: self.f0.add(alg, &o.f0),
        }
    }

    pub fn scale(&self, alg: &Algebra, s: &crate::Scalar) -> ChainMap {
        ChainMap {
            f1: self.f1.scale(alg, s),
            f0: self.f0.scale(alg, s),
        }
    }

    /// Flattened coordinates: `f1` then `f0`.
    pub fn to_coords(&self, alg: &Algebra) -> Vec<crate::Scalar> {
        let mut v = self.f1.to_coords(alg);
        v.extend(self.f0.to_coords(alg));
        v
    }
}

fn counts(n: usize, vs: &[usize]) -> Vec<usize> {
    let mut out = vec![0; n];
    for &v in vs {
        out[v] += 1;
    }
    out
}

/// `⟨g, d⟩ = Σ g_i d_i`, the Euler pairing of `K₀(proj Λ)` with `K₀(mod Λ)`.
pub fn euler_pairing(g: &[i64], d: &[i64]) -> i64 {
    g.iter().zip(d).map(|(a, b)| a * b).sum()
}

/// A dimension vector as a signed weight.
pub fn dim_weight(m: &Module) -> Vec<i64> {
    m.dims().iter().map(|&d| d as i64).collect()
}
