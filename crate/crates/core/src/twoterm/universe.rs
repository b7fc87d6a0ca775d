//! Indecomposable objects of `K_Λ` and identification of arbitrary complexes.
//!
//! Every minimal 2-term complex is `pres(H⁰X) ⊕ P[1]`, so the indecomposables are the
//! minimal presentations of indecomposable modules together with the shifts `P_i[1]`.

use std::sync::Arc;

use super::Complex;
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::rep::{EnumerationOptions, ModuleUniverse};

/// Where an indecomposable complex comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComplexKind {
    /// Minimal presentation of the module with this universe index.
    Presentation(usize),
    /// `P_v[1]`.
    Shift(usize),
}

#[derive(Clone, Debug)]
pub struct KUniverse {
    modules: ModuleUniverse,
    complexes: Vec<Complex>,
    kinds: Vec<ComplexKind>,
    names: Vec<String>,
    by_module: Vec<usize>,
}

impl Complex {
    /// Indecomposable summands: presentations of the summands of `H⁰` plus shifted
    /// projectives read off from the g-vector. The flag reports certification.
    pub fn decompose(&self) -> (Vec<Complex>, bool) {
        let m = self.minimize();
        let dec = m.h0().decompose();
        let mut parts: Vec<Complex> = dec.summands.iter().map(Complex::presentation_of).collect();
        let g = m.g_vector();
        let mut acc = vec![0i64; g.len()];
        for p in &parts {
            for (a, b) in acc.iter_mut().zip(p.g_vector()) {
                *a += b;
            }
        }
        for (v, (a, b)) in acc.iter().zip(&g).enumerate() {
            for _ in 0..(a - b).max(0) {
                parts.push(Complex::shifted(&self.alg, &[v]));
            }
        }
        (parts, dec.certified)
    }
}

impl KUniverse {
    pub fn new(modules: ModuleUniverse) -> KUniverse {
        let alg = modules.algebra().clone();
        let mut complexes = Vec::new();
        let mut kinds = Vec::new();
        let mut names = Vec::new();
        let mut by_module = Vec::new();
        for (i, m) in modules.modules().iter().enumerate() {
            let c = Complex::presentation_of(m);
            let name = if c.src().is_empty() && c.tgt().len() == 1 {
                format!("P{}", alg.label(c.tgt()[0]))
            } else {
                format!("pres({})", modules.name(i))
            };
            by_module.push(complexes.len());
            complexes.push(c);
            kinds.push(ComplexKind::Presentation(i));
            names.push(name);
        }
        for v in 0..alg.num_vertices() {
            complexes.push(Complex::shifted(&alg, &[v]));
            kinds.push(ComplexKind::Shift(v));
            names.push(format!("P{}[1]", alg.label(v)));
        }
        KUniverse {
            modules,
            complexes,
            kinds,
            names,
            by_module,
        }
    }

    pub fn build(alg: &Arc<Algebra>, opts: &EnumerationOptions) -> Result<KUniverse> {
        Ok(KUniverse::new(ModuleUniverse::enumerate(alg, opts)?))
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        self.modules.algebra()
    }

    pub fn modules(&self) -> &ModuleUniverse {
        &self.modules
    }

    pub fn len(&self) -> usize {
        self.complexes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.complexes.is_empty()
    }

    pub fn get(&self, i: usize) -> &Complex {
        &self.complexes[i]
    }

    pub fn complexes(&self) -> &[Complex] {
        &self.complexes
    }

    pub fn kind(&self, i: usize) -> ComplexKind {
        self.kinds[i]
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_complete(&self) -> bool {
        self.modules.is_complete()
    }

    /// Complex index of the presentation of module `i`.
    pub fn of_module(&self, i: usize) -> usize {
        self.by_module[i]
    }

    /// Module index of `H⁰` of complex `i` (None for shifts).
    pub fn h0_index(&self, i: usize) -> Option<usize> {
        match self.kinds[i] {
            ComplexKind::Presentation(m) => Some(m),
            ComplexKind::Shift(_) => None,
        }
    }

    /// Multiplicity of each member as a summand of `x`.
    pub fn multiplicities(&self, x: &Complex) -> Result<Vec<usize>> {
        let m = x.minimize();
        let mods = self.modules.multiplicities(&m.h0())?;
        let mut out = vec![0; self.len()];
        let mut acc = vec![0i64; self.algebra().num_vertices()];
        for (i, &k) in mods.iter().enumerate() {
            let c = self.by_module[i];
            out[c] = k;
            for (a, b) in acc.iter_mut().zip(self.complexes[c].g_vector()) {
                *a += b * k as i64;
            }
        }
        let offset = self.modules.len();
        for (v, (a, b)) in acc.iter().zip(m.g_vector()).enumerate() {
            if a < &b {
                return Err(Error::Inconsistency("g-vector not matched by H⁰ summands".into()));
            }
            out[offset + v] = (a - b) as usize;
        }
        Ok(out)
    }

    /// Indices with repetition of the indecomposable summands of `x`.
    pub fn identify(&self, x: &Complex) -> Result<Vec<usize>> {
        Ok(self
            .multiplicities(x)?
            .into_iter()
            .enumerate()
            .flat_map(|(i, k)| std::iter::repeat_n(i, k))
            .collect())
    }

    /// Direct sum of the listed members.
    pub fn sum(&self, ids: &[usize]) -> Complex {
        let parts: Vec<&Complex> = ids.iter().map(|&i| &self.complexes[i]).collect();
        Complex::direct_sum_all(self.algebra(), &parts)
    }

    pub fn display_set(&self, ids: &[usize]) -> String {
        if ids.is_empty() {
            return "{0}".into();
        }
        format!(
            "{{{}}}",
            ids.iter().map(|&i| self.names[i].as_str()).collect::<Vec<_>>().join(", ")
        )
    }
}
