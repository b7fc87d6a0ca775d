//! Minimal representatives, cones, cocones and conflations in `K_Λ`.
//!
//! All reductions are Gaussian elimination over Λ: a differential entry with a
//! non-zero idempotent coefficient is a local unit, and the summand `P --u--> P` it
//! spans is split off.

use std::sync::Arc;

use super::{ChainMap, Complex};
use crate::algebra::{Algebra, Elem, ProjMap};

/// A conflation `left ↣ middle ↠ right`.
#[derive(Clone, Debug)]
pub struct Conflation {
    pub left: Complex,
    pub middle: Complex,
    pub right: Complex,
}

fn sub_entry(alg: &Algebra, m: &mut ProjMap, r: usize, c: usize, v: &Elem) {
    let e = alg.elem_sub(m.get(r, c), v);
    m.set(r, c, e);
}

fn add_entry(alg: &Algebra, m: &mut ProjMap, r: usize, c: usize, v: &Elem) {
    let e = alg.elem_add(m.get(r, c), v);
    m.set(r, c, e);
}

/// `row dst -= λ · row src`.
fn row_sub(alg: &Algebra, m: &mut ProjMap, dst: usize, src: usize, l: &Elem) {
    for c in 0..m.cols() {
        let v = alg.elem_mul(l, m.get(src, c));
        if !v.is_zero() {
            sub_entry(alg, m, dst, c, &v);
        }
    }
}

/// `row dst += λ · row src`.
fn row_add(alg: &Algebra, m: &mut ProjMap, dst: usize, src: usize, l: &Elem) {
    for c in 0..m.cols() {
        let v = alg.elem_mul(l, m.get(src, c));
        if !v.is_zero() {
            add_entry(alg, m, dst, c, &v);
        }
    }
}

/// `col dst -= col src · μ`.
fn col_sub(alg: &Algebra, m: &mut ProjMap, dst: usize, src: usize, mu: &Elem) {
    for r in 0..m.rows() {
        let v = alg.elem_mul(m.get(r, src), mu);
        if !v.is_zero() {
            sub_entry(alg, m, r, dst, &v);
        }
    }
}

/// `col dst += col src · μ`.
fn col_add(alg: &Algebra, m: &mut ProjMap, dst: usize, src: usize, mu: &Elem) {
    for r in 0..m.rows() {
        let v = alg.elem_mul(m.get(r, src), mu);
        if !v.is_zero() {
            add_entry(alg, m, r, dst, &v);
        }
    }
}

/// First entry of `m` that is a local unit.
fn unit_pivot(alg: &Algebra, m: &ProjMap) -> Option<(usize, usize)> {
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            if m.src[r] == m.tgt[c] && !alg.elem_unit_coeff(m.get(r, c), m.src[r]).is_zero() {
                return Some((r, c));
            }
        }
    }
    None
}

fn without(n: usize, k: usize) -> Vec<usize> {
    (0..n).filter(|&i| i != k).collect()
}

impl Complex {
    /// Minimal representative: all differential entries in the radical.
    pub fn minimize(&self) -> Complex {
        self.minimize_with_maps().0
    }

    /// Minimal representative with mutually inverse homotopy equivalences
    /// `X -> X_min` and `X_min -> X`.
    pub fn minimize_with_maps(&self) -> (Complex, ChainMap, ChainMap) {
        let alg: &Arc<Algebra> = &self.alg;
        let mut d = self.d.clone();
        let mut to = self.identity();
        let mut from = self.identity();
        while let Some((r, c)) = unit_pivot(alg, &d) {
            let v = d.src[r];
            let ainv = alg.elem_local_inverse(d.get(r, c), v).expect("unit pivot");
            let (ns, nt) = (d.rows(), d.cols());
            let mut rmat = ProjMap::identity(alg, &d.src);
            let mut rinv = rmat.clone();
            let mut cmat = ProjMap::identity(alg, &d.tgt);
            let mut cinv = cmat.clone();
            for r2 in 0..ns {
                if r2 == r || d.get(r2, c).is_zero() {
                    continue;
                }
                let l = alg.elem_mul(d.get(r2, c), &ainv);
                row_sub(alg, &mut d, r2, r, &l);
                row_sub(alg, &mut rmat, r2, r, &l);
                col_add(alg, &mut rinv, r, r2, &l);
            }
            for c2 in 0..nt {
                if c2 == c || d.get(r, c2).is_zero() {
                    continue;
                }
                let mu = alg.elem_mul(&ainv, d.get(r, c2));
                col_sub(alg, &mut d, c2, c, &mu);
                col_sub(alg, &mut cmat, c2, c, &mu);
                row_add(alg, &mut cinv, c, c2, &mu);
            }
            let (kr, kc) = (without(ns, r), without(nt, c));
            let all_r: Vec<usize> = (0..ns).collect();
            let all_c: Vec<usize> = (0..nt).collect();
            let step_to = ChainMap {
                f1: rinv.select(&all_r, &kr),
                f0: cmat.select(&all_c, &kc),
            };
            let step_from = ChainMap {
                f1: rmat.select(&kr, &all_r),
                f0: cinv.select(&kc, &all_c),
            };
            to = to.then(alg, &step_to);
            from = step_from.then(alg, &from);
            d = d.select(&kr, &kc);
        }
        let min = Complex { alg: alg.clone(), d };
        (min, to, from)
    }

    /// Whether `f: self -> y` is an inflation: `[-x | f1]` is a split monomorphism.
    pub fn is_inflation(&self, f: &ChainMap) -> bool {
        let d2 = self.d.scale(&self.alg, &self.alg.field().from_i64(-1)).hcat(&self.alg, &f.f1);
        let top = d2.top(&self.alg);
        top.rank() == top.rows()
    }

    /// Whether `g: self -> z` is a deflation: `[g0 ; z]` is a split epimorphism.
    pub fn is_deflation(&self, g: &ChainMap, z: &Complex) -> bool {
        let d1 = g.f0.vcat(&self.alg, &z.d);
        let top = d1.top(&self.alg);
        top.rank() == top.cols()
    }

    /// Mapping cone of `f: self -> y`, if it lies in `K^{[-1,0]}`; minimized.
    pub fn cone(&self, f: &ChainMap, y: &Complex) -> Option<Complex> {
        let alg: &Algebra = &self.alg;
        let neg = alg.field().from_i64(-1);
        let mut d2 = self.d.scale(alg, &neg).hcat(alg, &f.f1);
        let mut d1 = f.f0.vcat(alg, &y.d);
        while let Some((r, c)) = unit_pivot(alg, &d2) {
            let ainv = alg.elem_local_inverse(d2.get(r, c), d2.src[r]).unwrap();
            for r2 in 0..d2.rows() {
                if r2 != r && !d2.get(r2, c).is_zero() {
                    let l = alg.elem_mul(d2.get(r2, c), &ainv);
                    row_sub(alg, &mut d2, r2, r, &l);
                }
            }
            for c2 in 0..d2.cols() {
                if c2 != c && !d2.get(r, c2).is_zero() {
                    let mu = alg.elem_mul(&ainv, d2.get(r, c2));
                    col_sub(alg, &mut d2, c2, c, &mu);
                    row_add(alg, &mut d1, c, c2, &mu);
                }
            }
            debug_assert!((0..d1.cols()).all(|k| d1.get(c, k).is_zero()));
            let kr = without(d2.rows(), r);
            let kc = without(d2.cols(), c);
            let all1: Vec<usize> = (0..d1.cols()).collect();
            d2 = d2.select(&kr, &kc);
            d1 = d1.select(&kc, &all1);
        }
        if d2.rows() > 0 {
            return None;
        }
        Some(Complex { alg: self.alg.clone(), d: d1 }.minimize())
    }

    /// Mapping cocone of `g: self -> z`, if it lies in `K^{[-1,0]}`; minimized.
    pub fn cocone(&self, g: &ChainMap, z: &Complex) -> Option<Complex> {
        let alg: &Algebra = &self.alg;
        let neg = alg.field().from_i64(-1);
        let mut da = self.d.scale(alg, &neg).hcat(alg, &g.f1);
        let mut db = g.f0.vcat(alg, &z.d);
        while let Some((r, c)) = unit_pivot(alg, &db) {
            let ainv = alg.elem_local_inverse(db.get(r, c), db.src[r]).unwrap();
            for c2 in 0..db.cols() {
                if c2 != c && !db.get(r, c2).is_zero() {
                    let mu = alg.elem_mul(&ainv, db.get(r, c2));
                    col_sub(alg, &mut db, c2, c, &mu);
                }
            }
            for r2 in 0..db.rows() {
                if r2 != r && !db.get(r2, c).is_zero() {
                    let l = alg.elem_mul(db.get(r2, c), &ainv);
                    row_sub(alg, &mut db, r2, r, &l);
                    col_add(alg, &mut da, r, r2, &l);
                }
            }
            debug_assert!((0..da.rows()).all(|k| da.get(k, r).is_zero()));
            let kr = without(db.rows(), r);
            let kc = without(db.cols(), c);
            let alla: Vec<usize> = (0..da.rows()).collect();
            db = db.select(&kr, &kc);
            da = da.select(&alla, &kr);
        }
        if db.cols() > 0 {
            return None;
        }
        Some(Complex { alg: self.alg.clone(), d: da }.minimize())
    }

    /// Middle term of the conflation `x ↣ Y ↠ self` classified by `e ∈ E(self, x)`.
    pub fn extension_middle(&self, x: &Complex, e: &ProjMap) -> Complex {
        let alg: &Algebra = &self.alg;
        let top = x.d.hcat(alg, &ProjMap::zero(alg, x.src(), self.tgt()));
        let bottom = e.hcat(alg, &self.d);
        Complex {
            alg: self.alg.clone(),
            d: top.vcat(alg, &bottom),
        }
        .minimize()
    }

    /// The conflation `self ↣ y ↠ cone(f)`, when `f` is an inflation.
    pub fn conflation_from(&self, f: &ChainMap, y: &Complex) -> Option<Conflation> {
        let right = self.cone(f, y)?;
        Some(Conflation {
            left: self.clone(),
            middle: y.clone(),
            right,
        })
    }
}
