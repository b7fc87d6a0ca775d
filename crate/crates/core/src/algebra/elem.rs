//! Elements of Λ and matrices over Λ describing maps between projectives.
//!
//! A map `⊕ P_{s_r} -> ⊕ P_{t_c}` is a matrix whose entry `(r, c)` lies in
//! `e_{s_r} Λ e_{t_c}` (paths from `s_r` to `t_c`). Row convention: the composite
//! `P -> Q -> R` of `F` then `G` is the product `F·G`.

use crate::field::Scalar;
use crate::matrix::Matrix;

use super::{Algebra, Path};

/// An element of Λ in basis coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Elem(pub Vec<Scalar>);

impl Elem {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

impl Algebra {
    pub fn elem_zero(&self) -> Elem {
        Elem(vec![self.field().zero(); self.dim()])
    }

    pub fn elem_basis(&self, i: usize) -> Elem {
        let mut e = self.elem_zero();
        e.0[i] = self.field().one();
        e
    }

    /// The idempotent `e_v`.
    pub fn elem_unit(&self, v: usize) -> Elem {
        self.elem_basis(self.idempotent(v))
    }

    pub fn elem_from_path(&self, p: &Path) -> Elem {
        let mut e = self.elem_zero();
        for (i, c) in self.reduce_path(p) {
            e.0[i] = e.0[i].add_ref(&c);
        }
        e
    }

    pub fn elem_from_terms(&self, terms: &[(Scalar, Path)]) -> Elem {
        let mut e = self.elem_zero();
        for (c, p) in terms {
            for (i, v) in self.reduce_path(p) {
                e.0[i] = e.0[i].add_ref(&c.mul_ref(&v));
            }
        }
        e
    }

    pub fn elem_add(&self, a: &Elem, b: &Elem) -> Elem {
        Elem(a.0.iter().zip(&b.0).map(|(x, y)| x.add_ref(y)).collect())
    }

    pub fn elem_sub(&self, a: &Elem, b: &Elem) -> Elem {
        Elem(a.0.iter().zip(&b.0).map(|(x, y)| x.sub_ref(y)).collect())
    }

    pub fn elem_scale(&self, a: &Elem, s: &Scalar) -> Elem {
        Elem(a.0.iter().map(|x| x.mul_ref(s)).collect())
    }

    pub fn elem_mul(&self, a: &Elem, b: &Elem) -> Elem {
        let mut out = self.elem_zero();
        for (i, x) in a.support() {
            for (j, y) in b.support() {
                let xy = x.mul_ref(y);
                for (k, c) in self.mult(i, j) {
                    out.0[*k] = out.0[*k].add_ref(&xy.mul_ref(c));
                }
            }
        }
        out
    }

    /// Coefficient of the idempotent `e_v`.
    pub fn elem_unit_coeff(&self, a: &Elem, v: usize) -> Scalar {
        a.0[self.idempotent(v)].clone()
    }

    /// Inverse of a local unit `u e_v + n` in `e_v Λ e_v`, via the geometric series.
    pub fn elem_local_inverse(&self, a: &Elem, v: usize) -> Option<Elem> {
        let u = self.elem_unit_coeff(a, v);
        if u.is_zero() {
            return None;
        }
        let uinv = u.inv();
        let unit = self.elem_unit(v);
        // a = u (e - m) with m = e - a/u nilpotent
        let m = self.elem_sub(&unit, &self.elem_scale(a, &uinv));
        let mut acc = unit.clone();
        let mut pow = unit;
        for _ in 0..self.nilpotency_degree() {
            pow = self.elem_mul(&pow, &m);
            if pow.is_zero() {
                break;
            }
            acc = self.elem_add(&acc, &pow);
        }
        Some(self.elem_scale(&acc, &uinv))
    }

    pub fn elem_display(&self, a: &Elem) -> String {
        let mut parts = Vec::new();
        for (i, c) in a.support() {
            let name = self.path_name(i);
            if c.is_one() {
                parts.push(name);
            } else {
                parts.push(format!("{} {}", c.to_short(), name));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// A Λ-linear map between finite direct sums of indecomposable projectives.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjMap {
    /// Vertices of the source summands.
    pub src: Vec<usize>,
    /// Vertices of the target summands.
    pub tgt: Vec<usize>,
    entries: Vec<Elem>,
}

impl ProjMap {
    pub fn zero(alg: &Algebra, src: &[usize], tgt: &[usize]) -> ProjMap {
        ProjMap {
            src: src.to_vec(),
            tgt: tgt.to_vec(),
            entries: vec![alg.elem_zero(); src.len() * tgt.len()],
        }
    }

    pub fn identity(alg: &Algebra, obj: &[usize]) -> ProjMap {
        let mut m = ProjMap::zero(alg, obj, obj);
        for (i, &v) in obj.iter().enumerate() {
            m.set(i, i, alg.elem_unit(v));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.src.len()
    }

    pub fn cols(&self) -> usize {
        self.tgt.len()
    }

    pub fn get(&self, r: usize, c: usize) -> &Elem {
        &self.entries[r * self.tgt.len() + c]
    }

    pub fn set(&mut self, r: usize, c: usize, e: Elem) {
        let n = self.tgt.len();
        self.entries[r * n + c] = e;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Elem::is_zero)
    }

    /// Checks that every entry lies in the correct corner `e_s Λ e_t`.
    pub fn is_well_formed(&self, alg: &Algebra) -> bool {
        (0..self.rows()).all(|r| {
            (0..self.cols()).all(|c| {
                let ok = alg.between(self.src[r], self.tgt[c]);
                self.get(r, c).support().all(|(i, _)| ok.contains(&i))
            })
        })
    }

    /// `self` followed by `other`.
    pub fn then(&self, alg: &Algebra, other: &ProjMap) -> ProjMap {
        assert_eq!(self.tgt, other.src, "composing non-matching projective maps");
        let mut out = ProjMap::zero(alg, &self.src, &other.tgt);
        for r in 0..self.rows() {
            for k in 0..self.cols() {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols() {
                    let b = other.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let p = alg.elem_mul(a, b);
                    let s = alg.elem_add(out.get(r, c), &p);
                    out.set(r, c, s);
                }
            }
        }
        out
    }

    pub fn add(&self, alg: &Algebra, o: &ProjMap) -> ProjMap {
        assert!(self.src == o.src && self.tgt == o.tgt);
        ProjMap {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| alg.elem_add(a, b)).collect(),
        }
    }

    pub fn sub(&self, alg: &Algebra, o: &ProjMap) -> ProjMap {
        assert!(self.src == o.src && self.tgt == o.tgt);
        ProjMap {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| alg.elem_sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, alg: &Algebra, s: &Scalar) -> ProjMap {
        ProjMap {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            entries: self.entries.iter().map(|a| alg.elem_scale(a, s)).collect(),
        }
    }

    /// Scalar matrix of idempotent coefficients on same-vertex entries.
    ///
    /// A map is split mono iff its top has full row rank, split epi iff full column rank.
    pub fn top(&self, alg: &Algebra) -> Matrix {
        Matrix::from_fn(alg.field(), self.rows(), self.cols(), |r, c| {
            if self.src[r] == self.tgt[c] {
                alg.elem_unit_coeff(self.get(r, c), self.src[r])
            } else {
                alg.field().zero()
            }
        })
    }

    /// True when every entry lies in the radical of Λ.
    pub fn is_radical(&self, alg: &Algebra) -> bool {
        self.top(alg).is_zero()
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> ProjMap {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows {
            for &c in cols {
                entries.push(self.get(r, c).clone());
            }
        }
        ProjMap {
            src: rows.iter().map(|&r| self.src[r]).collect(),
            tgt: cols.iter().map(|&c| self.tgt[c]).collect(),
            entries,
        }
    }

    /// `[self | o]`: same source, concatenated targets.
    pub fn hcat(&self, alg: &Algebra, o: &ProjMap) -> ProjMap {
        assert_eq!(self.src, o.src);
        let mut tgt = self.tgt.clone();
        tgt.extend_from_slice(&o.tgt);
        let mut m = ProjMap::zero(alg, &self.src, &tgt);
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                m.set(r, c, self.get(r, c).clone());
            }
            for c in 0..o.cols() {
                m.set(r, self.cols() + c, o.get(r, c).clone());
            }
        }
        m
    }

    /// `[self ; o]`: same target, concatenated sources.
    pub fn vcat(&self, alg: &Algebra, o: &ProjMap) -> ProjMap {
        assert_eq!(self.tgt, o.tgt);
        let mut src = self.src.clone();
        src.extend_from_slice(&o.src);
        let mut m = ProjMap::zero(alg, &src, &self.tgt);
        for c in 0..self.cols() {
            for r in 0..self.rows() {
                m.set(r, c, self.get(r, c).clone());
            }
            for r in 0..o.rows() {
                m.set(self.rows() + r, c, o.get(r, c).clone());
            }
        }
        m
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, alg: &Algebra, o: &ProjMap) -> ProjMap {
        let mut src = self.src.clone();
        src.extend_from_slice(&o.src);
        let mut tgt = self.tgt.clone();
        tgt.extend_from_slice(&o.tgt);
        let mut m = ProjMap::zero(alg, &src, &tgt);
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                m.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..o.rows() {
            for c in 0..o.cols() {
                m.set(self.rows() + r, self.cols() + c, o.get(r, c).clone());
            }
        }
        m
    }

    /// Coordinate layout of `Hom(⊕P_src, ⊕P_tgt)`: triples (row, col, basis index).
    pub fn layout(alg: &Algebra, src: &[usize], tgt: &[usize]) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (r, &s) in src.iter().enumerate() {
            for (c, &t) in tgt.iter().enumerate() {
                for &b in alg.between(s, t) {
                    out.push((r, c, b));
                }
            }
        }
        out
    }

    pub fn hom_dim(alg: &Algebra, src: &[usize], tgt: &[usize]) -> usize {
        src.iter()
            .map(|&s| tgt.iter().map(|&t| alg.paths_between(s, t)).sum::<usize>())
            .sum()
    }

    pub fn to_coords(&self, alg: &Algebra) -> Vec<Scalar> {
        ProjMap::layout(alg, &self.src, &self.tgt)
            .into_iter()
            .map(|(r, c, b)| self.get(r, c).0[b].clone())
            .collect()
    }

    pub fn from_coords(alg: &Algebra, src: &[usize], tgt: &[usize], coords: &[Scalar]) -> ProjMap {
        let mut m = ProjMap::zero(alg, src, tgt);
        for ((r, c, b), v) in ProjMap::layout(alg, src, tgt).into_iter().zip(coords) {
            let n = m.tgt.len();
            m.entries[r * n + c].0[b] = v.clone();
        }
        m
    }

    /// Basis of `Hom(⊕P_src, ⊕P_tgt)` by elementary matrices.
    pub fn hom_basis(alg: &Algebra, src: &[usize], tgt: &[usize]) -> Vec<ProjMap> {
        ProjMap::layout(alg, src, tgt)
            .into_iter()
            .map(|(r, c, b)| {
                let mut m = ProjMap::zero(alg, src, tgt);
                m.set(r, c, alg.elem_basis(b));
                m
            })
            .collect()
    }

    pub fn display(&self, alg: &Algebra) -> String {
        let rows: Vec<String> = (0..self.rows())
            .map(|r| {
                let cells: Vec<String> = (0..self.cols()).map(|c| alg.elem_display(self.get(r, c))).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    }
}
