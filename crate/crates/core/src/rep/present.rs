//! Projective covers, minimal presentations, the AR translate and AR sequences.

use super::{nakayama, projective_vector_to_row, Module, Morphism};
use crate::algebra::ProjMap;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{Coordinates, Matrix};

/// Projective cover `⊕ P_v ↠ M`.
#[derive(Clone, Debug)]
pub struct Cover {
    /// Vertices of the summands, sorted.
    pub vertices: Vec<usize>,
    /// Image of the generator `e_v` of each summand.
    pub images: Vec<Vec<Scalar>>,
    pub map: Morphism,
}

/// A minimal projective presentation `⊕P_{p1} -> ⊕P_{p0} -> M -> 0`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p1: Vec<usize>,
    pub p0: Vec<usize>,
    pub map: ProjMap,
}

/// An almost split sequence `0 -> left -> middle -> right -> 0`.
#[derive(Clone, Debug)]
pub struct ArSequence {
    pub left: Module,
    pub middle: Module,
    pub right: Module,
    pub middle_summands: Vec<Module>,
}

impl Module {
    /// Projective cover built from a basis of `top M`.
    pub fn projective_cover(&self) -> Cover {
        let f = self.field();
        let rad = self.radical_bases();
        let mut vertices = Vec::new();
        let mut images = Vec::new();
        for (v, r) in rad.iter().enumerate() {
            let d = self.dims()[v];
            let ext = r.hstack(&Matrix::identity(f, d));
            for c in ext.independent_columns() {
                if c >= r.cols() {
                    vertices.push(v);
                    images.push(ext.column(c));
                }
            }
        }
        let map = self.map_from_projective(&vertices, &images);
        Cover { vertices, images, map }
    }

    pub fn is_projective(&self) -> bool {
        let top = self.top_dims();
        let covered: usize = top
            .iter()
            .enumerate()
            .map(|(v, &k)| k * self.algebra().projective_dims(v).iter().sum::<usize>())
            .sum();
        covered == self.dim()
    }

    pub fn is_injective(&self) -> bool {
        let soc = self.socle_dims();
        let hull: usize = soc
            .iter()
            .enumerate()
            .map(|(v, &k)| k * self.algebra().injective_dims(v).iter().sum::<usize>())
            .sum();
        hull == self.dim()
    }

    /// First syzygy `Ω M` with its inclusion into the projective cover.
    pub fn syzygy(&self) -> (Cover, Module, Morphism, Module) {
        let cover = self.projective_cover();
        let p0 = Module::projective_sum(self.algebra(), &cover.vertices);
        let (omega, inc) = cover.map.kernel(&p0);
        (cover, omega, inc, p0)
    }

    /// Minimal projective presentation; its entries lie in the radical of Λ.
    pub fn presentation(&self) -> Presentation {
        let alg = self.algebra();
        let (cover, omega, inc, _) = self.syzygy();
        let c1 = omega.projective_cover();
        let mut map = ProjMap::zero(alg, &c1.vertices, &cover.vertices);
        for (r, (&v, k)) in c1.vertices.iter().zip(&c1.images).enumerate() {
            let vec = inc.blocks[v].mul_vec(k);
            for (c, e) in projective_vector_to_row(alg, &cover.vertices, v, &vec).into_iter().enumerate() {
                map.set(r, c, e);
            }
        }
        Presentation {
            p1: c1.vertices,
            p0: cover.vertices,
            map,
        }
    }

    /// `τ M = ker ν(p)` for a minimal presentation `p`.
    pub fn tau(&self) -> Module {
        let pres = self.presentation();
        let nu = nakayama(self.algebra(), &pres.map);
        let src = Module::injective_sum(self.algebra(), &pres.p1);
        nu.kernel(&src).0
    }

    /// `τ⁻¹ M = D τ D M`, computed over the opposite algebra.
    pub fn tau_inverse(&self) -> Module {
        let op = self.algebra().opposite_shared();
        self.dual(&op).tau().dual(self.algebra())
    }

    /// `dim Ext¹(M, N)` via `Hom(Ω M, N)` modulo maps extending to the cover.
    pub fn ext1_dim(&self, n: &Module) -> usize {
        let (_, omega, inc, p0) = self.syzygy();
        let h = omega.hom(n);
        let restricted: Vec<Vec<Scalar>> = p0.hom(n).basis.iter().map(|g| inc.then(g).to_vec()).collect();
        let total: usize = omega.dims().iter().zip(n.dims()).map(|(a, b)| a * b).sum();
        h.dim() - Coordinates::new(self.field(), total, &restricted).rank()
    }

    /// Representatives `Ω M -> N` of a basis of `Ext¹(M, N)`.
    pub fn ext1_basis(&self, n: &Module) -> Vec<Morphism> {
        let (_, omega, inc, p0) = self.syzygy();
        let h = omega.hom(n);
        let total: usize = omega.dims().iter().zip(n.dims()).map(|(a, b)| a * b).sum();
        let mut all: Vec<Vec<Scalar>> = p0.hom(n).basis.iter().map(|g| inc.then(g).to_vec()).collect();
        let nb = Coordinates::new(self.field(), total, &all).rank();
        all.extend(h.basis.iter().map(Morphism::to_vec));
        let coords = Coordinates::new(self.field(), total, &all);
        let offset = all.len() - h.dim();
        coords.kept()[nb..].iter().map(|&i| h.basis[i - offset].clone()).collect()
    }

    /// Middle term of `0 -> N -> E -> M -> 0` classified by `zeta: Ω M -> N`, as the
    /// pushout of `P0 <- Ω M -> N`.
    pub fn extension_middle(&self, n: &Module, zeta: &Morphism) -> Module {
        let (_, _, inc, p0) = self.syzygy();
        let pair = n.direct_sum(&p0);
        let neg = self.field().from_i64(-1);
        let map = Morphism {
            blocks: zeta
                .blocks
                .iter()
                .zip(&inc.blocks)
                .map(|(z, i)| z.vstack(&i.scale(&neg)))
                .collect(),
        };
        map.cokernel(&pair).0
    }

    /// The almost split sequence ending at `self` (indecomposable, non-projective).
    pub fn ar_sequence(&self) -> Result<ArSequence> {
        if self.is_projective() {
            return Err(Error::Precondition("no almost split sequence ends at a projective".into()));
        }
        let f = self.field();
        let n = self.tau();
        let (_, omega, inc, p0) = self.syzygy();
        let h = omega.hom(&n);
        let total: usize = omega.dims().iter().zip(n.dims()).map(|(a, b)| a * b).sum();
        let b_vecs: Vec<Vec<Scalar>> = p0.hom(&n).basis.iter().map(|g| inc.then(g).to_vec()).collect();
        let nb = Coordinates::new(f, total, &b_vecs).rank();
        let mut all = b_vecs.clone();
        all.extend(h.basis.iter().map(Morphism::to_vec));
        let coords = Coordinates::new(f, total, &all);
        // coordinates of a class in Ext¹(M, τM) = H / B
        let ext_coords = |phi: &Morphism| -> Vec<Scalar> { coords.coords(&phi.to_vec()).expect("in Hom")[nb..].to_vec() };
        let rad = n.end_radical();
        if rad.top_dim() != 1 {
            return Err(Error::Precondition("module is not indecomposable".into()));
        }
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for s in rad.radical_morphisms() {
            let cols: Vec<Vec<Scalar>> = h.basis.iter().map(|hi| ext_coords(&hi.then(&s))).collect();
            for r in 0..coords.rank() - nb {
                rows.push(cols.iter().map(|c| c[r].clone()).collect());
            }
        }
        let sys = Matrix::from_rows(f, h.dim(), rows);
        let zeta = sys
            .nullspace()
            .into_iter()
            .map(|x| h.combine(&x))
            .find(|z| ext_coords(z).iter().any(|c| !c.is_zero()))
            .ok_or_else(|| Error::Inconsistency("no almost split extension found".into()))?;
        let middle = self.extension_middle(&n, &zeta);
        let middle_summands = middle.decompose().summands;
        Ok(ArSequence {
            left: n,
            middle,
            right: self.clone(),
            middle_summands,
        })
    }
}
