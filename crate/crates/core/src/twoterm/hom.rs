//! `Hom_{K_Λ}` and `E = Hom(-, -[1])` by linear algebra on path coordinates.

use super::{ChainMap, Complex};
use crate::algebra::ProjMap;
use crate::field::Scalar;
use crate::matrix::{Coordinates, Matrix};

/// `Hom_{K_Λ}(X, Y)`: chain maps modulo null-homotopic ones.
#[derive(Clone, Debug)]
pub struct HomK {
    /// Representatives of a basis of the quotient.
    pub basis: Vec<ChainMap>,
    /// All chain maps (a basis of the cycle space).
    pub cycles: Vec<ChainMap>,
    src: (Vec<usize>, Vec<usize>),
    tgt: (Vec<usize>, Vec<usize>),
    coords: Coordinates,
    nnull: usize,
}

/// `E(X, Y) = Hom(X⁻¹, Y⁰) / (x·Hom(X⁰, Y⁰) + Hom(X⁻¹, Y⁻¹)·y)`.
#[derive(Clone, Debug)]
pub struct ESpace {
    pub basis: Vec<ProjMap>,
    coords: Coordinates,
    nnull: usize,
}

impl Complex {
    pub fn hom_k(&self, y: &Complex) -> HomK {
        let alg = &self.alg;
        let f = alg.field();
        let (xs, xt) = (self.src(), self.tgt());
        let (ys, yt) = (y.src(), y.tgt());
        let b1 = ProjMap::hom_basis(alg, xs, ys);
        let b0 = ProjMap::hom_basis(alg, xt, yt);
        let target_dim = ProjMap::hom_dim(alg, xs, yt);
        let total = b1.len() + b0.len();
        // columns: image of each unknown under (f1, f0) -> x·f0 - f1·y
        let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(total);
        for g in &b1 {
            let v = g.then(alg, &y.d).to_coords(alg);
            cols.push(v.iter().map(Scalar::neg_ref).collect());
        }
        for g in &b0 {
            cols.push(self.d.then(alg, g).to_coords(alg));
        }
        let sys = Matrix::from_columns(f, target_dim, &cols);
        let kernel = sys.nullspace();
        let split = |v: &[Scalar]| ChainMap {
            f1: ProjMap::from_coords(alg, xs, ys, &v[..b1.len()]),
            f0: ProjMap::from_coords(alg, xt, yt, &v[b1.len()..]),
        };
        let cycles: Vec<ChainMap> = kernel.iter().map(|v| split(v)).collect();
        let null: Vec<Vec<Scalar>> = ProjMap::hom_basis(alg, xt, ys)
            .iter()
            .map(|h| {
                ChainMap {
                    f1: self.d.then(alg, h),
                    f0: h.then(alg, &y.d),
                }
                .to_coords(alg)
            })
            .collect();
        let nnull = Coordinates::new(f, total, &null).rank();
        let mut all = null;
        all.extend(kernel.iter().cloned());
        let coords = Coordinates::new(f, total, &all);
        let nn = all.len() - kernel.len();
        let basis = coords.kept()[nnull..].iter().map(|&i| split(&all[i])).collect::<Vec<_>>();
        debug_assert!(coords.kept()[nnull..].iter().all(|&i| i >= nn));
        HomK {
            basis,
            cycles,
            src: (xs.to_vec(), xt.to_vec()),
            tgt: (ys.to_vec(), yt.to_vec()),
            coords,
            nnull,
        }
    }

    /// `E(X, Y)`.
    pub fn ext(&self, y: &Complex) -> ESpace {
        let alg = &self.alg;
        let f = alg.field();
        let (xs, xt) = (self.src(), self.tgt());
        let (ys, yt) = (y.src(), y.tgt());
        let dim = ProjMap::hom_dim(alg, xs, yt);
        let mut null: Vec<Vec<Scalar>> = ProjMap::hom_basis(alg, xt, yt)
            .iter()
            .map(|g| self.d.then(alg, g).to_coords(alg))
            .collect();
        null.extend(
            ProjMap::hom_basis(alg, xs, ys)
                .iter()
                .map(|g| g.then(alg, &y.d).to_coords(alg)),
        );
        let nnull = Coordinates::new(f, dim, &null).rank();
        let mut all = null;
        let units: Vec<ProjMap> = ProjMap::hom_basis(alg, xs, yt);
        all.extend(units.iter().map(|u| u.to_coords(alg)));
        let coords = Coordinates::new(f, dim, &all);
        let offset = all.len() - units.len();
        let basis = coords.kept()[nnull..].iter().map(|&i| units[i - offset].clone()).collect();
        ESpace { basis, coords, nnull }
    }
}

impl HomK {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of the class of a chain map in `basis`.
    pub fn class_coords(&self, alg: &crate::algebra::Algebra, f: &ChainMap) -> Vec<Scalar> {
        let c = self.coords.coords(&f.to_coords(alg)).expect("argument must be a chain map");
        c[self.nnull..].to_vec()
    }

    pub fn is_null_homotopic(&self, alg: &crate::algebra::Algebra, f: &ChainMap) -> bool {
        self.class_coords(alg, f).iter().all(Scalar::is_zero)
    }

    pub fn combine(&self, alg: &crate::algebra::Algebra, coeffs: &[Scalar]) -> ChainMap {
        let mut acc = ChainMap {
            f1: ProjMap::zero(alg, &self.src.0, &self.tgt.0),
            f0: ProjMap::zero(alg, &self.src.1, &self.tgt.1),
        };
        for (b, c) in self.basis.iter().zip(coeffs) {
            if !c.is_zero() {
                acc = acc.add(alg, &b.scale(alg, c));
            }
        }
        acc
    }
}

impl ESpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of the class of `e: X⁻¹ -> Y⁰`.
    pub fn class_coords(&self, alg: &crate::algebra::Algebra, e: &ProjMap) -> Vec<Scalar> {
        let c = self.coords.coords(&e.to_coords(alg)).expect("spans");
        c[self.nnull..].to_vec()
    }
}
