//! Finite-dimensional Λ-modules as quiver representations.
//!
//! An arrow `a: u -> v` acts by a matrix of shape `dims[u] x dims[v]` (a map `M_v -> M_u`).
//! Morphisms are per-vertex matrices `f_v: M_v -> N_v`.

mod decompose;
mod enumerate;
mod fac;
mod json;
mod present;
mod submodules;

use std::sync::Arc;

use rand::Rng;

pub use decompose::{Decomposition, EndRadical};
pub use enumerate::{EnumerationOptions, ModuleUniverse, Strategy};
pub use fac::{fac_closure, hom_left_perp, hom_right_perp, is_fac_of, is_sub_of};
pub use json::{ModuleJson, MorphismJson};
pub use present::{ArSequence, Presentation};
pub use submodules::{enumerate_submodules, DEFAULT_SUBMODULE_GUARD};

use crate::algebra::{Algebra, Elem, ModuleDecl, Path, ProjMap};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{Coordinates, Matrix};

/// A finite-dimensional representation of a bound quiver.
#[derive(Clone, Debug)]
pub struct Module {
    alg: Arc<Algebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl PartialEq for Module {
    fn eq(&self, o: &Module) -> bool {
        self.dims == o.dims && self.maps == o.maps
    }
}

impl Eq for Module {}

/// A morphism of modules, one matrix per vertex (`N_v x M_v`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub blocks: Vec<Matrix>,
}

impl Module {
    /// Builds and validates a module from arrow matrices.
    pub fn new(alg: Arc<Algebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Module> {
        let q = alg.quiver();
        if dims.len() != q.num_vertices() || maps.len() != q.arrows.len() {
            return Err(Error::InvalidRepresentation("wrong number of vertices or arrows".into()));
        }
        for (a, m) in q.arrows.iter().zip(&maps) {
            if m.rows() != dims[a.source] || m.cols() != dims[a.target] {
                return Err(Error::InvalidRepresentation(format!(
                    "matrix for `{}` must be {} x {}",
                    a.name, dims[a.source], dims[a.target]
                )));
            }
            if m.field() != alg.field() {
                return Err(Error::FieldMismatch(format!("matrix for `{}`", a.name)));
            }
        }
        let module = Module { alg, dims, maps };
        for rel in module.alg.relations() {
            let (s, t) = (rel.source().unwrap(), rel.target().unwrap());
            let mut acc = Matrix::zeros(module.field(), module.dims[s], module.dims[t]);
            for (c, p) in &rel.terms {
                let c = module.field().from_rational(c)?;
                acc = acc.add(&module.act_path(p).scale(&c));
            }
            if !acc.is_zero() {
                return Err(Error::InvalidRepresentation(format!(
                    "relation {} does not vanish",
                    rel.display(module.alg.quiver())
                )));
            }
        }
        Ok(module)
    }

    pub fn from_decl(alg: Arc<Algebra>, decl: &ModuleDecl) -> Result<Module> {
        let f = alg.field();
        let q = alg.quiver();
        let maps = q
            .arrows
            .iter()
            .zip(&decl.maps)
            .map(|(a, rows)| {
                let (r, c) = (decl.dims[a.source], decl.dims[a.target]);
                let mut m = Matrix::zeros(f, r, c);
                for (i, row) in rows.iter().enumerate() {
                    for (j, v) in row.iter().enumerate() {
                        m.set(i, j, f.from_rational(v)?);
                    }
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        Module::new(alg, decl.dims.clone(), maps)
    }

    pub fn zero(alg: &Arc<Algebra>) -> Module {
        let n = alg.num_vertices();
        let f = alg.field();
        let maps = alg.quiver().arrows.iter().map(|_| Matrix::zeros(f, 0, 0)).collect();
        Module {
            alg: alg.clone(),
            dims: vec![0; n],
            maps,
        }
    }

    /// The simple module at vertex `i`.
    pub fn simple(alg: &Arc<Algebra>, i: usize) -> Result<Module> {
        if i >= alg.num_vertices() {
            return Err(Error::UnknownVertex(i.to_string()));
        }
        let mut dims = vec![0; alg.num_vertices()];
        dims[i] = 1;
        let f = alg.field();
        let maps = alg
            .quiver()
            .arrows
            .iter()
            .map(|a| Matrix::zeros(f, dims[a.source], dims[a.target]))
            .collect();
        Ok(Module {
            alg: alg.clone(),
            dims,
            maps,
        })
    }

    /// The indecomposable projective `P_i = Λ e_i`.
    pub fn projective(alg: &Arc<Algebra>, i: usize) -> Result<Module> {
        if i >= alg.num_vertices() {
            return Err(Error::UnknownVertex(i.to_string()));
        }
        Ok(Module::projective_sum(alg, &[i]))
    }

    /// `⊕ P_{v}` over the given vertices; `(P)_w` is laid out summand by summand in
    /// the basis paths `w -> v`.
    pub fn projective_sum(alg: &Arc<Algebra>, vs: &[usize]) -> Module {
        let n = alg.num_vertices();
        let f = alg.field();
        let dims: Vec<usize> = (0..n).map(|w| vs.iter().map(|&v| alg.paths_between(w, v)).sum()).collect();
        let maps = alg
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let arrow_idx = alg
                    .basis_index(&Path::from_arrows(alg.quiver(), vec![ai]).unwrap())
                    .expect("arrows are basis elements");
                let mut m = Matrix::zeros(f, dims[a.source], dims[a.target]);
                let (mut ro, mut co) = (0, 0);
                for &v in vs {
                    let rows = alg.between(a.source, v);
                    let cols = alg.between(a.target, v);
                    for (c, &q) in cols.iter().enumerate() {
                        for (k, val) in alg.mult(arrow_idx, q) {
                            let r = rows.iter().position(|x| x == k).unwrap();
                            m.set(ro + r, co + c, val.clone());
                        }
                    }
                    ro += rows.len();
                    co += cols.len();
                }
                m
            })
            .collect();
        Module {
            alg: alg.clone(),
            dims,
            maps,
        }
    }

    /// The indecomposable injective `I_i = D(e_i Λ)`.
    pub fn injective(alg: &Arc<Algebra>, i: usize) -> Result<Module> {
        if i >= alg.num_vertices() {
            return Err(Error::UnknownVertex(i.to_string()));
        }
        Ok(Module::injective_sum(alg, &[i]))
    }

    /// `⊕ I_{v}`; `(I)_w` is laid out summand by summand, dual to the paths `v -> w`.
    pub fn injective_sum(alg: &Arc<Algebra>, vs: &[usize]) -> Module {
        let n = alg.num_vertices();
        let f = alg.field();
        let dims: Vec<usize> = (0..n).map(|w| vs.iter().map(|&v| alg.paths_between(v, w)).sum()).collect();
        let maps = alg
            .quiver()
            .arrows
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let arrow_idx = alg.basis_index(&Path::from_arrows(alg.quiver(), vec![ai]).unwrap()).unwrap();
                let mut m = Matrix::zeros(f, dims[a.source], dims[a.target]);
                let (mut ro, mut co) = (0, 0);
                for &v in vs {
                    let rows = alg.between(v, a.source);
                    let cols = alg.between(v, a.target);
                    for (r, &p) in rows.iter().enumerate() {
                        for (k, val) in alg.mult(p, arrow_idx) {
                            let c = cols.iter().position(|x| x == k).unwrap();
                            m.set(ro + r, co + c, val.clone());
                        }
                    }
                    ro += rows.len();
                    co += cols.len();
                }
                m
            })
            .collect();
        Module {
            alg: alg.clone(),
            dims,
            maps,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn field(&self) -> Field {
        self.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    /// Action of a path: `M_target -> M_source`.
    pub fn act_path(&self, p: &Path) -> Matrix {
        let mut acc = Matrix::identity(self.field(), self.dims[p.source]);
        for &a in &p.arrows {
            acc = acc.mul(&self.maps[a]);
        }
        acc
    }

    /// Action of a basis element of Λ.
    pub fn act_basis(&self, i: usize) -> Matrix {
        self.act_path(&self.alg.basis()[i])
    }

    /// Action of `λ ∈ e_s Λ e_t` as a map `M_t -> M_s`.
    pub fn act_elem(&self, e: &Elem, s: usize, t: usize) -> Matrix {
        let mut acc = Matrix::zeros(self.field(), self.dims[s], self.dims[t]);
        for (i, c) in e.support() {
            let p = &self.alg.basis()[i];
            debug_assert!(p.source == s && p.target == t);
            acc = acc.add(&self.act_path(p).scale(c));
        }
        acc
    }

    /// Offsets of each vertex in the total space.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.dims.len());
        let mut acc = 0;
        for &d in &self.dims {
            off.push(acc);
            acc += d;
        }
        off
    }

    pub fn direct_sum(&self, o: &Module) -> Module {
        Module {
            alg: self.alg.clone(),
            dims: self.dims.iter().zip(&o.dims).map(|(a, b)| a + b).collect(),
            maps: self.maps.iter().zip(&o.maps).map(|(a, b)| a.direct_sum(b)).collect(),
        }
    }

    pub fn direct_sum_all(alg: &Arc<Algebra>, parts: &[&Module]) -> Module {
        parts.iter().fold(Module::zero(alg), |acc, m| acc.direct_sum(m))
    }

    /// Inclusion of the `which`-th part of `left ⊕ right` (0 = left).
    pub fn sum_inclusion(left: &Module, right: &Module, which: usize) -> Morphism {
        let f = left.field();
        Morphism {
            blocks: (0..left.dims.len())
                .map(|v| {
                    let (l, r) = (left.dims[v], right.dims[v]);
                    let d = if which == 0 { l } else { r };
                    let off = if which == 0 { 0 } else { l };
                    let mut m = Matrix::zeros(f, l + r, d);
                    for i in 0..d {
                        m.set(off + i, i, f.one());
                    }
                    m
                })
                .collect(),
        }
    }

    /// Projection of `left ⊕ right` onto the `which`-th part.
    pub fn sum_projection(left: &Module, right: &Module, which: usize) -> Morphism {
        let inc = Module::sum_inclusion(left, right, which);
        Morphism {
            blocks: inc.blocks.iter().map(Matrix::transpose).collect(),
        }
    }

    /// The dual `D M`, a module over the opposite algebra.
    pub fn dual(&self, op: &Arc<Algebra>) -> Module {
        Module {
            alg: op.clone(),
            dims: self.dims.clone(),
            maps: self.maps.iter().map(Matrix::transpose).collect(),
        }
    }

    /// Submodule spanned per vertex by the columns of `bases[v]` (must be arrow-stable).
    pub fn submodule(&self, bases: &[Matrix]) -> Result<(Module, Morphism)> {
        let q = self.alg.quiver();
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let mut maps = Vec::with_capacity(q.arrows.len());
        for (ai, a) in q.arrows.iter().enumerate() {
            let image = self.maps[ai].mul(&bases[a.target]);
            let x = bases[a.source]
                .solve_matrix(&image)
                .ok_or_else(|| Error::InvalidRepresentation("subspace is not a submodule".into()))?;
            maps.push(x);
        }
        let sub = Module {
            alg: self.alg.clone(),
            dims,
            maps,
        };
        Ok((sub, Morphism { blocks: bases.to_vec() }))
    }

    /// Quotient by the submodule spanned per vertex by the columns of `bases[v]`.
    pub fn quotient(&self, bases: &[Matrix]) -> Result<(Module, Morphism)> {
        let f = self.field();
        let q = self.alg.quiver();
        let mut projs = Vec::with_capacity(self.dims.len());
        let mut sections = Vec::with_capacity(self.dims.len());
        for (v, w) in bases.iter().enumerate() {
            let d = self.dims[v];
            let w = w.column_space();
            let ext = w.hstack(&Matrix::identity(f, d));
            let kept = ext.independent_columns();
            let chosen: Vec<usize> = kept.iter().copied().filter(|&c| c >= w.cols()).collect();
            let section = ext.select_columns(&chosen);
            let full = ext.select_columns(&kept);
            let inv = full.inverse().expect("extended basis is invertible");
            let proj = inv.block(w.cols(), 0, chosen.len(), d);
            projs.push(proj);
            sections.push(section);
        }
        let mut maps = Vec::with_capacity(q.arrows.len());
        for (ai, a) in q.arrows.iter().enumerate() {
            maps.push(projs[a.source].mul(&self.maps[ai]).mul(&sections[a.target]));
        }
        let dims = projs.iter().map(Matrix::rows).collect();
        let quo = Module {
            alg: self.alg.clone(),
            dims,
            maps,
        };
        for (ai, a) in q.arrows.iter().enumerate() {
            // well defined only if the subspace is arrow-stable
            let lhs = projs[a.source].mul(&self.maps[ai]).mul(&bases[a.target]);
            if !lhs.is_zero() {
                return Err(Error::InvalidRepresentation("subspace is not a submodule".into()));
            }
        }
        Ok((quo, Morphism { blocks: projs }))
    }

    /// `rad M = Σ_a a M`, as per-vertex column bases.
    pub fn radical_bases(&self) -> Vec<Matrix> {
        let f = self.field();
        let q = self.alg.quiver();
        (0..self.dims.len())
            .map(|u| {
                let mut acc = Matrix::zeros(f, self.dims[u], 0);
                for ai in q.arrows_from(u) {
                    acc = acc.hstack(&self.maps[ai]);
                }
                acc.column_space()
            })
            .collect()
    }

    /// `soc M`: per vertex, the common kernel of the arrows acting on it.
    pub fn socle_bases(&self) -> Vec<Matrix> {
        let f = self.field();
        let q = self.alg.quiver();
        (0..self.dims.len())
            .map(|v| {
                let mut stacked = Matrix::zeros(f, 0, self.dims[v]);
                for ai in q.arrows_to(v) {
                    stacked = stacked.vstack(&self.maps[ai]);
                }
                let ker = stacked.nullspace();
                Matrix::from_columns(f, self.dims[v], &ker)
            })
            .collect()
    }

    pub fn radical(&self) -> (Module, Morphism) {
        self.submodule(&self.radical_bases()).expect("radical is a submodule")
    }

    pub fn top(&self) -> (Module, Morphism) {
        self.quotient(&self.radical_bases()).expect("radical is a submodule")
    }

    pub fn socle(&self) -> (Module, Morphism) {
        self.submodule(&self.socle_bases()).expect("socle is a submodule")
    }

    /// Dimension vector of `top M`.
    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_bases()
            .iter()
            .zip(&self.dims)
            .map(|(r, d)| d - r.cols())
            .collect()
    }

    /// Dimension vector of `soc M`.
    pub fn socle_dims(&self) -> Vec<usize> {
        self.socle_bases().iter().map(Matrix::cols).collect()
    }

    /// The morphism `⊕ P_{v_c} -> M` sending the generator `e_{v_c}` to `images[c] ∈ M_{v_c}`.
    pub fn map_from_projective(&self, vs: &[usize], images: &[Vec<Scalar>]) -> Morphism {
        let f = self.field();
        let alg = &self.alg;
        Morphism {
            blocks: (0..self.dims.len())
                .map(|w| {
                    let mut cols = Vec::new();
                    for (c, &v) in vs.iter().enumerate() {
                        for &p in alg.between(w, v) {
                            cols.push(self.act_basis(p).mul_vec(&images[c]));
                        }
                    }
                    Matrix::from_columns(f, self.dims[w], &cols)
                })
                .collect(),
        }
    }

    /// `Hom(M, N)` by solving the intertwining equations.
    pub fn hom(&self, n: &Module) -> HomSpace {
        HomSpace::new(self, n)
    }

    pub fn end(&self) -> HomSpace {
        HomSpace::new(self, self)
    }

    /// Decides `M ≅ N` by searching for an invertible element of `Hom(M, N)`.
    pub fn is_isomorphic(&self, n: &Module) -> bool {
        if self.dims != n.dims {
            return false;
        }
        if self.is_zero() {
            return true;
        }
        let h = self.hom(n);
        if h.dim() == 0 {
            return false;
        }
        let back = n.hom(self);
        if back.dim() != h.dim() {
            return false;
        }
        let mut rng = crate::seeded_rng(0x150);
        for b in &h.basis {
            if b.is_iso() {
                return true;
            }
        }
        for _ in 0..24 {
            let f = h.random_element(&mut rng);
            if f.is_iso() {
                return true;
            }
        }
        if let Some(size) = self.field().size() {
            let total = (size as u128).checked_pow(h.dim() as u32).unwrap_or(u128::MAX);
            if total <= 20_000 {
                return h.all_elements().iter().any(Morphism::is_iso);
            }
        }
        false
    }

    /// Stacked total-space matrix of an endomorphism-like block list.
    pub fn total_matrix(&self, f: &Morphism) -> Matrix {
        let mut m = Matrix::zeros(self.field(), 0, 0);
        for b in &f.blocks {
            m = m.direct_sum(b);
        }
        m
    }

    pub fn display(&self) -> String {
        let q = self.alg.quiver();
        let mut parts = vec![format!(
            "dims ({})",
            self.dims.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
        )];
        for (a, m) in q.arrows.iter().zip(&self.maps) {
            parts.push(format!("{} = {}", a.name, m));
        }
        parts.join("; ")
    }
}

impl Morphism {
    pub fn zero(m: &Module, n: &Module) -> Morphism {
        Morphism {
            blocks: (0..m.dims.len())
                .map(|v| Matrix::zeros(m.field(), n.dims[v], m.dims[v]))
                .collect(),
        }
    }

    pub fn identity(m: &Module) -> Morphism {
        Morphism {
            blocks: m.dims.iter().map(|&d| Matrix::identity(m.field(), d)).collect(),
        }
    }

    /// `self` followed by `g`.
    pub fn then(&self, g: &Morphism) -> Morphism {
        Morphism {
            blocks: self.blocks.iter().zip(&g.blocks).map(|(f, g)| g.mul(f)).collect(),
        }
    }

    pub fn add(&self, o: &Morphism) -> Morphism {
        Morphism {
            blocks: self.blocks.iter().zip(&o.blocks).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, o: &Morphism) -> Morphism {
        Morphism {
            blocks: self.blocks.iter().zip(&o.blocks).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Morphism {
        Morphism {
            blocks: self.blocks.iter().map(|a| a.scale(s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.blocks.iter().all(|b| b.is_square() && (b.rows() == 0 || !b.det().is_zero()))
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    /// Flattened coordinates (vertex by vertex, row-major).
    pub fn to_vec(&self) -> Vec<Scalar> {
        self.blocks.iter().flat_map(|b| b.entries().iter().cloned()).collect()
    }

    pub fn from_vec(field: Field, src: &[usize], tgt: &[usize], v: &[Scalar]) -> Morphism {
        let mut off = 0;
        Morphism {
            blocks: src
                .iter()
                .zip(tgt)
                .map(|(&s, &t)| {
                    let m = Matrix::from_fn(field, t, s, |r, c| v[off + r * s + c].clone());
                    off += s * t;
                    m
                })
                .collect(),
        }
    }

    /// Checks the intertwining relations against `m -> n`.
    pub fn is_morphism(&self, m: &Module, n: &Module) -> bool {
        let q = m.alg.quiver();
        q.arrows.iter().enumerate().all(|(ai, a)| {
            n.maps[ai].mul(&self.blocks[a.target]) == self.blocks[a.source].mul(&m.maps[ai])
        })
    }

    /// Kernel of `self: m -> n` with its inclusion.
    pub fn kernel(&self, m: &Module) -> (Module, Morphism) {
        let f = m.field();
        let bases: Vec<Matrix> = self
            .blocks
            .iter()
            .zip(&m.dims)
            .map(|(b, &d)| Matrix::from_columns(f, d, &b.nullspace()))
            .collect();
        m.submodule(&bases).expect("kernels are submodules")
    }

    /// Image of `self: m -> n` as a submodule of `n`.
    pub fn image(&self, n: &Module) -> (Module, Morphism) {
        let bases: Vec<Matrix> = self.blocks.iter().map(Matrix::column_space).collect();
        n.submodule(&bases).expect("images are submodules")
    }

    /// Cokernel of `self: m -> n` with its projection.
    pub fn cokernel(&self, n: &Module) -> (Module, Morphism) {
        n.quotient(&self.blocks).expect("images are submodules")
    }
}

/// A basis of `Hom(M, N)` together with a coordinate system.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source_dims: Vec<usize>,
    pub target_dims: Vec<usize>,
    pub basis: Vec<Morphism>,
    field: Field,
    coords: Coordinates,
}

impl HomSpace {
    fn new(m: &Module, n: &Module) -> HomSpace {
        let f = m.field();
        let q = m.alg.quiver();
        let nv = m.dims.len();
        let mut offs = Vec::with_capacity(nv);
        let mut total = 0;
        for v in 0..nv {
            offs.push(total);
            total += m.dims[v] * n.dims[v];
        }
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        for (ai, a) in q.arrows.iter().enumerate() {
            let (u, v) = (a.source, a.target);
            let (nu, mv) = (n.dims[u], m.dims[v]);
            let na = &n.maps[ai];
            let ma = &m.maps[ai];
            // N_a f_v - f_u M_a = 0, entry (r, c) for r < N_u, c < M_v
            for r in 0..nu {
                for c in 0..mv {
                    let mut row = vec![f.zero(); total];
                    for k in 0..n.dims[v] {
                        let coef = na.get(r, k);
                        if !coef.is_zero() {
                            let idx = offs[v] + k * m.dims[v] + c;
                            row[idx] = row[idx].add_ref(coef);
                        }
                    }
                    for k in 0..m.dims[u] {
                        let coef = ma.get(k, c);
                        if !coef.is_zero() {
                            let idx = offs[u] + r * m.dims[u] + k;
                            row[idx] = row[idx].sub_ref(coef);
                        }
                    }
                    rows.push(row);
                }
            }
        }
        let sys = Matrix::from_rows(f, total, rows);
        let kernel = sys.nullspace();
        let basis: Vec<Morphism> = kernel
            .iter()
            .map(|v| Morphism::from_vec(f, &m.dims, &n.dims, v))
            .collect();
        let coords = Coordinates::new(f, total, &kernel);
        HomSpace {
            source_dims: m.dims.clone(),
            target_dims: n.dims.clone(),
            basis,
            field: f,
            coords,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a morphism in the basis.
    pub fn coords(&self, f: &Morphism) -> Option<Vec<Scalar>> {
        self.coords.coords(&f.to_vec())
    }

    pub fn combine(&self, coeffs: &[Scalar]) -> Morphism {
        let mut acc = Morphism::from_vec(
            self.field,
            &self.source_dims,
            &self.target_dims,
            &vec![self.field.zero(); self.source_dims.iter().zip(&self.target_dims).map(|(a, b)| a * b).sum()],
        );
        for (b, c) in self.basis.iter().zip(coeffs) {
            if !c.is_zero() {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Morphism {
        let coeffs: Vec<Scalar> = (0..self.dim()).map(|_| crate::random_scalar(self.field, rng)).collect();
        self.combine(&coeffs)
    }

    /// Every element (finite fields only, small spaces only).
    pub fn all_elements(&self) -> Vec<Morphism> {
        let p = self.field.size().expect("finite field required") as usize;
        let k = self.dim();
        let mut out = Vec::new();
        let mut digits = vec![0usize; k];
        loop {
            let coeffs: Vec<Scalar> = digits.iter().map(|&d| self.field.from_i64(d as i64)).collect();
            out.push(self.combine(&coeffs));
            let mut i = 0;
            loop {
                if i == k {
                    return out;
                }
                digits[i] += 1;
                if digits[i] < p {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
        }
    }
}

/// Converts a map of projectives into a module morphism between the projective sums.
pub fn projmap_to_morphism(alg: &Arc<Algebra>, f: &ProjMap) -> Morphism {
    let fld = alg.field();
    let n = alg.num_vertices();
    Morphism {
        blocks: (0..n)
            .map(|w| {
                let src_dim: usize = f.src.iter().map(|&s| alg.paths_between(w, s)).sum();
                let tgt_dim: usize = f.tgt.iter().map(|&t| alg.paths_between(w, t)).sum();
                let mut m = Matrix::zeros(fld, tgt_dim, src_dim);
                let mut co = 0;
                for (r, &s) in f.src.iter().enumerate() {
                    let qs = alg.between(w, s);
                    for (qi, &q) in qs.iter().enumerate() {
                        let mut ro = 0;
                        for (c, &t) in f.tgt.iter().enumerate() {
                            let outs = alg.between(w, t);
                            for (j, coef) in f.get(r, c).support() {
                                for (k, v) in alg.mult(q, j) {
                                    let pos = outs.iter().position(|x| x == k).unwrap();
                                    let val = m.get(ro + pos, co + qi).add_ref(&coef.mul_ref(v));
                                    m.set(ro + pos, co + qi, val);
                                }
                            }
                            ro += outs.len();
                        }
                    }
                    co += qs.len();
                }
                m
            })
            .collect(),
    }
}

/// Reads a vector of `(⊕P_{t_c})_v` as a row of Λ-entries (one per summand).
pub fn projective_vector_to_row(alg: &Algebra, tgt: &[usize], v: usize, vec: &[Scalar]) -> Vec<Elem> {
    let mut out = Vec::with_capacity(tgt.len());
    let mut off = 0;
    for &t in tgt {
        let mut e = alg.elem_zero();
        for (i, &b) in alg.between(v, t).iter().enumerate() {
            e.0[b] = vec[off + i].clone();
        }
        off += alg.paths_between(v, t);
        out.push(e);
    }
    out
}

/// Nakayama functor on maps of projectives: `ν(⊕P_s -> ⊕P_t) = (⊕I_s -> ⊕I_t)`.
pub fn nakayama(alg: &Arc<Algebra>, f: &ProjMap) -> Morphism {
    let fld = alg.field();
    let n = alg.num_vertices();
    Morphism {
        blocks: (0..n)
            .map(|w| {
                let src_dim: usize = f.src.iter().map(|&s| alg.paths_between(s, w)).sum();
                let tgt_dim: usize = f.tgt.iter().map(|&t| alg.paths_between(t, w)).sum();
                let mut m = Matrix::zeros(fld, tgt_dim, src_dim);
                let mut ro = 0;
                for (c, &t) in f.tgt.iter().enumerate() {
                    let xs = alg.between(t, w);
                    let mut co = 0;
                    for (r, &s) in f.src.iter().enumerate() {
                        let ys = alg.between(s, w);
                        // entry [x][y] = coefficient of y in λ x
                        for (xi, &x) in xs.iter().enumerate() {
                            for (j, coef) in f.get(r, c).support() {
                                for (k, v) in alg.mult(j, x) {
                                    let yi = ys.iter().position(|y| y == k).unwrap();
                                    let val = m.get(ro + xi, co + yi).add_ref(&coef.mul_ref(v));
                                    m.set(ro + xi, co + yi, val);
                                }
                            }
                        }
                        co += ys.len();
                    }
                    ro += xs.len();
                }
                m
            })
            .collect(),
    }
}

/// Induced map on `Hom(⊕P_tgt, M) -> Hom(⊕P_src, M)` (precomposition with `f`), where
/// `Hom(⊕P_v, M) = ⊕ M_v`.
pub fn precomposition_matrix(m: &Module, f: &ProjMap) -> Matrix {
    let fld = m.field();
    let rows: usize = f.src.iter().map(|&s| m.dims[s]).sum();
    let cols: usize = f.tgt.iter().map(|&t| m.dims[t]).sum();
    let mut out = Matrix::zeros(fld, rows, cols);
    let mut ro = 0;
    for (r, &s) in f.src.iter().enumerate() {
        let mut co = 0;
        for (c, &t) in f.tgt.iter().enumerate() {
            let block = m.act_elem(f.get(r, c), s, t);
            out.write_block(ro, co, &block);
            co += m.dims[t];
        }
        ro += m.dims[s];
    }
    out
}
