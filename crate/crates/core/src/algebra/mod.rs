//! Bound quiver algebras `kQ/I` with an explicit path basis.
//!
//! Paths compose left to right: for `a: 1 -> 2` and `b: 2 -> 3` the path `a*b` runs
//! from 1 to 3. Left modules are used throughout, so an arrow `a: u -> v` acts as a
//! linear map `M_v -> M_u` and `P_i = Λ e_i` is spanned by the paths ending at `i`.

mod dsl;
mod elem;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

pub use dsl::{parse_document, ComplexDecl, Document, ModuleDecl};
pub use elem::{Elem, ProjMap};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

/// Default bound on the nilpotency search.
pub const DEFAULT_NILPOTENCY_BOUND: usize = 30;

/// Guard against path explosion while searching for the nilpotency degree.
const MAX_PATHS: usize = 200_000;

/// An arrow of a quiver.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Vertices carry text labels, internally indexed from 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Quiver> {
        if vertices.is_empty() {
            return Err(Error::Precondition("a quiver needs at least one vertex".into()));
        }
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(Error::Precondition(format!("duplicate vertex `{v}`")));
            }
        }
        for (i, a) in arrows.iter().enumerate() {
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::UnknownVertex(a.name.clone()));
            }
            if arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::Precondition(format!("duplicate arrow `{}`", a.name)));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Arrows starting at `v`.
    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    /// Arrows ending at `v`.
    pub fn arrows_to(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    /// The quiver with every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

/// A path: a vertex (trivial path) or a composable sequence of arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Builds a path from arrow indices, checking composability.
    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Option<Path> {
        let first = *arrows.first()?;
        for w in arrows.windows(2) {
            if q.arrows[w[0]].target != q.arrows[w[1]].source {
                return None;
            }
        }
        Some(Path {
            source: q.arrows[first].source,
            target: q.arrows[*arrows.last().unwrap()].target,
            arrows,
        })
    }

    /// Concatenation `self * other`, if composable.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path {
            source: self.source,
            target: other.target,
            arrows,
        })
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e{}", q.vertices[self.source])
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    /// The reversed path in the opposite quiver.
    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path {
            source: self.target,
            target: self.source,
            arrows,
        }
    }

    fn canonical_key(&self) -> (usize, usize, usize, Vec<usize>) {
        (self.source, self.target, self.len(), self.arrows.clone())
    }
}

/// A rational linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(BigRational, Path)>,
}

impl Relation {
    /// Validates and normalizes a relation: zero terms dropped, like terms merged.
    pub fn new(q: &Quiver, terms: Vec<(BigRational, Path)>) -> Result<Relation> {
        let rel = Relation {
            terms: Relation::normalized_terms(terms),
        };
        let text = rel.display(q);
        if rel.terms.iter().any(|(_, p)| p.len() < 2) {
            return Err(Error::ShortRelation(text));
        }
        if let Some((_, p0)) = rel.terms.first() {
            if rel
                .terms
                .iter()
                .any(|(_, p)| p.source != p0.source || p.target != p0.target)
            {
                return Err(Error::NonParallel(text));
            }
        }
        Ok(rel)
    }

    pub fn source(&self) -> Option<usize> {
        self.terms.first().map(|(_, p)| p.source)
    }

    pub fn target(&self) -> Option<usize> {
        self.terms.first().map(|(_, p)| p.target)
    }

    pub fn min_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0)
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (c, p)) in self.terms.iter().enumerate() {
            let neg = c < &BigRational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag != BigRational::from_integer(1.into()) {
                if mag.is_integer() {
                    out.push_str(&format!("{} ", mag.numer()));
                } else {
                    out.push_str(&format!("{}/{} ", mag.numer(), mag.denom()));
                }
            }
            out.push_str(&p.display(q));
        }
        out
    }
}

/// A finite-dimensional algebra `Λ = kQ/I` with a fixed path basis and multiplication table.
#[derive(Clone, Debug)]
pub struct Algebra {
    quiver: Quiver,
    relations: Vec<Relation>,
    field: Field,
    basis: Vec<Path>,
    nilpotency: usize,
    index: HashMap<Path, usize>,
    reductions: HashMap<Path, Vec<(usize, Scalar)>>,
    between: Vec<Vec<Vec<usize>>>,
    mult: Vec<Vec<Vec<(usize, Scalar)>>>,
    op_cache: OnceLock<Arc<Algebra>>,
}

impl Algebra {
    /// Materializes `kQ/I`, searching for the nilpotency degree up to `bound`.
    pub fn new(quiver: Quiver, relations: Vec<Relation>, field: Field, bound: usize) -> Result<Algebra> {
        let mut paths = PathTable::new(&quiver);
        let mut m = None;
        for len in 1..=bound {
            paths.extend_to(&quiver, len)?;
            if paths.by_len[len].is_empty() || stratum_in_ideal(&relations, &paths, len, field)? {
                m = Some(len);
                break;
            }
        }
        let m = m.ok_or(Error::NotAdmissible { bound })?;
        let (basis, reductions) = quotient_basis(&quiver, &relations, &paths, m, field)?;
        let index: HashMap<Path, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let n = quiver.num_vertices();
        let mut between = vec![vec![Vec::new(); n]; n];
        for (i, p) in basis.iter().enumerate() {
            between[p.source][p.target].push(i);
        }
        let mut alg = Algebra {
            quiver,
            relations,
            field,
            basis,
            nilpotency: m,
            index,
            reductions,
            between,
            mult: Vec::new(),
            op_cache: OnceLock::new(),
        };
        let d = alg.basis.len();
        let mut mult = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                if let Some(p) = alg.basis[i].concat(&alg.basis[j]) {
                    mult[i][j] = alg.reduce_path(&p);
                }
            }
        }
        alg.mult = mult;
        Ok(alg)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn nilpotency_degree(&self) -> usize {
        self.nilpotency
    }

    /// Basis indices of the paths from `s` to `t`, i.e. a basis of `e_s Λ e_t`.
    pub fn between(&self, s: usize, t: usize) -> &[usize] {
        &self.between[s][t]
    }

    /// Basis index of the trivial path at `v`.
    pub fn idempotent(&self, v: usize) -> usize {
        self.index[&Path::trivial(v)]
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Product of two basis elements in basis coordinates.
    pub fn mult(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.mult[i][j]
    }

    /// Expansion of an arbitrary path in the basis.
    pub fn reduce_path(&self, p: &Path) -> Vec<(usize, Scalar)> {
        if p.len() >= self.nilpotency {
            return Vec::new();
        }
        if let Some(&i) = self.index.get(p) {
            return vec![(i, self.field.one())];
        }
        self.reductions.get(p).cloned().unwrap_or_default()
    }

    /// Vertex label.
    pub fn label(&self, v: usize) -> &str {
        &self.quiver.vertices[v]
    }

    pub fn path_name(&self, i: usize) -> String {
        self.basis[i].display(&self.quiver)
    }

    /// `dim e_s Λ e_t`, the number of basis paths from `s` to `t`.
    pub fn paths_between(&self, s: usize, t: usize) -> usize {
        self.between[s][t].len()
    }

    /// The Cartan data: `dim P_i` as a vector over vertices (paths ending at `i`).
    pub fn projective_dims(&self, i: usize) -> Vec<usize> {
        (0..self.num_vertices()).map(|v| self.paths_between(v, i)).collect()
    }

    /// Dimension vector of the injective `I_i` (paths starting at `i`).
    pub fn injective_dims(&self, i: usize) -> Vec<usize> {
        (0..self.num_vertices()).map(|v| self.paths_between(i, v)).collect()
    }

    /// The opposite algebra, presented on the opposite quiver with reversed relations.
    pub fn opposite(&self) -> Result<Algebra> {
        let q = self.quiver.opposite();
        let rels = self
            .relations
            .iter()
            .map(|r| Relation {
                terms: r.terms.iter().map(|(c, p)| (c.clone(), p.reversed())).collect(),
            })
            .collect();
        Algebra::new(q, rels, self.field, self.nilpotency.max(1) + 1)
    }

    /// The opposite algebra, computed once and shared.
    pub fn opposite_shared(&self) -> Arc<Algebra> {
        if let Some(a) = self.op_cache.get() {
            return a.clone();
        }
        let a = Arc::new(self.opposite().expect("the opposite of an admissible algebra is admissible"));
        let _ = self.op_cache.set(a.clone());
        a
    }

    /// Index in the opposite algebra's basis of the reversal of basis path `i`.
    pub fn opposite_index(&self, op: &Algebra, i: usize) -> usize {
        op.basis_index(&self.basis[i].reversed())
            .expect("opposite algebra shares the reversed basis")
    }

    /// Matrix (rows: output coordinates, columns: input coordinates) of right
    /// multiplication by basis element `j` restricted to `e_s Λ e_{source j}`.
    pub fn right_mult_matrix(&self, s: usize, j: usize) -> Matrix {
        let src = self.between(s, self.basis[j].source);
        let dst = self.between(s, self.basis[j].target);
        let mut m = Matrix::zeros(self.field, dst.len(), src.len());
        for (c, &i) in src.iter().enumerate() {
            for (k, v) in self.mult(i, j) {
                let r = dst.iter().position(|x| x == k).unwrap();
                m.set(r, c, m.get(r, c).add_ref(v));
            }
        }
        m
    }

    pub fn summary(&self) -> String {
        format!(
            "{} vertices, {} arrows, {} relations, dim {} over {}, nilpotency degree {}",
            self.num_vertices(),
            self.quiver.arrows.len(),
            self.relations.len(),
            self.dim(),
            self.field,
            self.nilpotency
        )
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary())
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver
            && self.relations == other.relations
            && self.field == other.field
    }
}

impl Eq for Algebra {}

/// All paths up to some length, grouped by length.
struct PathTable {
    by_len: Vec<Vec<Path>>,
    total: usize,
}

impl PathTable {
    fn new(q: &Quiver) -> PathTable {
        let trivial: Vec<Path> = (0..q.num_vertices()).map(Path::trivial).collect();
        let total = trivial.len();
        PathTable {
            by_len: vec![trivial],
            total,
        }
    }

    fn extend_to(&mut self, q: &Quiver, len: usize) -> Result<()> {
        while self.by_len.len() <= len {
            let last = self.by_len.last().unwrap();
            let mut next = Vec::new();
            for p in last {
                for a in q.arrows_from(p.target) {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    next.push(Path {
                        source: p.source,
                        target: q.arrows[a].target,
                        arrows,
                    });
                }
            }
            self.total += next.len();
            if self.total > MAX_PATHS {
                return Err(Error::NotAdmissible {
                    bound: self.by_len.len(),
                });
            }
            self.by_len.push(next);
        }
        Ok(())
    }

    fn upto(&self, len: usize) -> impl Iterator<Item = &Path> {
        self.by_len.iter().take(len + 1).flatten()
    }
}

/// Spanning set of `I` modulo paths longer than `max_len`, as sparse path combinations.
fn ideal_generators(
    relations: &[Relation],
    paths: &PathTable,
    max_len: usize,
    field: Field,
) -> Result<Vec<Vec<(Path, Scalar)>>> {
    let mut out = Vec::new();
    for r in relations {
        let (Some(s), Some(t)) = (r.source(), r.target()) else {
            continue;
        };
        let min = r.min_len();
        if min > max_len {
            continue;
        }
        let budget = max_len - min;
        let lefts: Vec<&Path> = paths.upto(budget).filter(|p| p.target == s).collect();
        let rights: Vec<&Path> = paths.upto(budget).filter(|p| p.source == t).collect();
        for l in &lefts {
            for rt in &rights {
                if l.len() + rt.len() > budget {
                    continue;
                }
                let mut gen = Vec::new();
                for (c, p) in &r.terms {
                    let full = l.concat(p).and_then(|x| x.concat(rt)).unwrap();
                    if full.len() <= max_len {
                        gen.push((full, field.from_rational(c)?));
                    }
                }
                if !gen.is_empty() {
                    out.push(gen);
                }
            }
        }
    }
    Ok(out)
}

/// Columns for the (s, t) block ordered longest first, so pivots land on long paths.
fn block_columns(paths: &PathTable, max_len: usize) -> HashMap<(usize, usize), Vec<Path>> {
    let mut blocks: HashMap<(usize, usize), Vec<Path>> = HashMap::new();
    for p in paths.upto(max_len) {
        blocks.entry((p.source, p.target)).or_default().push(p.clone());
    }
    for cols in blocks.values_mut() {
        cols.sort_by(|a, b| b.canonical_key().cmp(&a.canonical_key()));
    }
    blocks
}

fn block_matrix(
    field: Field,
    gens: &[Vec<(Path, Scalar)>],
    cols: &[Path],
    key: (usize, usize),
) -> Matrix {
    let pos: HashMap<&Path, usize> = cols.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let rows: Vec<Vec<Scalar>> = gens
        .iter()
        .filter(|g| g.first().map(|(p, _)| (p.source, p.target)) == Some(key))
        .map(|g| {
            let mut row = vec![field.zero(); cols.len()];
            for (p, c) in g {
                let i = pos[p];
                row[i] = row[i].add_ref(c);
            }
            row
        })
        .collect();
    Matrix::from_rows(field, cols.len(), rows)
}

/// Decides whether every path of length `len` lies in `I + R^{len+1}`.
fn stratum_in_ideal(relations: &[Relation], paths: &PathTable, len: usize, field: Field) -> Result<bool> {
    let gens = ideal_generators(relations, paths, len, field)?;
    for (key, cols) in block_columns(paths, len) {
        let top: Vec<usize> = (0..cols.len()).filter(|&i| cols[i].len() == len).collect();
        if top.is_empty() {
            continue;
        }
        let rest: Vec<usize> = (0..cols.len()).filter(|&i| cols[i].len() < len).collect();
        let m = block_matrix(field, &gens, &cols, key);
        let full = m.rank();
        let projected = m.select_columns(&rest).rank();
        if full - projected != top.len() {
            return Ok(false);
        }
    }
    Ok(true)
}

type Reductions = HashMap<Path, Vec<(usize, Scalar)>>;

/// Basis of `kQ/I` given `R^m ⊆ I`, plus expansions of the non-basis paths shorter than `m`.
fn quotient_basis(
    q: &Quiver,
    relations: &[Relation],
    paths: &PathTable,
    m: usize,
    field: Field,
) -> Result<(Vec<Path>, Reductions)> {
    let max_len = m - 1;
    let gens = ideal_generators(relations, paths, max_len, field)?;
    let mut basis = Vec::new();
    let mut pivot_rows: Vec<(Path, Vec<(Path, Scalar)>)> = Vec::new();
    let mut blocks: Vec<_> = block_columns(paths, max_len).into_iter().collect();
    blocks.sort_by(|a, b| a.0.cmp(&b.0));
    for (key, cols) in blocks {
        let (r, pivots) = block_matrix(field, &gens, &cols, key).rref();
        let mut is_pivot = vec![false; cols.len()];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for (i, p) in cols.iter().enumerate() {
            if !is_pivot[i] {
                basis.push(p.clone());
            }
        }
        for (row, &pc) in pivots.iter().enumerate() {
            let tail: Vec<(Path, Scalar)> = (0..cols.len())
                .filter(|&c| !is_pivot[c] && !r.get(row, c).is_zero())
                .map(|c| (cols[c].clone(), r.get(row, c).neg_ref()))
                .collect();
            pivot_rows.push((cols[pc].clone(), tail));
        }
    }
    basis.sort_by_key(|p| p.canonical_key());
    for v in 0..q.num_vertices() {
        if !basis.contains(&Path::trivial(v)) {
            return Err(Error::NotAdmissible { bound: m });
        }
    }
    let index: HashMap<&Path, usize> = basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let reductions = pivot_rows
        .into_iter()
        .map(|(p, tail)| {
            let exp = tail.into_iter().map(|(b, c)| (index[&b], c)).collect();
            (p, exp)
        })
        .collect();
    Ok((basis, reductions))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow(name: &str, s: usize, t: usize) -> Arrow {
        Arrow {
            name: name.into(),
            source: s,
            target: t,
        }
    }

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn a3_has_six_paths() {
        let q = Quiver::new(labels(3), vec![arrow("a", 0, 1), arrow("b", 1, 2)]).unwrap();
        let a = Algebra::new(q, vec![], Field::Rationals, 30).unwrap();
        assert_eq!(a.dim(), 6);
        assert_eq!(a.nilpotency_degree(), 3);
        assert_eq!(a.projective_dims(2), vec![1, 1, 1]);
        assert_eq!(a.projective_dims(0), vec![1, 0, 0]);
    }

    #[test]
    fn square_algebra_kills_two_cycles() {
        let q = Quiver::new(labels(2), vec![arrow("alpha", 0, 1), arrow("beta", 1, 0)]).unwrap();
        let one = BigRational::from_integer(1.into());
        let rels = vec![
            Relation::new(&q, vec![(one.clone(), Path::from_arrows(&q, vec![0, 1]).unwrap())]).unwrap(),
            Relation::new(&q, vec![(one, Path::from_arrows(&q, vec![1, 0]).unwrap())]).unwrap(),
        ];
        let a = Algebra::new(q.clone(), rels, Field::Rationals, 30).unwrap();
        assert_eq!(a.dim(), 4);
        assert_eq!(a.nilpotency_degree(), 2);
        let ab = Path::from_arrows(&q, vec![0, 1]).unwrap();
        assert!(a.reduce_path(&ab).is_empty());
    }

    #[test]
    fn oriented_cycle_without_relations_is_rejected() {
        let q = Quiver::new(labels(1), vec![arrow("x", 0, 0)]).unwrap();
        assert_eq!(
            Algebra::new(q, vec![], Field::Rationals, 8).unwrap_err(),
            Error::NotAdmissible { bound: 8 }
        );
    }

    #[test]
    fn commutativity_relation_reduces() {
        // 1 -a-> 2 -b-> 4, 1 -c-> 3 -d-> 4 with a*b = c*d
        let q = Quiver::new(
            labels(4),
            vec![arrow("a", 0, 1), arrow("b", 1, 3), arrow("c", 0, 2), arrow("d", 2, 3)],
        )
        .unwrap();
        let one = BigRational::from_integer(1.into());
        let ab = Path::from_arrows(&q, vec![0, 1]).unwrap();
        let cd = Path::from_arrows(&q, vec![2, 3]).unwrap();
        let rel = Relation::new(&q, vec![(one.clone(), ab.clone()), (-one, cd.clone())]).unwrap();
        let a = Algebra::new(q, vec![rel], Field::Rationals, 30).unwrap();
        assert_eq!(a.dim(), 9);
        let r1 = a.reduce_path(&ab);
        let r2 = a.reduce_path(&cd);
        assert_eq!(r1, r2);
    }
}
