//! Brute-force linear algebra over exact rationals, kept apart from the library
//! so it can serve as an independent check.

use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use siltlab::algebra::Algebra;
use siltlab::rep::{projmap_to_morphism, Module, Morphism};
use siltlab::twoterm::Complex;
use siltlab::Scalar;

type Q = BigRational;
/// Per vertex, a dense `rows x cols` matrix.
type Blocks = Vec<Vec<Vec<Q>>>;

fn q(s: &Scalar) -> Q {
    match s {
        Scalar::Q(r) => r.clone(),
        Scalar::F(..) => panic!("the oracle works over the rationals"),
    }
}

fn dense(m: &siltlab::Matrix) -> Vec<Vec<Q>> {
    (0..m.rows()).map(|r| (0..m.cols()).map(|c| q(m.get(r, c))).collect()).collect()
}

/// Row-reduces in place and returns the pivot columns.
fn reduce(rows: &mut [Vec<Q>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = Q::one() / rows[r][c].clone();
        for v in rows[r].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let d = rows[r][j].clone() * f.clone();
                    rows[i][j] = rows[i][j].clone() - d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let n = rows.first().map_or(0, Vec::len);
    reduce(&mut rows, n).len()
}

fn nullspace(mut rows: Vec<Vec<Q>>, ncols: usize) -> Vec<Vec<Q>> {
    let pivots = reduce(&mut rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -rows[r][f].clone();
            }
            v
        })
        .collect()
}

fn mul(a: &[Vec<Q>], b: &[Vec<Q>], inner: usize, cols: usize) -> Vec<Vec<Q>> {
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Q::zero(), |acc, k| acc + row[k].clone() * b[k][j].clone()))
                .collect()
        })
        .collect()
}

/// Solves `f_s · M(a) = N(a) · f_t` for every arrow `a: s -> t` directly.
pub fn hom_basis(m: &Module, n: &Module) -> Vec<Blocks> {
    let (md, nd) = (m.dims(), n.dims());
    let mut offset = vec![0];
    for v in 0..md.len() {
        offset.push(offset[v] + nd[v] * md[v]);
    }
    let unknowns = offset[md.len()];
    let var = |v: usize, i: usize, j: usize| offset[v] + i * md[v] + j;
    let q_arrows = &m.algebra().quiver().arrows;
    let mut eqs = Vec::new();
    for (a, arrow) in q_arrows.iter().enumerate() {
        let (s, t) = (arrow.source, arrow.target);
        let (ma, na) = (dense(m.map(a)), dense(n.map(a)));
        for i in 0..nd[s] {
            for j in 0..md[t] {
                let mut row = vec![Q::zero(); unknowns];
                for k in 0..md[s] {
                    row[var(s, i, k)] += ma[k][j].clone();
                }
                for k in 0..nd[t] {
                    row[var(t, k, j)] -= na[i][k].clone();
                }
                eqs.push(row);
            }
        }
    }
    let sols = if eqs.is_empty() {
        (0..unknowns)
            .map(|i| (0..unknowns).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
            .collect()
    } else {
        nullspace(eqs, unknowns)
    };
    sols.into_iter()
        .map(|s| {
            (0..md.len())
                .map(|v| (0..nd[v]).map(|i| (0..md[v]).map(|j| s[var(v, i, j)].clone()).collect()).collect())
                .collect()
        })
        .collect()
}

pub fn hom_dim(m: &Module, n: &Module) -> usize {
    hom_basis(m, n).len()
}

fn from_morphism(f: &Morphism) -> Blocks {
    f.blocks.iter().map(dense).collect()
}

/// `f` then `g`, given the vertex dimensions of the source and middle.
fn compose(f: &Blocks, g: &Blocks, src: &[usize], mid: &[usize]) -> Blocks {
    f.iter()
        .zip(g)
        .enumerate()
        .map(|(v, (f, g))| mul(g, f, mid[v], src[v]))
        .collect()
}

fn flatten(f: &Blocks) -> Vec<Q> {
    f.iter().flatten().flatten().cloned().collect()
}

struct Terms {
    m1: Module,
    m0: Module,
    d: Blocks,
}

fn terms(alg: &Arc<Algebra>, x: &Complex) -> Terms {
    Terms {
        m1: Module::projective_sum(alg, x.src()),
        m0: Module::projective_sum(alg, x.tgt()),
        d: from_morphism(&projmap_to_morphism(alg, x.differential())),
    }
}

/// `dim Hom(X⁻¹, Y⁰) - dim(x·Hom(X⁰, Y⁰) + Hom(X⁻¹, Y⁻¹)·y)`.
pub fn e_dim(alg: &Arc<Algebra>, x: &Complex, y: &Complex) -> usize {
    let (tx, ty) = (terms(alg, x), terms(alg, y));
    let total = hom_dim(&tx.m1, &ty.m0);
    let mut span = Vec::new();
    for h in hom_basis(&tx.m0, &ty.m0) {
        span.push(flatten(&compose(&tx.d, &h, tx.m1.dims(), tx.m0.dims())));
    }
    for h in hom_basis(&tx.m1, &ty.m1) {
        span.push(flatten(&compose(&h, &ty.d, tx.m1.dims(), ty.m1.dims())));
    }
    total - if span.is_empty() { 0 } else { rank(span) }
}

/// Chain maps modulo null-homotopic ones.
pub fn hom_k_dim(alg: &Arc<Algebra>, x: &Complex, y: &Complex) -> usize {
    let (tx, ty) = (terms(alg, x), terms(alg, y));
    let b1 = hom_basis(&tx.m1, &ty.m1);
    let b0 = hom_basis(&tx.m0, &ty.m0);
    // coefficients (a, b) with x·(Σ b f0) = (Σ a f1)·y
    let mut cols: Vec<Vec<Q>> = Vec::new();
    for f in &b1 {
        cols.push(flatten(&compose(f, &ty.d, tx.m1.dims(), ty.m1.dims())));
    }
    for f in &b0 {
        let v = flatten(&compose(&tx.d, f, tx.m1.dims(), tx.m0.dims()));
        cols.push(v.into_iter().map(|e| -e).collect());
    }
    let unknowns = cols.len();
    let len = cols.first().map_or(0, Vec::len);
    let chain_maps = if unknowns == 0 {
        Vec::new()
    } else if len == 0 {
        (0..unknowns)
            .map(|i| (0..unknowns).map(|j| if i == j { Q::one() } else { Q::zero() }).collect())
            .collect()
    } else {
        let eqs: Vec<Vec<Q>> = (0..len).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
        nullspace(eqs, unknowns)
    };
    // null-homotopic maps (x·h, h·y) in the same coordinates
    let coords = |f1: &Blocks, f0: &Blocks| -> Vec<Q> {
        let mut v = flatten(f1);
        v.extend(flatten(f0));
        v
    };
    let expand = |c: &[Q]| -> Vec<Q> {
        let mut f1: Blocks = hom_zero(&tx.m1, &ty.m1);
        let mut f0: Blocks = hom_zero(&tx.m0, &ty.m0);
        for (k, f) in b1.iter().enumerate() {
            add_scaled(&mut f1, f, &c[k]);
        }
        for (k, f) in b0.iter().enumerate() {
            add_scaled(&mut f0, f, &c[b1.len() + k]);
        }
        coords(&f1, &f0)
    };
    let maps: Vec<Vec<Q>> = chain_maps.iter().map(|c| expand(c)).collect();
    let homotopies: Vec<Vec<Q>> = hom_basis(&tx.m0, &ty.m1)
        .iter()
        .map(|h| {
            coords(
                &compose(&tx.d, h, tx.m1.dims(), tx.m0.dims()),
                &compose(h, &ty.d, tx.m0.dims(), ty.m1.dims()),
            )
        })
        .collect();
    let r = |v: &Vec<Vec<Q>>| if v.is_empty() || v[0].is_empty() { 0 } else { rank(v.clone()) };
    let mut all = maps.clone();
    all.extend(homotopies.iter().cloned());
    assert_eq!(r(&all), r(&maps), "null-homotopic maps must be chain maps");
    r(&maps) - r(&homotopies)
}

fn hom_zero(m: &Module, n: &Module) -> Blocks {
    (0..m.dims().len())
        .map(|v| vec![vec![Q::zero(); m.dims()[v]]; n.dims()[v]])
        .collect()
}

fn add_scaled(acc: &mut Blocks, f: &Blocks, s: &Q) {
    for (a, b) in acc.iter_mut().zip(f) {
        for (ra, rb) in a.iter_mut().zip(b) {
            for (x, y) in ra.iter_mut().zip(rb) {
                *x += y.clone() * s.clone();
            }
        }
    }
}
