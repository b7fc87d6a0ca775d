//! Krull-Schmidt decomposition by Fitting splitting.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{HomSpace, Module, Morphism};
use crate::field::{Field, Scalar};
use crate::matrix::{Coordinates, Matrix};

/// `End(M)` with its Jacobson radical (trace-form criterion).
#[derive(Clone, Debug)]
pub struct EndRadical {
    pub end: HomSpace,
    /// Radical basis, in coordinates of `end`.
    pub radical: Vec<Vec<Scalar>>,
    comp: Coordinates,
}

impl EndRadical {
    /// `dim End / rad End`.
    pub fn top_dim(&self) -> usize {
        self.end.dim() - self.radical.len()
    }

    /// Coordinates of the class of `phi` in `End / rad End`.
    pub fn top_coords(&self, phi: &Morphism) -> Vec<Scalar> {
        let x = self.end.coords(phi).expect("argument must be an endomorphism");
        let c = self.comp.coords(&x).expect("complement spans");
        c[self.radical.len()..].to_vec()
    }

    pub fn is_radical(&self, phi: &Morphism) -> bool {
        self.top_coords(phi).iter().all(Scalar::is_zero)
    }

    pub fn radical_morphisms(&self) -> Vec<Morphism> {
        self.radical.iter().map(|c| self.end.combine(c)).collect()
    }
}

/// Indecomposable summands of a module.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub summands: Vec<Module>,
    /// False when some summand has `End/rad` of dimension > 1 and no split was found.
    pub certified: bool,
    pub seed: u64,
}

pub(crate) fn trace(m: &Morphism) -> Scalar {
    let f = m.blocks.first().map(Matrix::field).unwrap_or(Field::Rationals);
    m.blocks.iter().fold(f.zero(), |acc, b| acc.add_ref(&b.trace()))
}

impl Module {
    pub fn end_radical(&self) -> EndRadical {
        let f = self.field();
        let end = self.end();
        let d = end.dim();
        let mut form = Matrix::zeros(f, d, d);
        for i in 0..d {
            for j in i..d {
                let t = trace(&end.basis[i].then(&end.basis[j]));
                form.set(i, j, t.clone());
                form.set(j, i, t);
            }
        }
        let radical = form.nullspace();
        let mut vecs = radical.clone();
        for i in 0..d {
            let mut e = vec![f.zero(); d];
            e[i] = f.one();
            vecs.push(e);
        }
        let comp = Coordinates::new(f, d, &vecs);
        EndRadical { end, radical, comp }
    }

    pub fn decompose(&self) -> Decomposition {
        self.decompose_seeded(crate::DEFAULT_SEED)
    }

    /// Iterated Fitting decomposition with a reproducible random stream.
    pub fn decompose_seeded(&self, seed: u64) -> Decomposition {
        let mut rng = crate::seeded_rng(seed);
        let mut todo = vec![self.clone()];
        let mut out = Vec::new();
        let mut certified = true;
        while let Some(m) = todo.pop() {
            if m.is_zero() {
                continue;
            }
            match split(&m, &mut rng) {
                Split::Parts(a, b) => {
                    todo.push(b);
                    todo.push(a);
                }
                Split::Indecomposable => out.push(m),
                Split::Unknown => {
                    certified = false;
                    out.push(m);
                }
            }
        }
        Decomposition {
            summands: out,
            certified,
            seed,
        }
    }

    pub fn is_indecomposable(&self) -> bool {
        !self.is_zero() && self.decompose().summands.len() == 1
    }
}

enum Split {
    Parts(Module, Module),
    Indecomposable,
    Unknown,
}

fn split<R: rand::Rng>(m: &Module, rng: &mut R) -> Split {
    let er = m.end_radical();
    if er.top_dim() <= 1 {
        return Split::Indecomposable;
    }
    let mut candidates: Vec<Morphism> = er.end.basis.clone();
    for _ in 0..32 {
        candidates.push(er.end.random_element(rng));
    }
    for f in &candidates {
        if let Some((a, b)) = fitting_split(m, f) {
            return Split::Parts(a, b);
        }
    }
    Split::Unknown
}

/// Splits `m` along `ker (f - λ)^N ⊕ im (f - λ)^N` for a rational eigenvalue `λ`.
fn fitting_split(m: &Module, f: &Morphism) -> Option<(Module, Module)> {
    let fld = m.field();
    let total = m.total_matrix(f);
    let n = m.dims().iter().copied().max().unwrap_or(0);
    for lambda in eigenvalues(&total.char_poly(), fld) {
        let mut kers = Vec::new();
        let mut ims = Vec::new();
        let mut kdim = 0;
        for (v, b) in f.blocks.iter().enumerate() {
            let d = m.dims()[v];
            let g = b.sub(&Matrix::identity(fld, d).scale(&lambda)).pow(n);
            let k = Matrix::from_columns(fld, d, &g.nullspace());
            kdim += k.cols();
            kers.push(k);
            ims.push(g.column_space());
        }
        if kdim == 0 || kdim == m.dim() {
            continue;
        }
        let (a, _) = m.submodule(&kers).ok()?;
        let (b, _) = m.submodule(&ims).ok()?;
        return Some((a, b));
    }
    None
}

/// Roots in the ground field of a monic polynomial given by coefficients `c_0..c_n`.
pub(crate) fn eigenvalues(poly: &[Scalar], field: Field) -> Vec<Scalar> {
    match field {
        Field::Prime(p) => {
            let coeffs: Vec<u64> = poly.iter().map(|c| c.to_i64().unwrap_or(0).rem_euclid(p as i64) as u64).collect();
            (0..p as u64)
                .filter(|&x| coeffs.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p as u64) == 0)
                .map(|x| field.from_i64(x as i64))
                .collect()
        }
        Field::Rationals => rational_roots(poly),
    }
}

fn rational_roots(poly: &[Scalar]) -> Vec<Scalar> {
    let qs: Vec<BigRational> = poly.iter().map(Scalar::to_rational).collect();
    let lcm = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut ints: Vec<BigInt> = qs.iter().map(|q| (q * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    let lead = ints.iter().take_while(|c| c.is_zero()).count();
    if lead > 0 {
        roots.push(BigRational::zero());
        ints.drain(..lead);
    }
    if ints.len() <= 1 {
        return roots.into_iter().map(|r| Field::Rationals.from_rational(&r).unwrap()).collect();
    }
    let a0 = ints[0].abs();
    let an = ints.last().unwrap().abs();
    let eval = |x: &BigRational| {
        ints.iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
            .is_zero()
    };
    for p in divisors(&a0) {
        for q in divisors(&an) {
            for sign in [1i64, -1] {
                let x = BigRational::new(BigInt::from(p * sign), BigInt::from(q));
                if !roots.contains(&x) && eval(&x) {
                    roots.push(x);
                }
            }
        }
    }
    roots
        .into_iter()
        .map(|r| Field::Rationals.from_rational(&r).unwrap())
        .collect()
}

/// Positive divisors of `n`; values too large to factor by trial division yield `{1}`.
fn divisors(n: &BigInt) -> Vec<i64> {
    let Some(n) = n.to_i64().filter(|&v| v > 0 && v < 1 << 40) else {
        return vec![1];
    };
    let mut out = Vec::new();
    let mut d = 1i64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_roots_of_quadratic() {
        let f = Field::Rationals;
        // (x - 2)(x + 1/2) = x^2 - 3/2 x - 1
        let poly = vec![f.from_i64(-1), f.parse("-3/2").unwrap(), f.one()];
        let mut r: Vec<String> = eigenvalues(&poly, f).iter().map(Scalar::to_string).collect();
        r.sort();
        assert_eq!(r, vec!["-1/2", "2"]);
    }

    #[test]
    fn irreducible_quadratic_has_no_roots() {
        let f = Field::Rationals;
        let poly = vec![f.one(), f.zero(), f.one()];
        assert!(eigenvalues(&poly, f).is_empty());
        let g = Field::Prime(5);
        let roots = eigenvalues(&[g.one(), g.zero(), g.one()], g);
        assert_eq!(roots.len(), 2);
    }
}
