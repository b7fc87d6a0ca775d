//! Enumeration of indecomposable modules up to a dimension bound.

use std::sync::Arc;

use serde::Serialize;

use super::{EndRadical, Module};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::Matrix;

/// How indecomposables are searched for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Strategy {
    /// Knit from projectives with τ, τ⁻¹ and almost split sequences.
    Knitting,
    /// Exhaust arrow matrices with entries in `0..prime`, lifted to the ground field.
    Exhaustive { prime: u32 },
    /// Both of the above.
    Combined { prime: u32 },
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationOptions {
    pub strategy: Strategy,
    /// Largest total dimension explored.
    pub dim_bound: usize,
    /// Largest number of matrix tuples scanned per dimension vector.
    pub tuple_cap: u64,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            strategy: Strategy::Knitting,
            dim_bound: 12,
            tuple_cap: 1 << 16,
        }
    }
}

/// A list of pairwise non-isomorphic indecomposable modules with stable names.
#[derive(Clone, Debug)]
pub struct ModuleUniverse {
    alg: Arc<Algebra>,
    modules: Vec<Module>,
    names: Vec<String>,
    tops: Vec<EndRadical>,
    complete: bool,
    notes: Vec<String>,
}

impl ModuleUniverse {
    pub fn enumerate(alg: &Arc<Algebra>, opts: &EnumerationOptions) -> Result<ModuleUniverse> {
        let mut found: Vec<Module> = Vec::new();
        let mut complete = true;
        let mut notes = Vec::new();
        let knit = matches!(opts.strategy, Strategy::Knitting | Strategy::Combined { .. });
        if knit {
            let closed = knitting(alg, opts.dim_bound, &mut found);
            if !closed {
                complete = false;
                notes.push(format!("knitting truncated at dimension {}", opts.dim_bound));
            }
        }
        if let Strategy::Exhaustive { prime } | Strategy::Combined { prime } = opts.strategy {
            let (capped, total) = exhaustive(alg, prime, opts.dim_bound, opts.tuple_cap, &mut found);
            if !knit {
                complete = false;
                notes.push(format!("exhaustive scan over entries 0..{prime}, dimension <= {}", opts.dim_bound));
            }
            if capped {
                notes.push(format!("tuple cap {} hit; {} tuples scanned", opts.tuple_cap, total));
            }
        }
        Ok(ModuleUniverse::from_modules(alg, found, complete, notes))
    }

    /// Wraps a list of indecomposables, sorting and naming them.
    pub fn from_modules(alg: &Arc<Algebra>, mut modules: Vec<Module>, complete: bool, notes: Vec<String>) -> ModuleUniverse {
        modules.sort_by(|a, b| (a.dim(), b.dims()).cmp(&(b.dim(), a.dims())));
        let n = alg.num_vertices();
        let special: Vec<(String, Module)> = (0..n)
            .flat_map(|v| {
                let l = alg.label(v);
                [
                    (format!("P{l}"), Module::projective(alg, v).unwrap()),
                    (format!("I{l}"), Module::injective(alg, v).unwrap()),
                    (format!("S{l}"), Module::simple(alg, v).unwrap()),
                ]
            })
            .collect();
        let order = |name: &str| match &name[..1] {
            "P" => 0,
            "I" => 1,
            _ => 2,
        };
        let mut names: Vec<String> = Vec::new();
        for m in &modules {
            let mut hits: Vec<&String> = special.iter().filter(|(_, s)| s.is_isomorphic(m)).map(|(k, _)| k).collect();
            hits.sort_by_key(|k| order(k));
            let name = match hits.first() {
                Some(k) => (*k).clone(),
                None => {
                    let base = format!(
                        "M({})",
                        m.dims().iter().map(usize::to_string).collect::<Vec<_>>().join(",")
                    );
                    let k = names.iter().filter(|x| x.split('#').next() == Some(base.as_str())).count();
                    if k == 0 {
                        base
                    } else {
                        format!("{base}#{}", k + 1)
                    }
                }
            };
            names.push(name);
        }
        let tops = modules.iter().map(Module::end_radical).collect();
        ModuleUniverse {
            alg: alg.clone(),
            modules,
            names,
            tops,
            complete,
            notes,
        }
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn modules(&self) -> &[Module] {
        &self.modules
    }

    pub fn get(&self, i: usize) -> &Module {
        &self.modules[i]
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Index of the member isomorphic to `m`.
    pub fn index_of(&self, m: &Module) -> Option<usize> {
        self.modules.iter().position(|u| u.is_isomorphic(m))
    }

    /// Multiplicity of each member as a summand of `z`, via the rank of the
    /// composition pairing `Hom(Z,U) x Hom(U,Z) -> End(U)/rad`.
    pub fn multiplicities(&self, z: &Module) -> Result<Vec<usize>> {
        let f = self.alg.field();
        let mut out = vec![0; self.len()];
        let mut covered = 0;
        for (i, u) in self.modules.iter().enumerate() {
            let into = u.hom(z);
            if into.dim() == 0 {
                continue;
            }
            let back = z.hom(u);
            let top = &self.tops[i];
            let r = top.top_dim();
            let rows: Vec<Vec<Scalar>> = into
                .basis
                .iter()
                .map(|fi| back.basis.iter().flat_map(|gj| top.top_coords(&fi.then(gj))).collect())
                .collect();
            let rank = Matrix::from_rows(f, back.dim() * r, rows).rank();
            out[i] = rank / r;
            covered += out[i] * u.dim();
        }
        if covered != z.dim() {
            return Err(Error::Incomplete(format!(
                "summands found account for dimension {covered} of {}",
                z.dim()
            )));
        }
        Ok(out)
    }

    /// Indices (with repetition) of the indecomposable summands of `z`.
    pub fn identify(&self, z: &Module) -> Result<Vec<usize>> {
        Ok(self
            .multiplicities(z)?
            .into_iter()
            .enumerate()
            .flat_map(|(i, k)| std::iter::repeat_n(i, k))
            .collect())
    }
}

fn insert(found: &mut Vec<Module>, m: Module) -> bool {
    if found.iter().any(|x| x.dims() == m.dims() && x.is_isomorphic(&m)) {
        return false;
    }
    found.push(m);
    true
}

/// Knits the AR components containing the seeds. Returns false when the bound cut it off.
fn knitting(alg: &Arc<Algebra>, bound: usize, found: &mut Vec<Module>) -> bool {
    let n = alg.num_vertices();
    let mut queue: Vec<Module> = Vec::new();
    let mut closed = true;
    for v in 0..n {
        let p = Module::projective(alg, v).unwrap();
        let i = Module::injective(alg, v).unwrap();
        queue.push(p.clone());
        queue.push(i.clone());
        queue.push(Module::simple(alg, v).unwrap());
        queue.extend(p.radical().0.decompose().summands);
        let soc = i.socle_bases();
        queue.extend(i.quotient(&soc).unwrap().0.decompose().summands);
    }
    let mut head = 0;
    let mut pending: Vec<Module> = Vec::new();
    loop {
        for m in queue.drain(..) {
            if m.is_zero() {
                continue;
            }
            if m.dim() > bound {
                closed = false;
                continue;
            }
            if insert(found, m.clone()) {
                pending.push(m);
            }
        }
        if head >= pending.len() {
            break;
        }
        let m = pending[head].clone();
        head += 1;
        if !m.is_projective() {
            queue.extend(m.tau().decompose().summands);
            if let Ok(seq) = m.ar_sequence() {
                queue.extend(seq.middle_summands);
            }
        }
        if !m.is_injective() {
            let t = m.tau_inverse();
            if t.dim() > bound {
                closed = false;
            } else {
                queue.extend(t.decompose().summands);
            }
        }
    }
    closed
}

/// Scans matrix tuples over `0..prime`; returns (cap hit, tuples scanned).
fn exhaustive(alg: &Arc<Algebra>, prime: u32, bound: usize, cap: u64, found: &mut Vec<Module>) -> (bool, u64) {
    let q = alg.quiver();
    let f = alg.field();
    let n = q.num_vertices();
    let mut capped = false;
    let mut scanned = 0u64;
    for dims in dim_vectors(n, bound) {
        let shapes: Vec<(usize, usize)> = q.arrows.iter().map(|a| (dims[a.source], dims[a.target])).collect();
        let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
        let count = (prime as u64).checked_pow(entries as u32).unwrap_or(u64::MAX);
        if count > cap {
            capped = true;
            continue;
        }
        for code in 0..count {
            scanned += 1;
            let mut c = code;
            let maps: Vec<Matrix> = shapes
                .iter()
                .map(|&(r, k)| {
                    Matrix::from_fn(f, r, k, |_, _| {
                        let d = c % prime as u64;
                        c /= prime as u64;
                        f.from_i64(d as i64)
                    })
                })
                .collect();
            let Ok(m) = Module::new(alg.clone(), dims.clone(), maps) else {
                continue;
            };
            if found.iter().any(|x| x.dims() == m.dims() && x.is_isomorphic(&m)) {
                continue;
            }
            for s in m.decompose().summands {
                insert(found, s);
            }
        }
    }
    (capped, scanned)
}

/// Nonzero dimension vectors of total dimension at most `bound`, by total then lexicographically.
fn dim_vectors(n: usize, bound: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for d in 0..=left {
            cur.push(d);
            rec(n, left - d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, bound, &mut Vec::new(), &mut out);
    out.retain(|d| d.iter().sum::<usize>() > 0);
    out.sort_by(|a, b| (a.iter().sum::<usize>(), b).cmp(&(b.iter().sum::<usize>(), a)));
    out
}
