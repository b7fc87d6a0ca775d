//! JSON form of complexes: multiplicity vectors plus the non-zero differential terms.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::Complex;
use crate::algebra::{Algebra, ProjMap};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferentialEntryJson {
    /// Summand index in degree −1.
    pub row: usize,
    /// Summand index in degree 0.
    pub col: usize,
    pub source: String,
    pub target: String,
    pub path: String,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub mult_m1: Vec<usize>,
    pub mult_0: Vec<usize>,
    pub differential: Vec<DifferentialEntryJson>,
}

fn expand(mult: &[usize]) -> Vec<usize> {
    mult.iter().enumerate().flat_map(|(v, &k)| std::iter::repeat_n(v, k)).collect()
}

impl Complex {
    /// The same complex with summands sorted by vertex in each degree.
    pub fn canonical(&self) -> Complex {
        let order = |vs: &[usize]| {
            let mut idx: Vec<usize> = (0..vs.len()).collect();
            idx.sort_by_key(|&i| vs[i]);
            idx
        };
        Complex {
            alg: self.alg.clone(),
            d: self.d.select(&order(&self.d.src), &order(&self.d.tgt)),
        }
    }

    pub fn to_json(&self) -> ComplexJson {
        let c = self.canonical();
        let alg = &c.alg;
        let mut differential = Vec::new();
        for r in 0..c.d.rows() {
            for col in 0..c.d.cols() {
                let mut terms: Vec<(usize, String, String)> = c
                    .d
                    .get(r, col)
                    .support()
                    .map(|(i, s)| (alg.basis()[i].len(), alg.path_name(i), s.to_canonical()))
                    .collect();
                terms.sort();
                for (_, path, coeff) in terms {
                    differential.push(DifferentialEntryJson {
                        row: r,
                        col,
                        source: alg.label(c.d.src[r]).to_string(),
                        target: alg.label(c.d.tgt[col]).to_string(),
                        path,
                        coeff,
                    });
                }
            }
        }
        ComplexJson {
            mult_m1: c.mult_m1(),
            mult_0: c.mult_0(),
            differential,
        }
    }

    pub fn from_json(alg: &Arc<Algebra>, j: &ComplexJson) -> Result<Complex> {
        let n = alg.num_vertices();
        if j.mult_m1.len() != n || j.mult_0.len() != n {
            return Err(Error::InvalidComplex("multiplicity vectors have the wrong length".into()));
        }
        let (src, tgt) = (expand(&j.mult_m1), expand(&j.mult_0));
        let mut d = ProjMap::zero(alg, &src, &tgt);
        let f = alg.field();
        for e in &j.differential {
            if e.row >= src.len() || e.col >= tgt.len() {
                return Err(Error::InvalidComplex(format!("entry ({}, {}) out of range", e.row, e.col)));
            }
            let b = (0..alg.dim())
                .find(|&i| alg.path_name(i) == e.path)
                .ok_or_else(|| Error::InvalidComplex(format!("unknown basis path `{}`", e.path)))?;
            let mut elem = d.get(e.row, e.col).clone();
            elem.0[b] = elem.0[b].add_ref(&f.parse(&e.coeff)?);
            d.set(e.row, e.col, elem);
        }
        Complex::new(alg, d)
    }
}
