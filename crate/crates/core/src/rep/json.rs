//! JSON form of modules and morphisms: dimension vectors plus row-major matrices of
//! exact scalars written as strings ("p/q" over Q, residues over F_p).

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{Module, Morphism};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowMatrixJson {
    pub arrow: String,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub dims: Vec<usize>,
    pub arrows: Vec<ArrowMatrixJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismJson {
    pub blocks: Vec<Vec<Vec<String>>>,
}

pub(crate) fn matrix_to_json(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|s| s.to_canonical()).collect())
        .collect()
}

pub(crate) fn matrix_from_json(alg: &Algebra, rows: usize, cols: usize, data: &[Vec<String>]) -> Result<Matrix> {
    let f = alg.field();
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return Err(Error::InvalidRepresentation(format!("expected a {rows} x {cols} matrix")));
    }
    let mut m = Matrix::zeros(f, rows, cols);
    for (i, row) in data.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            m.set(i, j, f.parse(s)?);
        }
    }
    Ok(m)
}

impl Module {
    pub fn to_json(&self) -> ModuleJson {
        let q = self.algebra().quiver();
        ModuleJson {
            dims: self.dims().to_vec(),
            arrows: q
                .arrows
                .iter()
                .zip(self.maps())
                .map(|(a, m)| ArrowMatrixJson {
                    arrow: a.name.clone(),
                    matrix: matrix_to_json(m),
                })
                .collect(),
        }
    }

    pub fn from_json(alg: &Arc<Algebra>, j: &ModuleJson) -> Result<Module> {
        let q = alg.quiver();
        if j.dims.len() != q.num_vertices() {
            return Err(Error::InvalidRepresentation("wrong number of vertices".into()));
        }
        let mut maps = Vec::with_capacity(q.arrows.len());
        for a in &q.arrows {
            let entry = j
                .arrows
                .iter()
                .find(|x| x.arrow == a.name)
                .ok_or_else(|| Error::UnknownArrow(a.name.clone()))?;
            maps.push(matrix_from_json(alg, j.dims[a.source], j.dims[a.target], &entry.matrix)?);
        }
        Module::new(alg.clone(), j.dims.clone(), maps)
    }
}

impl Morphism {
    pub fn to_json(&self) -> MorphismJson {
        MorphismJson {
            blocks: self.blocks.iter().map(matrix_to_json).collect(),
        }
    }
}
