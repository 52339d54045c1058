//! JSON form of matrix tuples and basis completions.
//!
//! ```text
//! tuple:      {"flavor": "mult" | "add", "size": n, "variables": [...],
//!              "matrices": [[e_11, e_12, ..., e_nn], ...]}
//! completion: {"size": n, "entries": [e_11, e_12, ..., e_nn]}
//! ```
//!
//! Matrix entries are row-major expressions in the tuple's variables.

use okamoto_algebra::{parse, print, Matrix, Ring};
use serde::{Deserialize, Serialize};

use crate::tuple::{Flavor, MatrixTuple};
use crate::ConvolutionError;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TupleJson {
    pub flavor: String,
    pub size: usize,
    #[serde(default)]
    pub variables: Vec<String>,
    pub matrices: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CompletionJson {
    pub size: usize,
    pub entries: Vec<String>,
}

pub fn matrix_from_exprs(size: usize, entries: &[String], ring: &Ring) -> Result<Matrix, ConvolutionError> {
    if entries.len() != size * size {
        return Err(ConvolutionError::Shape(format!(
            "{} entries for a {size}x{size} matrix",
            entries.len()
        )));
    }
    let vals = entries.iter().map(|e| parse(e, ring)).collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_fn(size, size, |i, j| vals[i * size + j].clone()))
}

pub fn matrix_to_exprs(m: &Matrix, ring: &Ring) -> Vec<String> {
    m.entries().iter().map(|e| print(e, ring)).collect()
}

impl TupleJson {
    pub fn from_tuple(t: &MatrixTuple, ring: &Ring) -> TupleJson {
        TupleJson {
            flavor: match t.flavor {
                Flavor::Mult => "mult".into(),
                Flavor::Add => "add".into(),
            },
            size: t.size(),
            variables: ring.names().to_vec(),
            matrices: t.matrices().iter().map(|m| matrix_to_exprs(m, ring)).collect(),
        }
    }

    pub fn to_tuple(&self) -> Result<(MatrixTuple, Ring), ConvolutionError> {
        let flavor = match self.flavor.as_str() {
            "mult" => Flavor::Mult,
            "add" => Flavor::Add,
            other => return Err(ConvolutionError::Format(format!("unknown flavor `{other}`"))),
        };
        let ring = Ring::new(self.variables.clone())?;
        let mats = self
            .matrices
            .iter()
            .map(|m| matrix_from_exprs(self.size, m, &ring))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((MatrixTuple::new(flavor, mats)?, ring))
    }
}

impl CompletionJson {
    pub fn to_matrix(&self, ring: &Ring) -> Result<Matrix, ConvolutionError> {
        matrix_from_exprs(self.size, &self.entries, ring)
    }

    pub fn from_matrix(m: &Matrix, ring: &Ring) -> CompletionJson {
        CompletionJson { size: m.rows(), entries: matrix_to_exprs(m, ring) }
    }
}
