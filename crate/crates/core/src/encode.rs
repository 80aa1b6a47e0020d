//! Interchange formats: rational matrices as JSON or CSV, wheels as edge
//! lists. Entries travel as exact `"p/q"` strings so nothing is lost to
//! float formatting, and field order is fixed so output bytes are stable.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rational::{parse_rational, render_rational};
use crate::wheel::WheelModel;

/// JSON shape of an exact matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl From<&Matrix> for MatrixJson {
    fn from(m: &Matrix) -> Self {
        MatrixJson {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|i| m.row(i).iter().map(render_rational).collect())
                .collect(),
        }
    }
}

impl MatrixJson {
    pub fn to_matrix(&self) -> Result<Matrix> {
        if self.entries.len() != self.rows
            || self.entries.iter().any(|row| row.len() != self.cols)
        {
            return Err(Error::DimensionMismatch(format!(
                "entry grid does not match {}x{}",
                self.rows, self.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for row in &self.entries {
            for s in row {
                data.push(parse_rational(s)?);
            }
        }
        Ok(Matrix::new(self.rows, self.cols, data))
    }
}

/// Pretty JSON with stable field order.
pub fn matrix_to_json(m: &Matrix) -> String {
    serde_json::to_string_pretty(&MatrixJson::from(m)).expect("matrix serialization")
}

pub fn matrix_from_json(s: &str) -> Result<Matrix> {
    let parsed: MatrixJson = serde_json::from_str(s)
        .map_err(|e| Error::DimensionMismatch(format!("matrix json: {e}")))?;
    parsed.to_matrix()
}

/// One line per row, entries as `"p/q"` strings joined by commas.
pub fn matrix_to_csv(m: &Matrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let line: Vec<String> = m.row(i).iter().map(render_rational).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

/// JSON shape of a wheel graph: 1-based, lexicographically sorted edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListJson {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&WheelModel> for EdgeListJson {
    fn from(w: &WheelModel) -> Self {
        EdgeListJson {
            n: w.n,
            edges: w.edges.clone(),
        }
    }
}

pub fn edges_to_json(w: &WheelModel) -> String {
    serde_json::to_string_pretty(&EdgeListJson::from(w)).expect("edge list serialization")
}
