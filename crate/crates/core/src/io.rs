//! File formats: the matrix JSON document and the CSV tables.
//!
//! Matrix JSON is `{"dim": n, "entries": [[re, im], ...]}` with `n²` entries
//! in row-major order.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::PrimeTable;
use crate::linalg::ComplexMatrix;

#[derive(Debug, Serialize, Deserialize)]
struct MatrixDoc {
    dim: usize,
    entries: Vec<[f64; 2]>,
}

pub fn matrix_from_json(text: &str) -> Result<ComplexMatrix> {
    let doc: MatrixDoc = serde_json::from_str(text)?;
    let data = doc.entries.iter().map(|&[re, im]| C64::new(re, im)).collect();
    ComplexMatrix::new(doc.dim, data)
}

pub fn matrix_to_json(m: &ComplexMatrix) -> Result<String> {
    let doc = MatrixDoc {
        dim: m.dim(),
        entries: m.entries().iter().map(|z| [z.re, z.im]).collect(),
    };
    Ok(serde_json::to_string(&doc)?)
}

/// Row of the coefficient table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoeffRow {
    pub n: usize,
    pub c_n: f64,
}

/// Row of the zeta curve table; the value is omitted at singular points.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveRow {
    pub u: f64,
    pub zeta_re: Option<f64>,
    pub zeta_im: Option<f64>,
    pub at_singularity: u8,
}

/// Curve row of an isotropic sweep, one per `(u, p)` grid point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurfaceRow {
    pub u: f64,
    pub p: f64,
    pub zeta_re: Option<f64>,
    pub zeta_im: Option<f64>,
    pub at_singularity: u8,
}

/// Row of the prime table; `rep` is the one-based closed vertex walk.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PrimeRow {
    pub nu: usize,
    pub rep: String,
    pub norm_re: f64,
    pub norm_im: f64,
}

/// Row of the Bose test report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoseRow {
    pub k: usize,
    pub p_k: f64,
    pub c_k: f64,
    pub abs_diff: f64,
}

pub fn prime_rows(table: &PrimeTable) -> Vec<PrimeRow> {
    table.classes.iter()
        .map(|p| PrimeRow {
            nu: p.len(),
            rep: p.to_string(),
            norm_re: p.norm().re,
            norm_im: p.norm().im,
        })
        .collect()
}

pub fn write_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

/// Writes only the header when `rows` is empty.
pub fn write_csv_with_header<T: Serialize>(header: &[&str], rows: &[T]) -> Result<String> {
    if rows.is_empty() {
        return Ok(format!("{}\n", header.join(",")));
    }
    write_csv(rows)
}

pub fn read_csv<T: for<'de> Deserialize<'de>>(text: &str) -> Result<Vec<T>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.deserialize().map(|row| row.map_err(Error::from)).collect()
}
