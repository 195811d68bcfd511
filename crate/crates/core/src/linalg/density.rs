use std::ops::Deref;

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{eig_hermitian, ComplexMatrix};

/// A Hermitian, positive semi-definite, unit-trace matrix.
///
/// Only obtainable through [`validate_density`] (or constructors that call
/// it), so holding one is proof that the invariants were checked at the
/// stored tolerance.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
    tol: f64,
}

impl DensityMatrix {
    pub fn matrix(&self) -> &ComplexMatrix { &self.matrix }

    pub fn into_matrix(self) -> ComplexMatrix { self.matrix }

    pub fn tol(&self) -> f64 { self.tol }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> { eig_hermitian(&self.matrix) }

    /// `U ρ U†`, revalidated.
    pub fn conjugate_by(&self, u: &ComplexMatrix) -> Result<Self> {
        validate_density(self.matrix.conjugate_by(u), self.tol)
    }

    pub fn kron(&self, rhs: &Self) -> Result<Self> {
        validate_density(self.matrix.kron(&rhs.matrix), self.tol.max(rhs.tol))
    }
}

impl Deref for DensityMatrix {
    type Target = ComplexMatrix;

    fn deref(&self) -> &ComplexMatrix { &self.matrix }
}

/// Checks the density-matrix invariants in order: Hermitian, unit trace,
/// positive semi-definite. The first violation is reported.
pub fn validate_density(matrix: ComplexMatrix, tol: f64) -> Result<DensityMatrix> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    let dev = matrix.hermitian_deviation();
    if dev > tol {
        return Err(Error::NotHermitian(dev));
    }
    let tr_err = (matrix.trace() - C64::new(1.0, 0.0)).norm();
    if tr_err > tol {
        return Err(Error::NotUnitTrace(tr_err));
    }
    let min_eval = eig_hermitian(&matrix)?[0];
    if min_eval < -tol {
        return Err(Error::NotPSD(min_eval));
    }
    Ok(DensityMatrix { matrix, tol })
}

/// Which subsystem survives a partial trace.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Keep {
    A,
    B,
}

/// Reduced state of a bipartite `ρ` on `C^{d_A} ⊗ C^{d_B}`, with `A` the
/// slow (most significant) index.
pub fn partial_trace(rho: &DensityMatrix, dims: [usize; 2], keep: Keep) -> Result<DensityMatrix> {
    let [da, db] = dims;
    if da == 0 || db == 0 || da * db != rho.dim() {
        return Err(Error::DimensionMismatch { expected: rho.dim(), got: da * db });
    }
    let m = rho.matrix();
    let reduced = match keep {
        Keep::B => ComplexMatrix::from_fn(db, |b, bp| {
            (0..da).map(|a| m[(a * db + b, a * db + bp)]).sum()
        }),
        Keep::A => ComplexMatrix::from_fn(da, |a, ap| {
            (0..db).map(|b| m[(a * db + b, ap * db + b)]).sum()
        }),
    };
    validate_density(reduced, rho.tol())
}

/// `p_m = tr[ρ^m]` for `m = 1..=M`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSums(pub Vec<C64>);

impl PowerSums {
    pub fn len(&self) -> usize { self.0.len() }

    pub fn is_empty(&self) -> bool { self.0.is_empty() }

    /// `p_m`, one-based.
    pub fn get(&self, m: usize) -> C64 { self.0[m - 1] }

    pub fn values(&self) -> &[C64] { &self.0 }

    pub fn real_parts(&self) -> Vec<f64> { self.0.iter().map(|z| z.re).collect() }
}

/// Traces of successive powers of `ρ`, by repeated multiplication.
pub fn trace_powers(rho: &DensityMatrix, count: usize) -> PowerSums {
    let m = rho.matrix();
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return PowerSums(out);
    }
    out.push(m.trace());
    let mut power = m.clone();
    for _ in 1..count {
        // tr[ρ^{k+1}] needs only the diagonal of the next product
        out.push(power.trace_of_product(m));
        if out.len() < count {
            power = power.matmul(m);
        }
    }
    PowerSums(out)
}
