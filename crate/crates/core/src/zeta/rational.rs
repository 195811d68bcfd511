use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{det_polynomial, elementary_from_power_sums, trace_powers, DensityMatrix};
use crate::tolerance::{MULTIPLICITY_REL_TOL, SINGULAR_GUARD, ZERO_EIGENVALUE};

/// A pole of `ζ_ρ` on the positive real axis.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Singularity {
    pub location: f64,
    pub multiplicity: usize,
}

/// `ζ_ρ(u) = 1 / det(I - uρ)` with its poles.
#[derive(Clone, Debug, PartialEq)]
pub struct ZetaRational {
    /// Coefficients of `det(I - uρ)`, lowest degree first; `denom[0] = 1`.
    pub denom: Vec<f64>,
    /// Sorted by location.
    pub singularities: Vec<Singularity>,
}

impl ZetaRational {
    pub fn denom_at(&self, u: C64) -> C64 {
        self.denom.iter().rev().fold(C64::new(0.0, 0.0), |acc, &c| acc * u + c)
    }

    /// Total multiplicity, equal to the rank of `ρ`.
    pub fn rank(&self) -> usize {
        self.singularities.iter().map(|s| s.multiplicity).sum()
    }

    pub fn nearest_singularity(&self, u: f64) -> Option<f64> {
        self.singularities.iter()
            .map(|s| (s.location - u).abs())
            .min_by(|a, b| a.total_cmp(b))
    }
}

/// Determinant polynomial (via power sums and Newton's identities) and the
/// poles `1/λ` for the nonzero eigenvalues `λ` of `ρ`.
pub fn singularities(rho: &DensityMatrix) -> Result<ZetaRational> {
    let p = trace_powers(rho, rho.dim());
    let denom = det_polynomial(&elementary_from_power_sums(&p))
        .iter()
        .map(|z| z.re)
        .collect();
    let evals = rho.eigenvalues()?;
    Ok(ZetaRational { denom, singularities: group_reciprocals(&evals) })
}

/// Reciprocals of the eigenvalues above the zero threshold, merged when
/// their relative separation is within tolerance.
pub(crate) fn group_reciprocals(evals: &[f64]) -> Vec<Singularity> {
    let mut locs: Vec<f64> = evals.iter()
        .filter(|&&l| l > ZERO_EIGENVALUE)
        .map(|&l| 1.0 / l)
        .collect();
    locs.sort_by(|a, b| a.total_cmp(b));
    let mut out: Vec<(f64, usize)> = Vec::new();
    for u in locs {
        match out.last_mut() {
            Some((sum, m)) if (u - *sum / *m as f64).abs() <= MULTIPLICITY_REL_TOL * u => {
                *sum += u;
                *m += 1;
            }
            _ => out.push((u, 1)),
        }
    }
    out.into_iter()
        .map(|(sum, m)| Singularity { location: sum / m as f64, multiplicity: m })
        .collect()
}

/// `1 / det(I - uρ)` by Horner evaluation of the determinant polynomial.
pub fn zeta_eval(rational: &ZetaRational, u: C64) -> Result<C64> {
    let d = rational.denom_at(u);
    if d.norm() <= SINGULAR_GUARD {
        return Err(Error::AtSingularity(u));
    }
    Ok(d.inv())
}
