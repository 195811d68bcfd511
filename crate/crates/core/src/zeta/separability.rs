//! Pure-state separability from the zeta function of the reduced state.
//!
//! Both criteria assume `ρ_B` is the reduced state of a pure bipartite
//! state. For any other input the verdict is still computed but flagged.

use crate::error::Result;
use crate::linalg::{trace_powers, DensityMatrix};
use crate::zeta::{series_coeffs, singularities, Singularity};

/// Whether the caller vouches that `ρ_B` comes from a pure joint state.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    PureBipartite,
    Unknown,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Verdict {
    Separable,
    /// The first coefficient with `|c_n - 1| > tol`.
    EntangledAtCoefficient { n: usize, value: f64 },
    /// The pole structure differs from a single simple pole at `u = 1`.
    EntangledBySingularities(Vec<Singularity>),
}

impl Verdict {
    pub fn is_separable(&self) -> bool { matches!(self, Verdict::Separable) }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Assessment {
    pub verdict: Verdict,
    /// Set when pure-bipartite provenance was not asserted, in which case the
    /// verdict says nothing about entanglement of a mixed joint state.
    pub caveat: bool,
}

/// Separable iff `|c_n - 1| <= tol` for `n = 0..=order`.
///
/// In exact arithmetic `n = 2` already decides; higher orders are checked
/// for diagnostics.
pub fn is_separable_by_coeffs(
    rho_b: &DensityMatrix,
    order: usize,
    tol: f64,
    provenance: Provenance,
) -> Assessment {
    let order = order.max(2);
    let series = series_coeffs(&trace_powers(rho_b, order), order)
        .expect("power sums computed to the requested order");
    let verdict = series.coeffs.iter().enumerate()
        .find(|(_, &c)| (c - 1.0).abs() > tol)
        .map_or(Verdict::Separable, |(n, &value)| Verdict::EntangledAtCoefficient { n, value });
    Assessment { verdict, caveat: provenance != Provenance::PureBipartite }
}

/// Separable iff the only pole is a simple one at `u = 1` (within `tol`).
pub fn is_separable_by_singularity(
    rho_b: &DensityMatrix,
    tol: f64,
    provenance: Provenance,
) -> Result<Assessment> {
    let sing = singularities(rho_b)?.singularities;
    let separable = matches!(
        sing.as_slice(),
        [s] if s.multiplicity == 1 && (s.location - 1.0).abs() <= tol
    );
    let verdict = if separable {
        Verdict::Separable
    } else {
        Verdict::EntangledBySingularities(sing)
    };
    Ok(Assessment { verdict, caveat: provenance != Provenance::PureBipartite })
}
