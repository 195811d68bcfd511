//! Numerical thresholds shared across the crate.

/// Density matrix validation tolerance (absolute).
pub const DEFAULT_TOL: f64 = 1e-9;

/// Eigenvalues at or below this magnitude are treated as zero.
pub const ZERO_EIGENVALUE: f64 = 1e-12;

/// Matrix entries at or below this magnitude produce no graph edge.
pub const EDGE_ZERO_TOL: f64 = 1e-12;

/// Relative tolerance for merging singularity locations into one multiplicity.
pub const MULTIPLICITY_REL_TOL: f64 = 1e-8;

/// Default tolerance for the separability verdicts.
pub const SEPARABILITY_TOL: f64 = 1e-6;

/// `|det(I - uρ)|` at or below this is reported as a singularity.
pub const SINGULAR_GUARD: f64 = 1e-13;

/// Imaginary parts of Euler product coefficients must vanish to this level.
pub const REAL_COEFF_TOL: f64 = 1e-9;

/// Default and maximum walk lengths for prime enumeration.
pub const DEFAULT_PRIME_LEN: usize = 8;
pub const MAX_PRIME_LEN: usize = 14;
