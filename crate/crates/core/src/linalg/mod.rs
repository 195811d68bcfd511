//! Dense complex linear algebra: matrices, density matrices, Jacobi
//! eigenvalues, power sums and Newton's identities.
//!
//! Kronecker products and partial traces treat the left factor (subsystem
//! `A`) as the most significant index: basis state `|a⟩ ⊗ |b⟩` has index
//! `a * d_B + b`.

mod density;
mod eigen;
mod matrix;
mod newton;
mod random;

pub use density::{partial_trace, trace_powers, validate_density, DensityMatrix, Keep, PowerSums};
pub use eigen::{eig_hermitian, eig_hermitian_with, DEFAULT_MAX_SWEEPS};
pub use matrix::ComplexMatrix;
pub use newton::{det_polynomial, elementary_from_power_sums};
pub use random::{random_density, random_density_of_rank, random_unitary};
