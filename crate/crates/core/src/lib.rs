//! Graph zeta functions of density matrices.
//!
//! A density matrix `ρ` on an `n`-dimensional Hilbert space is read as a
//! weighted directed graph on `n` vertices with one edge `i -> j` of weight
//! `ρ_ij` for every nonzero entry. Its zeta function is the Euler product
//!
//! ```text
//! ζ_ρ(u) = Π_[P] (1 - N_E(P) u^ν(P))^-1
//! ```
//!
//! over classes of primitive closed walks `P`, where `ν(P)` is the walk length
//! and `N_E(P)` the product of its edge weights. The same function equals
//! `det(I - uρ)^-1` and `exp(Σ_m tr[ρ^m] u^m / m)`, and its Taylor
//! coefficients are the cycle index polynomials `Z(S_n)` evaluated at the
//! power sums `tr[ρ^j]`. Those coefficients are the acceptance probabilities
//! of the symmetric-group Bose symmetry test, which decides separability of a
//! pure bipartite state from its reduced state.
//!
//! - [`linalg`] dense complex matrices, density matrices, Jacobi eigenvalues,
//!   power sums and Newton's identities.
//! - [`graph`] the weighted digraph of a density matrix, the Laplacian density
//!   matrix of a weighted graph, and prime enumeration.
//! - [`zeta`] the three routes to the zeta coefficients, the rational form with
//!   its singularities, and the two separability criteria.
//! - [`quantum`] named states, permutation operators, symmetric projectors and
//!   the brute-force Bose test acceptance probability.
//! - [`io`] the matrix JSON format and the CSV tables.

pub mod error;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod quantum;
pub mod tolerance;
pub mod zeta;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
