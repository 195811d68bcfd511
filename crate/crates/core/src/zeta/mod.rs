//! The zeta function of a density matrix: series coefficients by three
//! independent routes, the rational form `det(I - uρ)^-1` with its poles, and
//! the separability criteria built on them.

mod cycle_index;
mod euler;
mod rational;
mod separability;
mod series;

pub use cycle_index::{cycle_index, partitions, Partition};
pub use euler::euler_product_coeffs;
pub use rational::{singularities, zeta_eval, Singularity, ZetaRational};
pub use separability::{
    is_separable_by_coeffs, is_separable_by_singularity, Assessment, Provenance, Verdict,
};
pub use series::{series_coeffs, ZetaSeries};
