//! Seeded random unitaries and density matrices.

use num_complex::Complex64 as C64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::linalg::{validate_density, ComplexMatrix, DensityMatrix};
use crate::tolerance::DEFAULT_TOL;

const MAX_DRAWS: usize = 8;

/// Columns whose residual norm after projection falls below this are treated
/// as linearly dependent.
const DEGENERATE_NORM: f64 = 1e-10;

fn gaussian_matrix(dim: usize, rng: &mut ChaCha8Rng) -> Vec<C64> {
    (0..dim * dim)
        .map(|_| {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            C64::new(re, im)
        })
        .collect()
}

/// A unitary from modified Gram-Schmidt on the columns of a seeded complex
/// Gaussian matrix. Same seed, same matrix.
pub fn random_unitary(dim: usize, seed: u64) -> Result<ComplexMatrix> {
    if dim == 0 {
        return Err(Error::EmptyMatrix);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'draw: for _ in 0..MAX_DRAWS {
        let g = gaussian_matrix(dim, &mut rng);
        let mut cols: Vec<Vec<C64>> = (0..dim)
            .map(|j| (0..dim).map(|i| g[i * dim + j]).collect())
            .collect();
        for j in 0..dim {
            for k in 0..j {
                let (done, rest) = cols.split_at_mut(j);
                let qk = &done[k];
                let proj: C64 = qk.iter().zip(&rest[0]).map(|(a, b)| a.conj() * b).sum();
                for (x, q) in rest[0].iter_mut().zip(qk) {
                    *x -= proj * q;
                }
            }
            let norm = cols[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm < DEGENERATE_NORM {
                continue 'draw;
            }
            cols[j].iter_mut().for_each(|z| *z /= norm);
        }
        return Ok(ComplexMatrix::from_fn(dim, |i, j| cols[j][i]));
    }
    Err(Error::DegenerateSample(MAX_DRAWS))
}

/// `G G† / tr(G G†)` for a seeded complex Gaussian `G` (full rank almost
/// surely).
pub fn random_density(dim: usize, seed: u64) -> Result<DensityMatrix> {
    if dim == 0 {
        return Err(Error::EmptyMatrix);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = ComplexMatrix::new(dim, gaussian_matrix(dim, &mut rng))?;
    let gg = g.matmul(&g.adjoint());
    let tr = gg.trace().re;
    let m = ComplexMatrix::from_fn(dim, |i, j| {
        if i == j { C64::new(gg[(i, i)].re / tr, 0.0) } else { gg[(i, j)] / tr }
    });
    validate_density(m, DEFAULT_TOL)
}

/// Random density matrix of the given rank, `Σ_r |g_r⟩⟨g_r|` normalized.
pub fn random_density_of_rank(dim: usize, rank: usize, seed: u64) -> Result<DensityMatrix> {
    if dim == 0 || rank == 0 || rank > dim {
        return Err(Error::InvalidParameter(format!("rank {rank} for dimension {dim}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut acc = ComplexMatrix::zeros(dim);
    for _ in 0..rank {
        let v: Vec<C64> = (0..dim)
            .map(|_| {
                let re: f64 = StandardNormal.sample(&mut rng);
                let im: f64 = StandardNormal.sample(&mut rng);
                C64::new(re, im)
            })
            .collect();
        acc = &acc + &ComplexMatrix::outer(&v);
    }
    let tr = acc.trace().re;
    validate_density(acc.scale(C64::new(1.0 / tr, 0.0)), DEFAULT_TOL)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unitarity_error(u: &ComplexMatrix) -> f64 {
        u.adjoint().matmul(u).max_abs_diff(&ComplexMatrix::identity(u.dim()))
    }

    #[test]
    fn one_dimensional_is_a_phase() {
        let u = random_unitary(1, 7).unwrap();
        assert!((u[(0, 0)].norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn unitary_contract() {
        for dim in 1..=8 {
            for seed in 0..5 {
                let u = random_unitary(dim, seed).unwrap();
                assert!(unitarity_error(&u) <= 1e-12, "dim {dim} seed {seed}");
            }
        }
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(random_unitary(4, 42).unwrap(), random_unitary(4, 42).unwrap());
        assert_ne!(random_unitary(4, 42).unwrap(), random_unitary(4, 43).unwrap());
    }

    #[test]
    fn random_density_is_valid() {
        for dim in 1..=5 {
            let rho = random_density(dim, dim as u64).unwrap();
            assert_eq!(rho.dim(), dim);
        }
        let r1 = random_density_of_rank(4, 1, 3).unwrap();
        let evals = r1.eigenvalues().unwrap();
        assert!((evals[3] - 1.0).abs() < 1e-12);
    }
}
