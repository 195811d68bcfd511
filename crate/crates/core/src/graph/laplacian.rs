use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{validate_density, ComplexMatrix, DensityMatrix};
use crate::tolerance::DEFAULT_TOL;

/// Weight function on `n` vertices with `|ω_ij| = |ω_ji|` for every pair.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedLaplacianInput {
    n_vertices: usize,
    weights: Vec<C64>,
}

impl WeightedLaplacianInput {
    /// `edges` are `(i, j, ω_ij)` with zero-based vertices; absent pairs have
    /// weight zero. Magnitude symmetry is checked exactly.
    pub fn new(n_vertices: usize, edges: &[(usize, usize, C64)]) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::InvalidGraph("graph needs at least one vertex".into()));
        }
        let n = n_vertices;
        let mut weights = vec![C64::new(0.0, 0.0); n * n];
        let mut seen = vec![false; n * n];
        for &(i, j, w) in edges {
            if i >= n || j >= n {
                return Err(Error::InvalidGraph(format!("edge ({}, {}) out of range", i + 1, j + 1)));
            }
            if seen[i * n + j] {
                return Err(Error::InvalidGraph(format!("duplicate edge ({}, {})", i + 1, j + 1)));
            }
            seen[i * n + j] = true;
            weights[i * n + j] = w;
        }
        for i in 0..n {
            for j in i + 1..n {
                if weights[i * n + j].norm() != weights[j * n + i].norm() {
                    return Err(Error::AsymmetricMagnitude(i + 1, j + 1));
                }
            }
        }
        Ok(Self { n_vertices, weights })
    }

    pub fn n_vertices(&self) -> usize { self.n_vertices }

    pub fn weight(&self, i: usize, j: usize) -> C64 { self.weights[i * self.n_vertices + j] }

    /// `L = Δ - A` with `A_ij = |ω_ij|` and `Δ_ii = Σ_j |ω_ij|`.
    pub fn laplacian(&self) -> ComplexMatrix {
        let n = self.n_vertices;
        ComplexMatrix::from_fn(n, |i, j| {
            let a = self.weight(i, j).norm();
            if i == j {
                let degree: f64 = (0..n).map(|k| self.weight(i, k).norm()).sum();
                C64::new(degree - a, 0.0)
            } else {
                C64::new(-a, 0.0)
            }
        })
    }
}

/// `L / tr L` for the weighted Laplacian `L`.
pub fn density_from_weighted_graph(g: &WeightedLaplacianInput) -> Result<DensityMatrix> {
    let l = g.laplacian();
    let tr = l.trace().re;
    if tr <= 0.0 {
        return Err(Error::AllLoops);
    }
    validate_density(l.scale(C64::new(1.0 / tr, 0.0)), DEFAULT_TOL)
}
