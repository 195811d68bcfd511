//! Permutation operators on `k` copies of `C^d`, the symmetric-subspace
//! projector, and the Bose symmetry test acceptance probability
//! `tr[Π ρ^⊗k]` evaluated directly.

use itertools::Itertools;
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, DensityMatrix};

pub const MAX_COPIES: usize = 5;
pub const MAX_TENSOR_DIM: usize = 4096;

fn check_caps(d: usize, k: usize) -> Result<usize> {
    if d == 0 {
        return Err(Error::InvalidParameter("local dimension must be positive".into()));
    }
    if k > MAX_COPIES {
        return Err(Error::CapExceeded { what: "copies k", value: k, cap: MAX_COPIES });
    }
    let total = d.checked_pow(k as u32).filter(|&t| t <= MAX_TENSOR_DIM)
        .ok_or(Error::CapExceeded { what: "tensor dimension d^k", value: d.saturating_pow(k as u32), cap: MAX_TENSOR_DIM })?;
    Ok(total)
}

fn check_permutation(perm: &[usize]) -> Result<()> {
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
            return Err(Error::InvalidParameter(format!("{perm:?} is not a permutation")));
        }
    }
    Ok(())
}

/// All permutations of `0..k` in lexicographic one-line order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    (0..k).permutations(k).collect()
}

/// Digits of `index` in base `d`, most significant first.
fn digits(mut index: usize, d: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in out.iter_mut().rev() {
        *slot = index % d;
        index /= d;
    }
    out
}

fn undigits(ds: &[usize], d: usize) -> usize {
    ds.iter().fold(0, |acc, &x| acc * d + x)
}

/// `W(π)|i_1..i_k⟩ = |j⟩` with `j_{π(m)} = i_m`: the factor in slot `m` moves
/// to slot `π(m)`. Returns the image of every basis index.
pub fn permutation_index_map(d: usize, k: usize, perm: &[usize]) -> Result<Vec<usize>> {
    if perm.len() != k {
        return Err(Error::DimensionMismatch { expected: k, got: perm.len() });
    }
    check_permutation(perm)?;
    let total = check_caps(d, k)?;
    let mut out = Vec::with_capacity(total);
    let mut moved = vec![0; k];
    for i in 0..total {
        let ds = digits(i, d, k);
        for (m, &x) in ds.iter().enumerate() {
            moved[perm[m]] = x;
        }
        out.push(undigits(&moved, d));
    }
    Ok(out)
}

/// The 0/1 unitary `W(π)` on `(C^d)^⊗k`.
pub fn permutation_operator(d: usize, k: usize, perm: &[usize]) -> Result<ComplexMatrix> {
    let map = permutation_index_map(d, k, perm)?;
    let mut w = ComplexMatrix::zeros(map.len());
    for (i, &j) in map.iter().enumerate() {
        w[(j, i)] = C64::new(1.0, 0.0);
    }
    Ok(w)
}

/// `Π = (1/k!) Σ_π W(π)`, with its invariants checked on construction.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricProjector {
    d: usize,
    k: usize,
    matrix: ComplexMatrix,
}

impl SymmetricProjector {
    pub fn local_dim(&self) -> usize { self.d }

    pub fn copies(&self) -> usize { self.k }

    pub fn matrix(&self) -> &ComplexMatrix { &self.matrix }

    /// `‖Π² - Π‖_max`, using the row sparsity of `Π` (at most `k!` nonzeros
    /// per row).
    pub fn idempotence_error(&self) -> f64 {
        let n = self.matrix.dim();
        let rows: Vec<Vec<(usize, C64)>> = (0..n)
            .map(|i| {
                self.matrix.row(i).iter().enumerate()
                    .filter(|(_, z)| z.norm() != 0.0)
                    .map(|(j, &z)| (j, z))
                    .collect()
            })
            .collect();
        let mut worst: f64 = 0.0;
        let mut acc = vec![C64::new(0.0, 0.0); n];
        for (i, row) in rows.iter().enumerate() {
            acc.iter_mut().for_each(|z| *z = C64::new(0.0, 0.0));
            for &(j, a) in row {
                for &(l, b) in &rows[j] {
                    acc[l] += a * b;
                }
            }
            for (l, z) in acc.iter().enumerate() {
                worst = worst.max((z - self.matrix[(i, l)]).norm());
            }
        }
        worst
    }
}

/// Binomial coefficient `C(d + k - 1, k)`, the symmetric subspace dimension.
pub fn symmetric_dimension(d: usize, k: usize) -> usize {
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (d as u128 + i) / (i + 1);
    }
    acc as usize
}

pub fn symmetric_projector(d: usize, k: usize) -> Result<SymmetricProjector> {
    let total = check_caps(d, k)?;
    let perms = permutations(k);
    // integer counts first, one division at the end
    let mut matrix = ComplexMatrix::zeros(total);
    for perm in &perms {
        for (i, j) in permutation_index_map(d, k, perm)?.into_iter().enumerate() {
            matrix[(j, i)] += 1.0;
        }
    }
    let matrix = matrix.scale(C64::new(1.0 / perms.len() as f64, 0.0));
    let proj = SymmetricProjector { d, k, matrix };

    let herm = proj.matrix.hermitian_deviation();
    assert!(herm <= 1e-12, "symmetric projector not Hermitian: {herm:e}");
    let idem = proj.idempotence_error();
    assert!(idem <= 1e-10, "symmetric projector not idempotent: {idem:e}");
    let tr = proj.matrix.trace().re;
    let want = symmetric_dimension(d, k) as f64;
    assert!((tr - want).abs() <= 1e-8, "symmetric projector trace {tr} != {want}");
    Ok(proj)
}

/// `tr[Π ρ^⊗k] = (1/k!) Σ_π tr[W(π) ρ^⊗k]`.
///
/// Each `tr[W(π) ρ^⊗k] = Σ_i (ρ^⊗k)_{i, W(π)^{-1} i}`, with the Kronecker
/// power entries formed on the fly as products of `ρ` entries, so the
/// `d^k × d^k` matrices are never materialized.
pub fn acceptance_probability(rho: &DensityMatrix, k: usize) -> Result<f64> {
    let d = rho.dim();
    check_caps(d, k)?;
    let perms = permutations(k);
    let mut per_perm = Vec::with_capacity(perms.len());
    for perm in &perms {
        let map = permutation_index_map(d, k, perm)?;
        // W_{map[i], i} = 1, so tr[W R] = Σ_i R_{i, map[i]}
        let mut tr = C64::new(0.0, 0.0);
        for (i, &j) in map.iter().enumerate() {
            let (di, dj) = (digits(i, d, k), digits(j, d, k));
            tr += di.iter().zip(&dj).fold(C64::new(1.0, 0.0), |acc, (&a, &b)| acc * rho[(a, b)]);
        }
        per_perm.push(tr);
    }
    Ok(pairwise_sum(&per_perm).re / perms.len() as f64)
}

/// The same probability from the materialized projector and Kronecker power.
/// Only practical for small `d^k`.
pub fn acceptance_probability_dense(rho: &DensityMatrix, k: usize) -> Result<f64> {
    let proj = symmetric_projector(rho.dim(), k)?;
    let power = rho.matrix().kron_power(k);
    Ok(proj.matrix().trace_of_product(&power).re)
}

/// Tree reduction, fixed order regardless of how the terms were produced.
fn pairwise_sum(xs: &[C64]) -> C64 {
    match xs.len() {
        0 => C64::new(0.0, 0.0),
        1 => xs[0],
        n => {
            let (a, b) = xs.split_at(n / 2);
            pairwise_sum(a) + pairwise_sum(b)
        }
    }
}

/// `tr[ρ²]`
pub fn purity(rho: &DensityMatrix) -> f64 {
    rho.matrix().trace_of_product(rho.matrix()).re
}
