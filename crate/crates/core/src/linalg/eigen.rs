//! Cyclic Jacobi eigenvalue iteration for Hermitian matrices.
//!
//! Each rotation acts on a pair of coordinates `(p, q)`. The off-diagonal
//! entry `a_pq = r e^{iφ}` is first made real by the phase change
//! `D = diag(1, e^{-iφ})`, after which an ordinary real Jacobi rotation
//! annihilates it. The combined unitary `V = D R` is applied as `A <- V† A V`.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::tolerance::DEFAULT_TOL;

pub const DEFAULT_MAX_SWEEPS: usize = 100;

/// Sweeps stop once the off-diagonal Frobenius mass drops below this
/// fraction of `‖A‖_F`.
const OFF_DIAGONAL_REL: f64 = 1e-14;

/// Real eigenvalues of a Hermitian matrix, ascending.
pub fn eig_hermitian(m: &ComplexMatrix) -> Result<Vec<f64>> {
    eig_hermitian_with(m, DEFAULT_MAX_SWEEPS)
}

pub fn eig_hermitian_with(m: &ComplexMatrix, max_sweeps: usize) -> Result<Vec<f64>> {
    let scale = m.max_abs().max(1.0);
    let dev = m.hermitian_deviation();
    if dev > DEFAULT_TOL * scale {
        return Err(Error::NotHermitian(dev));
    }
    let n = m.dim();
    // symmetrize away sub-tolerance noise
    let mut a = ComplexMatrix::from_fn(n, |i, j| {
        if i == j {
            C64::new(m[(i, i)].re, 0.0)
        } else {
            0.5 * (m[(i, j)] + m[(j, i)].conj())
        }
    });
    let target = OFF_DIAGONAL_REL * a.frobenius_norm();

    let mut sweeps = 0;
    while off_diagonal_norm(&a) > target {
        if sweeps == max_sweeps {
            return Err(Error::NoConvergence(max_sweeps));
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
        sweeps += 1;
    }

    let mut evals: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    evals.sort_by(|x, y| x.total_cmp(y));
    Ok(evals)
}

fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.dim();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn rotate(a: &mut ComplexMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let alpha = a[(p, p)].re;
    let gamma = a[(q, q)].re;
    let phase = apq / r; // e^{iφ}
    let theta = 0.5 * (2.0 * r).atan2(gamma - alpha);
    let (s, c) = theta.sin_cos();

    // V = [[c, s], [-s e^{-iφ}, c e^{-iφ}]] in the (p, q) block
    let vpp = C64::new(c, 0.0);
    let vpq = C64::new(s, 0.0);
    let vqp = -s * phase.conj();
    let vqq = c * phase.conj();

    let n = a.dim();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * vpp + akq * vqp;
        a[(k, q)] = akp * vpq + akq * vqq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = vpp.conj() * apk + vqp.conj() * aqk;
        a[(q, k)] = vpq.conj() * apk + vqq.conj() * aqk;
    }
    a[(p, q)] = C64::new(0.0, 0.0);
    a[(q, p)] = C64::new(0.0, 0.0);
    a[(p, p)] = C64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = C64::new(a[(q, q)].re, 0.0);
}
