//! Newton's identities: elementary symmetric polynomials of the eigenvalues
//! from the power sums `tr[ρ^m]`.

use num_complex::Complex64 as C64;

use crate::linalg::PowerSums;

/// `e_0..e_d` from `p_1..p_d` via `k e_k = Σ_{m=1..k} (-1)^{m-1} e_{k-m} p_m`.
pub fn elementary_from_power_sums(p: &PowerSums) -> Vec<C64> {
    let d = p.len();
    let mut e = Vec::with_capacity(d + 1);
    e.push(C64::new(1.0, 0.0));
    for k in 1..=d {
        let mut acc = C64::new(0.0, 0.0);
        for m in 1..=k {
            let term = e[k - m] * p.get(m);
            if m % 2 == 1 { acc += term } else { acc -= term }
        }
        e.push(acc / k as f64);
    }
    e
}

/// Coefficients of `det(I - uρ) = Σ_k (-1)^k e_k u^k`, lowest degree first.
pub fn det_polynomial(elementary: &[C64]) -> Vec<C64> {
    elementary.iter().enumerate()
        .map(|(k, &e)| if k % 2 == 0 { e } else { -e })
        .collect()
}
