use crate::error::{Error, Result};
use crate::linalg::PowerSums;

/// Taylor coefficients `c_0..c_N` of `ζ_ρ` at `u = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZetaSeries {
    pub coeffs: Vec<f64>,
}

impl ZetaSeries {
    pub fn order(&self) -> usize { self.coeffs.len() - 1 }

    pub fn get(&self, n: usize) -> f64 { self.coeffs[n] }
}

/// Coefficients of `exp(Σ_m p_m u^m / m)` to order `order`, via
/// `n c_n = Σ_{m=1..n} p_m c_{n-m}`.
pub fn series_coeffs(p: &PowerSums, order: usize) -> Result<ZetaSeries> {
    if p.len() < order {
        return Err(Error::InsufficientPowerSums { needed: order, available: p.len() });
    }
    let pr = p.real_parts();
    let mut c = Vec::with_capacity(order + 1);
    c.push(1.0);
    for n in 1..=order {
        let s: f64 = (1..=n).map(|m| pr[m - 1] * c[n - m]).sum();
        c.push(s / n as f64);
    }
    Ok(ZetaSeries { coeffs: c })
}
