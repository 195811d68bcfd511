use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::graph::PrimeTable;
use crate::tolerance::REAL_COEFF_TOL;
use crate::zeta::ZetaSeries;

/// Formal expansion of `Π_[P] (1 - N_E(P) u^ν(P))^-1` to order `order`.
///
/// Each factor is expanded as a geometric series and multiplied in with
/// truncation at degree `order`. The coefficients must come out real.
pub fn euler_product_coeffs(primes: &PrimeTable, order: usize) -> Result<ZetaSeries> {
    if order > primes.max_len {
        return Err(Error::IncompletePrimes { requested: order, enumerated: primes.max_len });
    }
    let mut acc = vec![C64::new(0.0, 0.0); order + 1];
    acc[0] = C64::new(1.0, 0.0);
    for p in primes.classes.iter().filter(|p| p.len() <= order) {
        let nu = p.len();
        let norm = p.norm();
        // multiplying by 1/(1 - N u^ν) is the recurrence b_n = a_n + N b_{n-ν}
        for n in nu..=order {
            let prev = acc[n - nu];
            acc[n] += norm * prev;
        }
    }
    let mut coeffs = Vec::with_capacity(order + 1);
    for (n, z) in acc.iter().enumerate() {
        if z.im.abs() > REAL_COEFF_TOL {
            return Err(Error::NonRealCoefficient { n, imag: z.im });
        }
        coeffs.push(z.re);
    }
    Ok(ZetaSeries { coeffs })
}
