use num_complex::Complex64;

use super::gamma::check_gamma_pole;
use crate::error::Result;

// B_2k / 2k for k = 1..8
const ASYMPTOTIC: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
];

const SHIFT_TO: f64 = 10.0;

/// Digamma `ψ(z) = Γ'(z)/Γ(z)`.
///
/// Upward recurrence to `Re z ≥ 10`, then the asymptotic series through `B_16`;
/// the truncation error there is below 1e-17.
pub fn digamma(z: Complex64) -> Result<Complex64> {
    check_gamma_pole(z)?;
    if z.im < 0.0 {
        return digamma(z.conj()).map(|w| w.conj());
    }

    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < SHIFT_TO {
        shift += w.inv();
        w += 1.0;
    }

    let inv = w.inv();
    let inv_sq = inv * inv;
    let mut power = inv_sq;
    let mut series = Complex64::new(0.0, 0.0);
    for coeff in ASYMPTOTIC {
        series += coeff * power;
        power *= inv_sq;
    }
    let psi = w.ln() - 0.5 * inv - series - shift;
    Ok(if z.im == 0.0 {
        Complex64::new(psi.re, 0.0)
    } else {
        psi
    })
}
