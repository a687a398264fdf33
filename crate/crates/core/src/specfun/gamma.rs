//! Complex Gamma function via the Lanczos approximation, evaluated in log form.
//!
//! Coefficients are Pugh's `r = 10.900511`, 11-term set, the same one used by
//! statrs and Boost. Working in log form keeps `Γ(σ + iρ)` representable for
//! large ρ where `|Γ|` decays like `exp(-πρ/2)` and lets callers assemble
//! products with `cosh(πρ/2)` without overflow.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_R: f64 = 10.900511;

#[allow(clippy::excessive_precision)]
const LANCZOS_DK: [f64; 11] = [
    2.48574089138753565546e-5,
    1.05142378581721974210,
    -3.45687097222016235469,
    4.51227709466894823700,
    -2.98285225323576655721,
    1.05639711577126713077,
    -1.95428773191645869583e-1,
    1.70970543404441224307e-2,
    -5.71926117404305781283e-4,
    4.63399473359905636708e-6,
    -2.71994908488607703910e-9,
];

/// ln(2 sqrt(e / pi))
const LN_TWO_SQRT_E_OVER_PI: f64 = 0.620_782_237_635_245_2;

/// Distance below which a non-positive integer is treated as a pole.
pub const POLE_EPS: f64 = 1e-12;

/// Fails when `z` sits on a pole of Γ (a non-positive integer).
pub(crate) fn check_gamma_pole(z: Complex64) -> Result<()> {
    if z.re > 0.5 {
        return Ok(());
    }
    let n = z.re.round();
    let distance = Complex64::new(z.re - n, z.im).norm();
    if n <= 0.0 && distance < POLE_EPS {
        return Err(Error::Pole {
            sigma: z.re,
            rho: z.im,
            distance,
        });
    }
    Ok(())
}

fn ln_gamma_right(z: Complex64) -> Complex64 {
    let mut series = Complex64::new(LANCZOS_DK[0], 0.0);
    for (k, dk) in LANCZOS_DK.iter().enumerate().skip(1) {
        series += dk / (z + (k as f64 - 1.0));
    }
    let shifted = z - 0.5;
    LN_TWO_SQRT_E_OVER_PI + series.ln() + shifted * ((shifted + LANCZOS_R).ln() - 1.0)
}

/// A logarithm of `sin(pi z)`, stable for large `|Im z|`.
///
/// The imaginary part is a valid argument but not necessarily the principal one.
pub(crate) fn ln_sin_pi(z: Complex64) -> Complex64 {
    let w = z * PI;
    let i = Complex64::i();
    if w.im.abs() < 1.0 {
        w.sin().ln()
    } else if w.im > 0.0 {
        // sin w = (i/2) e^{-iw} (1 - e^{2iw})
        -i * w + Complex64::new(-LN_2, FRAC_PI_2) + (1.0 - (2.0 * i * w).exp()).ln()
    } else {
        // sin w = (-i/2) e^{iw} (1 - e^{-2iw})
        i * w + Complex64::new(-LN_2, -FRAC_PI_2) + (1.0 - (-2.0 * i * w).exp()).ln()
    }
}

/// A logarithm of `cos(w)`, stable for large `|Im w|`.
pub(crate) fn ln_cos(w: Complex64) -> Complex64 {
    let i = Complex64::i();
    if w.im.abs() < 1.0 {
        w.cos().ln()
    } else if w.im > 0.0 {
        -i * w - LN_2 + (1.0 + (2.0 * i * w).exp()).ln()
    } else {
        i * w - LN_2 + (1.0 + (-2.0 * i * w).exp()).ln()
    }
}

/// A logarithm of `Γ(z)`.
///
/// The real part is `ln|Γ(z)|`; the imaginary part is an argument of `Γ(z)`,
/// correct modulo 2π. Uses reflection for `Re z < 1/2`.
pub fn ln_gamma(z: Complex64) -> Result<Complex64> {
    check_gamma_pole(z)?;
    if z.im < 0.0 {
        return ln_gamma(z.conj()).map(|w| w.conj());
    }
    if z.re >= 0.5 {
        Ok(ln_gamma_right(z))
    } else {
        Ok(PI.ln() - ln_sin_pi(z) - ln_gamma_right(1.0 - z))
    }
}

/// `ln|Γ(z)|`.
pub fn ln_gamma_abs(z: Complex64) -> Result<f64> {
    ln_gamma(z).map(|w| w.re)
}

/// `Γ(z)` for complex `z`.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 {
        return gamma_real(z.re).map(|x| Complex64::new(x, 0.0));
    }
    Ok(ln_gamma(z)?.exp())
}

/// `exp(shift) · Γ(z)`, assembled in log space so that neither factor needs to be
/// representable on its own.
pub fn gamma_scaled(z: Complex64, shift: f64) -> Result<Complex64> {
    let mut w = ln_gamma(z)?;
    w.re += shift;
    let g = w.exp();
    Ok(if z.im == 0.0 {
        Complex64::new(g.re, 0.0)
    } else {
        g
    })
}

fn gamma_real(x: f64) -> Result<f64> {
    check_gamma_pole(Complex64::new(x, 0.0))?;
    if x >= 0.5 {
        Ok(ln_gamma_right(Complex64::new(x, 0.0)).re.exp())
    } else {
        let right = ln_gamma_right(Complex64::new(1.0 - x, 0.0)).re.exp();
        Ok(PI / ((PI * x).sin() * right))
    }
}
