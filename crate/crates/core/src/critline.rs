//! Critical-line factors and the two transcendental sieve functions.
//!
//! On `σ = 1/2` the coupled system collapses to `ζ_R D_R = N ζ_I` and
//! `ζ_I D_I = N ζ_R` with `N² = D_R D_I`, `D_R + D_I = 1`. In terms of the
//! hyperbolic-weighted Gamma combinations
//!
//! ```text
//! C_p =  cosh(πρ/2) Γ_R + sinh(πρ/2) Γ_I
//! C_m = -sinh(πρ/2) Γ_R + cosh(πρ/2) Γ_I
//! ```
//!
//! we have `Q = (C_p cos ρ_π + C_m sin ρ_π)/√π`, `P = (C_m cos ρ_π - C_p sin ρ_π)/√π`,
//! `D_R = (1 - Q)/2` and `N = -P/2`.
//!
//! `N` carries the factor `-1/2`: it is the value for which `ζ_R D_R = N ζ_I`
//! and `N² = D_R D_I` both hold.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::funceq::rho_pi;
use crate::point::StripPoint;
use crate::specfun::{self, gamma_scaled, DEFAULT_ABS_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalLineFactors {
    pub n: f64,
    pub dr: f64,
    pub di: f64,
    pub cp: f64,
    pub cm: f64,
    pub rho: f64,
}

fn require_positive(rho: f64) -> Result<()> {
    if rho > 0.0 && rho.is_finite() {
        Ok(())
    } else {
        Err(Error::Range {
            what: "rho",
            value: rho,
            window: "(0, inf)",
        })
    }
}

/// `(C_p, C_m)` with the hyperbolic factors folded into `Γ` in log space.
fn hyperbolic_gamma(rho: f64) -> Result<(f64, f64)> {
    let s = Complex64::new(0.5, rho);
    let half = PI * rho / 2.0;
    let up = gamma_scaled(s, half)?;
    let down = gamma_scaled(s, -half)?;
    let cp = 0.5 * (up.re + down.re) + 0.5 * (up.im - down.im);
    let cm = -0.5 * (up.re - down.re) + 0.5 * (up.im + down.im);
    Ok((cp, cm))
}

pub fn factors(rho: f64) -> Result<CriticalLineFactors> {
    require_positive(rho)?;
    let (cp, cm) = hyperbolic_gamma(rho)?;
    let (sin_rp, cos_rp) = rho_pi(rho).sin_cos();
    let two_sqrt_pi = 2.0 * PI.sqrt();
    let dr = 0.5 - (cp * cos_rp + cm * sin_rp) / two_sqrt_pi;
    Ok(CriticalLineFactors {
        n: -(cm * cos_rp - cp * sin_rp) / two_sqrt_pi,
        dr,
        di: 1.0 - dr,
        cp,
        cm,
        rho,
    })
}

/// `C_m cos ρ_π - C_p sin ρ_π`, whose roots are the half-zeros of `ζ` on the
/// critical line, alternating between `ζ_I = 0` and `ζ_R = 0`.
///
/// The value equals `√π P` and stays `O(1)` for every ρ.
pub fn half_zero_function(rho: f64) -> Result<f64> {
    require_positive(rho)?;
    let (cp, cm) = hyperbolic_gamma(rho)?;
    let (sin_rp, cos_rp) = rho_pi(rho).sin_cos();
    Ok(cm * cos_rp - cp * sin_rp)
}

/// `N ∂^m ζ_I/∂ρ^m - D_R ∂^m ζ_R/∂ρ^m` at `1/2 + iρ`.
///
/// For `m = 1`, with `ζ' = dζ/ds`, this is `D_R Im ζ' + N Re ζ'`; its roots are the
/// full-zeros together with the half-zeros where `D_R = 0`.
pub fn full_zero_function(rho: f64, m: u8) -> Result<f64> {
    require_positive(rho)?;
    let f = factors(rho)?;
    let z = specfun::zeta_jet(Complex64::new(0.5, rho), DEFAULT_ABS_TOL)?;
    let d = specfun::rho_derivative(&z, m)?;
    Ok(f.n * d.im - f.dr * d.re)
}

/// `ζ(1/2 + iρ)`.
pub fn critical_zeta(rho: f64) -> Result<Complex64> {
    specfun::zeta_strip(StripPoint::critical(rho)?, Default::default()).map(|e| e.value)
}

/// `(ρ/2) log(1/4 + ρ²)`.
pub fn rho_l(rho: f64) -> f64 {
    0.5 * rho * (0.25 + rho * rho).ln()
}

/// Diagnostic comparison of `Γ_I/Γ_R` on the critical line against its tanh form
/// and first-order Stirling approximations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticRatio {
    /// `Γ_I/Γ_R` at `1/2 + iρ`.
    pub exact: f64,
    /// `(tanh(πρ/2) + tan ρ_π)/(1 - tanh(πρ/2) tan ρ_π)`; equals `exact` only at
    /// roots of [`half_zero_function`].
    pub tanh_form: f64,
    /// `-tan(ρ - ρ_L)`
    pub stirling_ratio: f64,
    /// `tan ρ_π`
    pub tan_rho_pi: f64,
    /// `(-cos 2ρ + sin 2ρ_L)/(-sin 2ρ + cos 2ρ_L)`, the Stirling estimate of `tan ρ_π`.
    pub stirling_tan_rho_pi: f64,
    /// Some tangent argument or denominator sits within 1e-3 of a pole.
    pub pole_proximity: bool,
}

const POLE_WINDOW: f64 = 1e-3;

fn near_tan_pole(x: f64) -> bool {
    let offset = (x - PI / 2.0).rem_euclid(PI);
    offset.min(PI - offset) < POLE_WINDOW
}

pub fn asymptotic_ratio(rho: f64) -> Result<AsymptoticRatio> {
    if !(rho > 1.0 && rho.is_finite()) {
        return Err(Error::Range {
            what: "rho",
            value: rho,
            window: "(1, inf)",
        });
    }
    let g = gamma_scaled(Complex64::new(0.5, rho), PI * rho / 2.0)?;
    let exact = g.im / g.re;

    let rp = rho_pi(rho);
    let rl = rho_l(rho);
    let th = (PI * rho / 2.0).tanh();
    let tan_rp = rp.tan();
    let tanh_form = (th + tan_rp) / (1.0 - th * tan_rp);
    let stirling_ratio = -(rho - rl).tan();
    let num = -(2.0 * rho).cos() + (2.0 * rl).sin();
    let den = -(2.0 * rho).sin() + (2.0 * rl).cos();

    let pole_proximity = near_tan_pole(rp)
        || near_tan_pole(rho - rl)
        || near_tan_pole(rp + th.atan())
        || near_tan_pole(g.arg())
        || den.abs() < POLE_WINDOW * num.abs().max(1.0);

    Ok(AsymptoticRatio {
        exact,
        tanh_form,
        stirling_ratio,
        tan_rho_pi: tan_rp,
        stirling_tan_rho_pi: num / den,
        pole_proximity,
    })
}
