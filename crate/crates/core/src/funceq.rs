//! The functional equation `ζ(1-s) = χ(s) ζ(s)` written as a coupled real system.
//!
//! With `ζ(s) = ζ_R + iζ_I` and `ζ(1-s) = ζ̃_R - iζ̃_I` (so `ζ̃_R(σ,ρ) = ζ_R(1-σ,ρ)`
//! and `ζ̃_I(σ,ρ) = ζ_I(1-σ,ρ)`), the equation becomes
//!
//! ```text
//! ζ̃_I = -Q ζ_I - P ζ_R
//! ζ̃_R = -P ζ_I + Q ζ_R
//! ```
//!
//! where `Q + iP = χ(s) = 2 Γ(s) cos(πs/2) (2π)^-s`. [`pq_coefficients`] evaluates
//! `P` and `Q` from their expanded trigonometric/hyperbolic form; [`chi_factor`]
//! evaluates `χ` directly, and the two are cross-checked in the tests.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::{ensure_finite, ensure_finite_real, StripPoint};
use crate::specfun::{self, gamma, gamma_scaled, ln_cos, ln_gamma, DEFAULT_ABS_TOL};

/// Above this ordinate the automatic policy assembles hyperbolic/Gamma products
/// in log-magnitude form.
pub const LOG_SPACE_ABOVE: f64 = 30.0;

/// How products of `cosh`, `sinh` and `Γ` are assembled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Assembly {
    /// Log-magnitude assembly for `ρ > 30`, plain products below.
    #[default]
    Auto,
    /// Plain binary64 products everywhere; overflows near `ρ ≈ 225`.
    Direct,
}

impl Assembly {
    fn log_space(self, rho: f64) -> bool {
        matches!(self, Assembly::Auto) && rho > LOG_SPACE_ABOVE
    }
}

/// `ρ log(2π)`.
pub fn rho_pi(rho: f64) -> f64 {
    rho * (2.0 * PI).ln()
}

/// Zeta at a point and at its reflection about the critical line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecompositionQuad {
    pub zr: f64,
    pub zi: f64,
    pub zr_ref: f64,
    pub zi_ref: f64,
}

pub fn decompose(p: StripPoint) -> Result<DecompositionQuad> {
    let z = specfun::zeta_jet(p.to_complex(), DEFAULT_ABS_TOL)?.value;
    let reflected = if p.sigma() == 0.5 {
        z
    } else {
        specfun::zeta_jet(p.reflected().to_complex(), DEFAULT_ABS_TOL)?.value
    };
    Ok(DecompositionQuad {
        zr: z.re,
        zi: z.im,
        zr_ref: reflected.re,
        zi_ref: reflected.im,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PQCoefficients {
    pub p: f64,
    pub q: f64,
}

impl PQCoefficients {
    pub fn norm_sqr(&self) -> f64 {
        self.p * self.p + self.q * self.q
    }

    /// `Q + iP`
    pub fn as_chi(&self) -> Complex64 {
        Complex64::new(self.q, self.p)
    }
}

/// `P` and `Q` from the expanded form
///
/// ```text
/// P = 2[(-Γ_R sin ρ_π + Γ_I cos ρ_π) cosh(πρ/2) cos(πσ/2)
///       + (-Γ_R cos ρ_π - Γ_I sin ρ_π) sin(πσ/2) sinh(πρ/2)] (2π)^-σ
/// Q = 2[( Γ_R cos ρ_π + Γ_I sin ρ_π) cosh(πρ/2) cos(πσ/2)
///       + (-Γ_R sin ρ_π + Γ_I cos ρ_π) sinh(πρ/2) sin(πσ/2)] (2π)^-σ
/// ```
pub fn pq_coefficients(p: StripPoint) -> Result<PQCoefficients> {
    pq_coefficients_with(p, Assembly::Auto)
}

pub fn pq_coefficients_with(p: StripPoint, assembly: Assembly) -> Result<PQCoefficients> {
    let (sigma, rho) = (p.sigma(), p.rho());
    let s = p.to_complex();
    let half = PI * rho / 2.0;
    let base = (2.0 * PI).ln();

    // cosh(πρ/2) Γ (2π)^-σ and sinh(πρ/2) Γ (2π)^-σ
    let (ch_gamma, sh_gamma) = if assembly.log_space(rho) {
        let up = gamma_scaled(s, half - sigma * base)?;
        let down = gamma_scaled(s, -half - sigma * base)?;
        ((up + down) * 0.5, (up - down) * 0.5)
    } else {
        let g = gamma(s)? * (-sigma * base).exp();
        (g * half.cosh(), g * half.sinh())
    };

    let (sin_rp, cos_rp) = rho_pi(rho).sin_cos();
    let a = |g: Complex64| g.re * cos_rp + g.im * sin_rp;
    let b = |g: Complex64| -g.re * sin_rp + g.im * cos_rp;
    let (sin_s, cos_s) = (PI * sigma / 2.0).sin_cos();

    let pq = PQCoefficients {
        p: 2.0 * (b(ch_gamma) * cos_s - a(sh_gamma) * sin_s),
        q: 2.0 * (a(ch_gamma) * cos_s + b(sh_gamma) * sin_s),
    };
    ensure_finite_real(pq.p, "P coefficient", rho)?;
    ensure_finite_real(pq.q, "Q coefficient", rho)?;
    Ok(pq)
}

/// `χ(s) = 2 Γ(s) cos(πs/2) (2π)^-s`, evaluated directly from its definition.
pub fn chi_factor(p: StripPoint) -> Result<Complex64> {
    chi_factor_with(p, Assembly::Auto)
}

pub fn chi_factor_with(p: StripPoint, assembly: Assembly) -> Result<Complex64> {
    let s = p.to_complex();
    let half_s = s * (PI / 2.0);
    let chi = if assembly.log_space(p.rho()) {
        (LN_2 + ln_gamma(s)? + ln_cos(half_s) - s * (2.0 * PI).ln()).exp()
    } else {
        2.0 * gamma(s)? * half_s.cos() * (-s * (2.0 * PI).ln()).exp()
    };
    ensure_finite(chi, "chi factor", p.rho())
}

/// Residuals of the coupled real system; both vanish identically.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FunctionalResiduals {
    /// `ζ̃_I + Q ζ_I + P ζ_R`
    pub r_i: f64,
    /// `ζ̃_R + P ζ_I - Q ζ_R`
    pub r_r: f64,
    /// `1 +` the sum of the magnitudes of every term entering either residual.
    pub magnitude: f64,
}

impl FunctionalResiduals {
    pub fn relative(&self) -> f64 {
        self.r_i.abs().max(self.r_r.abs()) / self.magnitude
    }
}

pub fn functional_residuals(p: StripPoint) -> Result<FunctionalResiduals> {
    functional_residuals_with(p, Assembly::Auto)
}

pub fn functional_residuals_with(p: StripPoint, assembly: Assembly) -> Result<FunctionalResiduals> {
    let d = decompose(p)?;
    let c = pq_coefficients_with(p, assembly)?;
    let terms_i = [d.zi_ref, c.q * d.zi, c.p * d.zr];
    let terms_r = [d.zr_ref, c.p * d.zi, -c.q * d.zr];
    let magnitude = 1.0 + terms_i.iter().chain(&terms_r).map(|t| t.abs()).sum::<f64>();
    Ok(FunctionalResiduals {
        r_i: terms_i.iter().sum(),
        r_r: terms_r.iter().sum(),
        magnitude,
    })
}

/// Cleared-denominator forms of the reflection-equality sieve,
/// `g1 = P ζ_R + (1+Q) ζ_I`, `g2 = P ζ_I + (1-Q) ζ_R`.
///
/// Both vanish where `ζ̃_R = ζ_R` and `ζ̃_I = ζ_I`. `|ζ_R|` and `|ζ_I|` are carried
/// along so callers can see which of them is non-zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SieveResiduals {
    pub g1: f64,
    pub g2: f64,
    pub zr_abs: f64,
    pub zi_abs: f64,
}

pub fn sieve_residuals(p: StripPoint) -> Result<SieveResiduals> {
    let z = specfun::zeta_jet(p.to_complex(), DEFAULT_ABS_TOL)?.value;
    let c = pq_coefficients(p)?;
    Ok(SieveResiduals {
        g1: c.p * z.re + (1.0 + c.q) * z.im,
        g2: c.p * z.im + (1.0 - c.q) * z.re,
        zr_abs: z.re.abs(),
        zi_abs: z.im.abs(),
    })
}

/// `(2π)^(1-2σ) cosh(πρ)/π |Γ(σ+iρ)|² (1 + cos(πσ)/cosh(πρ))`, the closed form of
/// `P² + Q²`.
pub fn pq_norm_closed_form(p: StripPoint, assembly: Assembly) -> Result<f64> {
    let (sigma, rho) = (p.sigma(), p.rho());
    let base = (2.0 * PI).ln();
    let x = PI * rho;
    let value = if assembly.log_space(rho) {
        let ln_abs = specfun::ln_gamma_abs(p.to_complex())?;
        // ln(cosh x + cos πσ) for large x
        let ln_bracket =
            x - LN_2 + (1.0 + (-2.0 * x).exp() + 2.0 * (PI * sigma).cos() * (-x).exp()).ln();
        ((1.0 - 2.0 * sigma) * base - PI.ln() + 2.0 * ln_abs + ln_bracket).exp()
    } else {
        let g = gamma(p.to_complex())?;
        (2.0 * PI).powf(1.0 - 2.0 * sigma) * x.cosh() / PI
            * g.norm_sqr()
            * (1.0 + (PI * sigma).cos() / x.cosh())
    };
    ensure_finite_real(value, "cosh(pi rho) |Gamma|^2", rho)
}

/// `(P² + Q²)` minus its closed form.
pub fn pq_norm_residual(p: StripPoint) -> Result<f64> {
    pq_norm_residual_with(p, Assembly::Auto)
}

pub fn pq_norm_residual_with(p: StripPoint, assembly: Assembly) -> Result<f64> {
    let pq = pq_coefficients_with(p, assembly)?;
    let closed = pq_norm_closed_form(p, assembly)?;
    let r = pq.norm_sqr() - closed;
    if r.is_finite() {
        Ok(r)
    } else {
        Err(Error::Overflow {
            what: "P^2 + Q^2 identity",
            rho: p.rho(),
        })
    }
}
