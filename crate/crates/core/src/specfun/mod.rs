//! Complex Gamma, digamma and zeta in and around the critical strip.
//!
//! The [`StripPoint`]-taking functions are the checked entry points; the
//! `Complex64` functions underneath accept any argument and are used by the other
//! modules and by tests that need conjugate or reflected points.

mod digamma;
mod gamma;
mod jet;
mod zeta;

pub use digamma::digamma;
pub(crate) use gamma::ln_cos;
pub use gamma::{gamma, gamma_scaled, ln_gamma, ln_gamma_abs, POLE_EPS};
pub use zeta::{
    zeta, zeta_jet, EvalAccuracy, ZetaJet, BERNOULLI_TERMS, DEFAULT_ABS_TOL, MAX_ORDINATE,
};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::{ComplexValue, StripPoint};

/// `Γ(σ + iρ)`.
pub fn gamma_complex(p: StripPoint) -> Result<ComplexValue> {
    gamma(p.to_complex())
}

/// `ψ(σ + iρ)`.
pub fn digamma_complex(p: StripPoint) -> Result<ComplexValue> {
    digamma(p.to_complex())
}

/// A zeta value together with the accuracy actually achieved.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Evaluated {
    pub value: ComplexValue,
    pub accuracy: EvalAccuracy,
}

/// `ζ(σ + iρ)` to the absolute tolerance in `acc`.
pub fn zeta_strip(p: StripPoint, acc: EvalAccuracy) -> Result<Evaluated> {
    let z = zeta_jet(p.to_complex(), acc.abs_tol)?;
    Ok(Evaluated {
        value: z.value,
        accuracy: z.accuracy,
    })
}

/// Partial derivatives of `ζ(σ + iρ)` along ρ, as `∂^m ζ_R/∂ρ^m + i ∂^m ζ_I/∂ρ^m`.
///
/// Since `∂/∂ρ = i d/ds`, this is `i ζ'(s)` for `m = 1` and `-ζ''(s)` for `m = 2`.
/// In particular `∂ζ_R/∂ρ = -Im ζ'(s)` and `∂ζ_I/∂ρ = Re ζ'(s)`.
pub fn zeta_rho_deriv(p: StripPoint, m: u8) -> Result<ComplexValue> {
    let z = zeta_jet(p.to_complex(), DEFAULT_ABS_TOL)?;
    rho_derivative(&z, m)
}

pub(crate) fn rho_derivative(z: &ZetaJet, m: u8) -> Result<Complex64> {
    match m {
        1 => Ok(Complex64::i() * z.d1),
        2 => Ok(-z.d2),
        _ => Err(Error::InvalidConfig(format!(
            "derivative order must be 1 or 2, got {m}"
        ))),
    }
}
