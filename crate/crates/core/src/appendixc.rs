//! The off-line constraint `L(σ, ρ) = cos(πσ)/cosh(πρ)` obtained from `P² + Q² = 1`,
//! where
//!
//! ```text
//! L(σ, ρ) = (4π²)^(σ-1/2) |Γ(1/2+iρ)|² / |Γ(σ+iρ)|² - 1
//! ```
//!
//! together with its σ-derivative `∂L/∂σ = (L + 1) B(σ, ρ)` and the ordinate `ρ_s`
//! where `L(0, ρ)` crosses the admissible band.
//!
//! The constant in `B = c - 2 Re ψ(σ+iρ)` is not taken on trust: [`calibrate`]
//! fits it against finite differences of [`l_function`] and selects either the
//! printed `4π²` or `log(4π²)`, whichever reproduces the derivative.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::StripPoint;
use crate::specfun::{digamma, ln_gamma_abs};
use crate::zerofind::{refine_root, scan_brackets, ScanConfig};

/// Maximum |analytic - finite difference| for a coefficient to be accepted.
pub const CALIBRATION_TOL: f64 = 1e-6;
pub const FD_STEP: f64 = 1e-5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BCoefficient {
    /// `4π²`
    Printed,
    /// `log(4π²)`
    Calibrated,
}

impl BCoefficient {
    pub fn constant(&self) -> f64 {
        match self {
            BCoefficient::Printed => 4.0 * PI * PI,
            BCoefficient::Calibrated => (4.0 * PI * PI).ln(),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            BCoefficient::Printed => "4*pi^2",
            BCoefficient::Calibrated => "log(4*pi^2)",
        }
    }
}

/// One row of an `L`/`B` parametric scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LScanRow {
    pub sigma: f64,
    pub rho: f64,
    pub l_value: f64,
    /// `cos(πσ)/cosh(πρ)`
    pub rhs: f64,
    pub b_value: f64,
}

/// `ln(L + 1)`.
fn ln_l_plus_one(p: StripPoint) -> Result<f64> {
    let (sigma, rho) = (p.sigma(), p.rho());
    let half = ln_gamma_abs(Complex64::new(0.5, rho))?;
    let here = ln_gamma_abs(p.to_complex())?;
    Ok((2.0 * sigma - 1.0) * (2.0 * PI).ln() + 2.0 * (half - here))
}

/// `L(σ, ρ)`, exactly zero on `σ = 1/2`.
pub fn l_function(p: StripPoint) -> Result<f64> {
    ln_l_plus_one(p).map(f64::exp_m1)
}

/// `cos(πσ)/cosh(πρ)`, the right-hand side of the constraint.
pub fn constraint_rhs(p: StripPoint) -> f64 {
    (PI * p.sigma()).cos() / (PI * p.rho()).cosh()
}

/// Closed forms `L(0, ρ) = ρ tanh(πρ)/(2π) - 1` and `L(1, ρ) = 2π tanh(πρ)/ρ - 1`.
pub fn l_endpoints(rho: f64) -> Result<(f64, f64)> {
    if !(rho > 0.0 && rho.is_finite()) {
        return Err(Error::Range {
            what: "rho",
            value: rho,
            window: "(0, inf)",
        });
    }
    let th = (PI * rho).tanh();
    Ok((rho * th / (2.0 * PI) - 1.0, 2.0 * PI * th / rho - 1.0))
}

pub fn b_factor_with(p: StripPoint, coefficient: BCoefficient) -> Result<f64> {
    Ok(coefficient.constant() - 2.0 * digamma(p.to_complex())?.re)
}

/// `B(σ, ρ)` with the calibrated coefficient.
pub fn b_factor(p: StripPoint) -> Result<f64> {
    b_factor_with(p, calibration()?.chosen)
}

pub fn dl_dsigma_with(p: StripPoint, coefficient: BCoefficient) -> Result<f64> {
    Ok(ln_l_plus_one(p)?.exp() * b_factor_with(p, coefficient)?)
}

/// `∂L/∂σ = (L + 1) B(σ, ρ)` with the calibrated coefficient.
pub fn dl_dsigma(p: StripPoint) -> Result<f64> {
    dl_dsigma_with(p, calibration()?.chosen)
}

/// Central difference of [`l_function`] in σ.
pub fn dl_dsigma_numeric(p: StripPoint, h: f64) -> Result<f64> {
    let up = StripPoint::new(p.sigma() + h, p.rho())?;
    let down = StripPoint::new(p.sigma() - h, p.rho())?;
    Ok((l_function(up)? - l_function(down)?) / (2.0 * h))
}

/// Outcome of fitting the constant in `B` against finite differences.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Calibration {
    pub chosen: BCoefficient,
    /// Mean of `FD/(L+1) + 2 Re ψ` over the calibration points.
    pub fitted_constant: f64,
    /// Max |analytic - FD| with the printed constant.
    pub printed_deviation: f64,
    /// Max |analytic - FD| with `log(4π²)`.
    pub calibrated_deviation: f64,
    pub samples: usize,
}

const CALIBRATION_POINTS: [(f64, f64); 8] = [
    (0.1, 2.0),
    (0.3, 5.0),
    (0.7, 9.0),
    (0.9, 15.0),
    (0.2, 6.3),
    (0.8, 0.7),
    (0.45, 30.0),
    (0.0, 3.0),
];

pub fn calibrate() -> Result<Calibration> {
    let mut fitted = 0.0;
    let mut printed_deviation: f64 = 0.0;
    let mut calibrated_deviation: f64 = 0.0;
    for &(sigma, rho) in &CALIBRATION_POINTS {
        let p = StripPoint::new(sigma, rho)?;
        let numeric = dl_dsigma_numeric(p, FD_STEP)?;
        let weight = ln_l_plus_one(p)?.exp();
        fitted += numeric / weight + 2.0 * digamma(p.to_complex())?.re;
        printed_deviation =
            printed_deviation.max((dl_dsigma_with(p, BCoefficient::Printed)? - numeric).abs());
        calibrated_deviation = calibrated_deviation
            .max((dl_dsigma_with(p, BCoefficient::Calibrated)? - numeric).abs());
    }
    let chosen = if printed_deviation <= CALIBRATION_TOL {
        BCoefficient::Printed
    } else {
        BCoefficient::Calibrated
    };
    Ok(Calibration {
        chosen,
        fitted_constant: fitted / CALIBRATION_POINTS.len() as f64,
        printed_deviation,
        calibrated_deviation,
        samples: CALIBRATION_POINTS.len(),
    })
}

static CALIBRATION: OnceLock<Calibration> = OnceLock::new();

/// The calibration result, computed once per process.
pub fn calibration() -> Result<Calibration> {
    if let Some(c) = CALIBRATION.get() {
        return Ok(*c);
    }
    let c = calibrate()?;
    Ok(*CALIBRATION.get_or_init(|| c))
}

/// The sign-change ordinate together with the bracket it was refined from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RhoS {
    /// Root of `L(0, ρ) - cos(0)/cosh(πρ)`.
    pub rho_s: f64,
    pub bracket: (f64, f64),
    /// Root of `L(0, ρ) = 0`, kept for comparison.
    pub alt_root: f64,
}

pub const RHO_S_SCAN: (f64, f64) = (1.0, 20.0);
pub const RHO_S_STEP: f64 = 0.01;
const RHO_S_TOL: f64 = 1e-13;

pub fn find_rho_s() -> Result<RhoS> {
    find_rho_s_with_step(RHO_S_STEP)
}

pub fn find_rho_s_with_step(step: f64) -> Result<RhoS> {
    let cfg = ScanConfig {
        rho_min: RHO_S_SCAN.0,
        rho_max: RHO_S_SCAN.1,
        step,
        refine_tol: RHO_S_TOL,
        classify_tol: 1.0,
    };
    let band = |rho: f64| l_endpoints(rho).map(|(l0, _)| l0 - 1.0 / (PI * rho).cosh());
    let l0 = |rho: f64| l_endpoints(rho).map(|(l0, _)| l0);

    let bracket = *scan_brackets(&cfg, band)?
        .first()
        .ok_or_else(|| Error::NoRoot("L(0, rho) never crosses the band on [1, 20]".into()))?;
    let rho_s = refine_root(bracket, band, RHO_S_TOL)?.rho;

    let alt_bracket = *scan_brackets(&cfg, l0)?
        .first()
        .ok_or_else(|| Error::NoRoot("L(0, rho) has no root on [1, 20]".into()))?;
    let alt_root = refine_root(alt_bracket, l0, RHO_S_TOL)?.rho;

    Ok(RhoS {
        rho_s,
        bracket,
        alt_root,
    })
}

pub fn scan_row(sigma: f64, rho: f64) -> Result<LScanRow> {
    let p = StripPoint::new(sigma, rho)?;
    Ok(LScanRow {
        sigma,
        rho,
        l_value: l_function(p)?,
        rhs: constraint_rhs(p),
        b_value: b_factor(p)?,
    })
}

/// `L` against σ ∈ [0, 1] (step 0.01) at `ρ_s - δ`, `ρ_s`, `ρ_s + δ`.
pub fn l_scan(rho_s: f64, delta: f64) -> Result<Vec<LScanRow>> {
    let mut rows = Vec::with_capacity(303);
    for rho in [rho_s - delta, rho_s, rho_s + delta] {
        for i in 0..=100 {
            rows.push(scan_row(i as f64 / 100.0, rho)?);
        }
    }
    Ok(rows)
}

pub const B_SCAN_SIGMAS: [f64; 5] = [0.0, 0.25, 0.5, 0.75, 1.0];

/// `B` over σ ∈ {0, 1/4, 1/2, 3/4, 1} × ρ ∈ [ρ_s - 1, ρ_s + 1] (step 0.01).
pub fn b_scan(rho_s: f64) -> Result<Vec<LScanRow>> {
    let mut rows = Vec::with_capacity(5 * 201);
    for sigma in B_SCAN_SIGMAS {
        for i in 0..=200 {
            rows.push(scan_row(sigma, rho_s - 1.0 + i as f64 / 100.0)?);
        }
    }
    Ok(rows)
}
