use std::f64::consts::PI;

use log::{debug, info};
use serde::Serialize;
use zeta_sieve::appendixc::{
    calibration, dl_dsigma, dl_dsigma_numeric, l_endpoints, l_function, Calibration,
    CALIBRATION_TOL, FD_STEP,
};
use zeta_sieve::critline::factors;
use zeta_sieve::funceq::{
    chi_factor_with, functional_residuals_with, pq_coefficients_with, pq_norm_residual_with,
};
use zeta_sieve::specfun::{gamma, ln_gamma_abs};
use zeta_sieve::{Assembly, ComplexValue, Error, StripPoint};

use crate::args::VerifyArgs;
use crate::config::{resolve, ConfigFile};
use crate::error::{exit, CliError, CliResult};
use crate::grid::GridSpec;
use crate::output::OutputDir;

pub const REPORT_FILE: &str = "verify_report.json";
pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    /// `absolute` or `relative`
    pub measure: &'static str,
    pub tolerance: f64,
    pub max_residual: f64,
    /// `[sigma, rho]` of the largest residual.
    pub worst_point: Option<[f64; 2]>,
    pub points: usize,
    pub passed: bool,
}

impl IdentityCheck {
    fn new(name: &'static str, measure: &'static str, tolerance: f64) -> Self {
        Self {
            name,
            measure,
            tolerance,
            max_residual: 0.0,
            worst_point: None,
            points: 0,
            passed: true,
        }
    }

    fn record(&mut self, sigma: f64, rho: f64, residual: f64) {
        self.points += 1;
        if residual > self.max_residual || self.worst_point.is_none() {
            self.max_residual = residual;
            self.worst_point = Some([sigma, rho]);
        }
        self.passed = self.max_residual <= self.tolerance;
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BCoefficientReport {
    pub chosen: String,
    pub expression: &'static str,
    pub fitted_constant: f64,
    pub printed_deviation: f64,
    pub calibrated_deviation: f64,
    pub samples: usize,
}

impl From<Calibration> for BCoefficientReport {
    fn from(c: Calibration) -> Self {
        Self {
            chosen: format!("{:?}", c.chosen).to_lowercase(),
            expression: c.chosen.label(),
            fitted_constant: c.fitted_constant,
            printed_deviation: c.printed_deviation,
            calibrated_deviation: c.calibrated_deviation,
            samples: c.samples,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub grid: GridSpec,
    pub assembly: &'static str,
    pub points: usize,
    pub identities: Vec<IdentityCheck>,
    pub b_coefficient: BCoefficientReport,
    pub passed: bool,
}

/// Indices into the identity table.
mod id {
    pub const FUNCTIONAL: usize = 0;
    pub const PQ_NORM: usize = 1;
    pub const CHI: usize = 2;
    pub const GAMMA_AXIS: usize = 3;
    pub const GAMMA_HALF: usize = 4;
    pub const GAMMA_ONE: usize = 5;
    pub const LINE_SUM: usize = 6;
    pub const LINE_NORM: usize = 7;
    pub const LINE_BOUNDS: usize = 8;
    pub const L_ON_LINE: usize = 9;
    pub const L_ENDPOINTS: usize = 10;
    pub const L_DERIVATIVE: usize = 11;
}

fn identity_table(tol: f64) -> Vec<IdentityCheck> {
    vec![
        IdentityCheck::new("functional_equation", "relative", tol),
        IdentityCheck::new("pq_norm_closed_form", "absolute", tol),
        IdentityCheck::new("chi_cross_check", "relative", tol),
        IdentityCheck::new("gamma_modulus_imaginary_axis", "relative", tol),
        IdentityCheck::new("gamma_modulus_half_line", "relative", tol),
        IdentityCheck::new("gamma_modulus_one_line", "relative", tol),
        IdentityCheck::new("critical_line_sum", "absolute", 0.0),
        IdentityCheck::new("critical_line_norm", "absolute", tol),
        IdentityCheck::new("critical_line_bounds", "absolute", tol),
        IdentityCheck::new("constraint_on_line", "absolute", 0.0),
        IdentityCheck::new("constraint_endpoints", "absolute", tol),
        IdentityCheck::new("constraint_sigma_derivative", "absolute", CALIBRATION_TOL),
    ]
}

/// `ln sinh x` for `x > 0`.
fn ln_sinh(x: f64) -> f64 {
    x + (-(-2.0 * x).exp()).ln_1p() - std::f64::consts::LN_2
}

/// `ln cosh x` for `x >= 0`.
fn ln_cosh(x: f64) -> f64 {
    x + (-2.0 * x).exp().ln_1p() - std::f64::consts::LN_2
}

/// Relative residuals of `|Γ(iρ)|²`, `|Γ(1/2+iρ)|²`, `|Γ(1+iρ)|²` against
/// `π/(ρ sinh πρ)`, `π/cosh πρ`, `πρ/sinh πρ`.
fn gamma_modulus_residuals(rho: f64, assembly: Assembly) -> zeta_sieve::Result<[f64; 3]> {
    let x = PI * rho;
    let at = |s: f64| ComplexValue::new(s, rho);
    match assembly {
        Assembly::Auto => {
            let expected = [
                PI.ln() - rho.ln() - ln_sinh(x),
                PI.ln() - ln_cosh(x),
                x.ln() - ln_sinh(x),
            ];
            let mut out = [0.0; 3];
            for (k, s) in [0.0, 0.5, 1.0].into_iter().enumerate() {
                out[k] = (2.0 * ln_gamma_abs(at(s))? - expected[k]).exp_m1().abs();
            }
            Ok(out)
        }
        Assembly::Direct => {
            let expected = [PI / (rho * x.sinh()), PI / x.cosh(), x / x.sinh()];
            let mut out = [0.0; 3];
            for (k, s) in [0.0, 0.5, 1.0].into_iter().enumerate() {
                let got = gamma(at(s))?.norm_sqr();
                let r = ((got - expected[k]) / expected[k]).abs();
                if !r.is_finite() || got == 0.0 {
                    return Err(Error::Overflow {
                        what: "|Gamma|^2 identity",
                        rho,
                    });
                }
                out[k] = r;
            }
            Ok(out)
        }
    }
}

fn check_point(
    checks: &mut [IdentityCheck],
    sigma: f64,
    rho: f64,
    assembly: Assembly,
) -> zeta_sieve::Result<()> {
    let p = StripPoint::new(sigma, rho)?;

    let f = functional_residuals_with(p, assembly)?;
    checks[id::FUNCTIONAL].record(sigma, rho, f.relative());
    checks[id::PQ_NORM].record(sigma, rho, pq_norm_residual_with(p, assembly)?.abs());

    let chi = chi_factor_with(p, assembly)?;
    let pq = pq_coefficients_with(p, assembly)?.as_chi();
    checks[id::CHI].record(sigma, rho, (chi - pq).norm() / chi.norm());

    let fd = dl_dsigma_numeric(p, FD_STEP)?;
    checks[id::L_DERIVATIVE].record(sigma, rho, (dl_dsigma(p)? - fd).abs());

    if rho > 0.0 {
        let g = gamma_modulus_residuals(rho, assembly)?;
        for (k, idx) in [id::GAMMA_AXIS, id::GAMMA_HALF, id::GAMMA_ONE]
            .into_iter()
            .enumerate()
        {
            checks[idx].record(sigma, rho, g[k]);
        }

        let c = factors(rho)?;
        checks[id::LINE_SUM].record(sigma, rho, (c.dr + c.di - 1.0).abs());
        checks[id::LINE_NORM].record(sigma, rho, (c.n * c.n - c.dr * c.di).abs());
        let excess = (-c.dr).max(c.dr - 1.0).max(0.0);
        checks[id::LINE_BOUNDS].record(sigma, rho, excess);

        let on_line = l_function(StripPoint::critical(rho)?)?;
        checks[id::L_ON_LINE].record(sigma, rho, on_line.abs());
        let (l0, l1) = l_endpoints(rho)?;
        let e0 = (l_function(StripPoint::new(0.0, rho)?)? - l0).abs();
        let e1 = (l_function(StripPoint::new(1.0, rho)?)? - l1).abs();
        checks[id::L_ENDPOINTS].record(sigma, rho, e0.max(e1));
    }
    Ok(())
}

pub fn run(
    args: &VerifyArgs,
    config: &ConfigFile,
    out: &mut OutputDir,
) -> CliResult<(u8, serde_json::Value)> {
    let grid = resolve(args.grid, config, "grid", GridSpec::default())?;
    let tol = resolve(args.tol, config, "tol", DEFAULT_TOL)?;
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(CliError::Usage(format!(
            "tol must be non-negative, got {tol}"
        )));
    }
    let assembly = if args.no_log_space || config.flag("no-log-space")? {
        Assembly::Direct
    } else {
        Assembly::Auto
    };
    info!("verify: grid {grid}, tol {tol:e}, {assembly:?}");

    let mut checks = identity_table(tol);
    for (sigma, rho) in grid.samples() {
        debug!("checking ({sigma}, {rho})");
        check_point(&mut checks, sigma, rho, assembly).map_err(|source| CliError::AtPoint {
            sigma,
            rho,
            source,
        })?;
    }

    let passed = checks.iter().all(|c| c.passed);
    let report = VerifyReport {
        grid,
        assembly: match assembly {
            Assembly::Auto => "log-space",
            Assembly::Direct => "direct",
        },
        points: grid.points,
        identities: checks,
        b_coefficient: calibration()?.into(),
        passed,
    };
    out.write_json(REPORT_FILE, &report)?;

    for c in &report.identities {
        println!(
            "{:<30} {:<5} max {:.3e} (tol {:.1e})",
            c.name,
            if c.passed { "ok" } else { "FAIL" },
            c.max_residual,
            c.tolerance
        );
    }
    println!("B coefficient: {}", report.b_coefficient.expression);

    let config_echo = serde_json::json!({
        "grid": grid.to_string(),
        "tol": tol,
        "assembly": report.assembly,
    });
    let code = if passed {
        exit::OK
    } else {
        exit::IDENTITY_FAILURE
    };
    Ok((code, config_echo))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_helpers_match_direct_forms() {
        for x in [0.1, 1.0, 5.0, 30.0] {
            assert!((ln_sinh(x) - x.sinh().ln()).abs() < 1e-13);
            assert!((ln_cosh(x) - x.cosh().ln()).abs() < 1e-13);
        }
    }

    #[test]
    fn gamma_moduli_in_both_assemblies() {
        for rho in [0.5, 2.0, 10.0] {
            for a in [Assembly::Auto, Assembly::Direct] {
                let r = gamma_modulus_residuals(rho, a).unwrap();
                assert!(r.iter().all(|x| *x < 1e-10), "{rho} {a:?}: {r:?}");
            }
        }
        assert!(gamma_modulus_residuals(250.0, Assembly::Auto).is_ok());
        assert!(gamma_modulus_residuals(250.0, Assembly::Direct).is_err());
    }

    #[test]
    fn worst_point_tracks_maximum() {
        let mut c = IdentityCheck::new("x", "absolute", 1.0);
        c.record(0.1, 1.0, 0.5);
        c.record(0.2, 2.0, 2.0);
        c.record(0.3, 3.0, 0.1);
        assert_eq!(c.worst_point, Some([0.2, 2.0]));
        assert!(!c.passed);
        assert_eq!(c.points, 3);
    }
}
