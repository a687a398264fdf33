use log::info;
use serde::Serialize;
use zeta_sieve::appendixc::{b_scan, calibration, find_rho_s, l_scan, RHO_S_SCAN};
use zeta_sieve::Error;

use super::verify::BCoefficientReport;
use crate::args::AppendixcArgs;
use crate::config::{resolve, ConfigFile};
use crate::error::{exit, CliError, CliResult};
use crate::output::OutputDir;

pub const L_SCAN_CSV: &str = "l_scan.csv";
pub const B_SCAN_CSV: &str = "b_scan.csv";
pub const SUMMARY_JSON: &str = "appendixc.json";
pub const DEFAULT_DELTA: f64 = 0.5;

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub rho_s: f64,
    pub bracket: [f64; 2],
    pub alt_root: f64,
    pub scan_interval: [f64; 2],
    pub delta: f64,
    pub b_coefficient: BCoefficientReport,
}

pub fn run(
    args: &AppendixcArgs,
    config: &ConfigFile,
    out: &mut OutputDir,
) -> CliResult<(u8, serde_json::Value)> {
    let delta = resolve(args.delta, config, "delta", DEFAULT_DELTA)?;
    if !(delta > 0.0 && delta <= 5.0) {
        return Err(CliError::Usage(format!(
            "delta must lie in (0, 5], got {delta}"
        )));
    }
    let found = find_rho_s().map_err(|e| match e {
        Error::NoRoot(msg) => CliError::NoRoot(msg),
        other => other.into(),
    })?;
    info!("rho_s {found:?}");
    println!(
        "rho_s = {:.9} bracket [{}, {}]",
        found.rho_s, found.bracket.0, found.bracket.1
    );

    out.write_csv(L_SCAN_CSV, &l_scan(found.rho_s, delta)?)?;
    out.write_csv(B_SCAN_CSV, &b_scan(found.rho_s)?)?;
    let summary = Summary {
        rho_s: found.rho_s,
        bracket: [found.bracket.0, found.bracket.1],
        alt_root: found.alt_root,
        scan_interval: [RHO_S_SCAN.0, RHO_S_SCAN.1],
        delta,
        b_coefficient: calibration()?.into(),
    };
    out.write_json(SUMMARY_JSON, &summary)?;
    Ok((exit::OK, serde_json::json!({ "delta": delta })))
}
