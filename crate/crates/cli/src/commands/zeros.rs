use log::{info, warn};
use serde::Serialize;
use zeta_sieve::critline::{full_zero_function, half_zero_function};
use zeta_sieve::zerofind::{run_campaign, ScanConfig, ZeroKind, ZeroRecord};

use crate::args::{Format, ZerosArgs};
use crate::config::{resolve, ConfigFile};
use crate::error::{exit, CliError, CliResult};
use crate::output::OutputDir;

pub const RECORDS_CSV: &str = "zeros.csv";
pub const RECORDS_JSON: &str = "zeros.json";
pub const PLOT_CSV: &str = "zeros_plot.csv";

pub const RECORD_HEADER: [&str; 7] = [
    "rho",
    "kind",
    "residual",
    "zeta_mag",
    "bracket_lo",
    "bracket_hi",
    "iterations",
];
pub const PLOT_HEADER: [&str; 3] = ["rho", "half_zero_value", "full_zero_value"];

#[derive(Debug, Clone, Serialize)]
pub struct ZeroRow {
    pub rho: f64,
    pub kind: &'static str,
    pub residual: f64,
    pub zeta_mag: f64,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    pub iterations: usize,
}

impl From<&ZeroRecord> for ZeroRow {
    fn from(r: &ZeroRecord) -> Self {
        Self {
            rho: r.rho,
            kind: r.kind.as_str(),
            residual: r.residual,
            zeta_mag: r.zeta_mag,
            bracket_lo: r.bracket.0,
            bracket_hi: r.bracket.1,
            iterations: r.iterations,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
struct PlotRow {
    rho: f64,
    half_zero_value: f64,
    full_zero_value: f64,
}

pub fn scan_config(args: &ZerosArgs, config: &ConfigFile) -> CliResult<ScanConfig> {
    let defaults = ScanConfig::default();
    let rho_min = resolve(args.min, config, "min", f64::NAN)?;
    let rho_max = resolve(args.max, config, "max", f64::NAN)?;
    if rho_min.is_nan() || rho_max.is_nan() {
        return Err(CliError::Usage("zeros needs --min and --max".into()));
    }
    let cfg = ScanConfig {
        rho_min,
        rho_max,
        step: resolve(args.step, config, "step", defaults.step)?,
        refine_tol: resolve(args.tol, config, "tol", defaults.refine_tol)?,
        classify_tol: resolve(
            args.classify_tol,
            config,
            "classify-tol",
            defaults.classify_tol,
        )?,
    };
    cfg.validate().map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(cfg)
}

pub fn run(
    args: &ZerosArgs,
    config: &ConfigFile,
    out: &mut OutputDir,
) -> CliResult<(u8, serde_json::Value)> {
    let cfg = scan_config(args, config)?;
    let format = resolve(args.format, config, "format", Format::Both)?;
    info!("zeros: {cfg:?}");

    let campaign = run_campaign(&cfg)?;
    for f in &campaign.failures {
        warn!(
            "bracket [{}, {}] of {:?} not refined: {}",
            f.bracket.0, f.bracket.1, f.target, f.error
        );
    }
    let rows: Vec<ZeroRow> = campaign.records.iter().map(ZeroRow::from).collect();
    if format.csv() {
        out.write_csv_with_header(RECORDS_CSV, &RECORD_HEADER, &rows)?;
    }
    if format.json() {
        out.write_json(RECORDS_JSON, &rows)?;
    }

    let plot = cfg
        .grid()
        .into_iter()
        .map(|rho| {
            Ok(PlotRow {
                rho,
                half_zero_value: half_zero_function(rho)?,
                full_zero_value: full_zero_function(rho, 1)?,
            })
        })
        .collect::<zeta_sieve::Result<Vec<_>>>()?;
    out.write_csv_with_header(PLOT_CSV, &PLOT_HEADER, &plot)?;

    let full = campaign.of_kind(ZeroKind::FullZero).count();
    let half = campaign
        .records
        .iter()
        .filter(|r| r.kind.is_half_zero())
        .count();
    println!(
        "{} roots in [{}, {}]: {full} full-zeros, {half} half-zeros, {} failed brackets",
        rows.len(),
        cfg.rho_min,
        cfg.rho_max,
        campaign.failures.len()
    );

    if rows.is_empty() && !campaign.failures.is_empty() {
        return Err(CliError::NoRoot(format!(
            "all {} brackets failed to refine",
            campaign.failures.len()
        )));
    }
    let config_echo = serde_json::json!({
        "rho_min": cfg.rho_min,
        "rho_max": cfg.rho_max,
        "step": cfg.step,
        "refine_tol": cfg.refine_tol,
        "classify_tol": cfg.classify_tol,
        "format": format!("{format:?}").to_lowercase(),
    });
    Ok((exit::OK, config_echo))
}
