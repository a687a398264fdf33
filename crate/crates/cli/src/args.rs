use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::grid::GridSpec;

#[derive(Debug, Parser)]
#[command(
    name = "zeta-sieve",
    version,
    about = "Critical-line sieves, identity checks and constraint scans for the zeta functional equation"
)]
pub struct Cli {
    /// Directory for every output file.
    #[arg(long, global = true, value_name = "DIR")]
    pub out: Option<PathBuf>,

    /// Flat key = value file supplying defaults for any flag.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the functional-equation identities on a grid of strip points.
    Verify(VerifyArgs),
    /// Locate and classify roots of the two critical-line sieve functions.
    Zeros(ZerosArgs),
    /// Locate the sign-change ordinate and write the L and B scans.
    Appendixc(AppendixcArgs),
    /// Print zeta, Gamma and the coupling factors at one point.
    Eval(EvalArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// sigma0:sigma1:rho0:rho1:n
    #[arg(long, value_name = "SPEC")]
    pub grid: Option<GridSpec>,

    /// Tolerance for the algebraic identities.
    #[arg(long, value_name = "T")]
    pub tol: Option<f64>,

    /// Assemble hyperbolic and Gamma products as plain binary64 products.
    #[arg(long)]
    pub no_log_space: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Both,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        <Format as ValueEnum>::from_str(s, true)
    }
}

impl Format {
    pub fn csv(self) -> bool {
        matches!(self, Format::Csv | Format::Both)
    }

    pub fn json(self) -> bool {
        matches!(self, Format::Json | Format::Both)
    }
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    #[arg(long, value_name = "R0")]
    pub min: Option<f64>,

    #[arg(long, value_name = "R1")]
    pub max: Option<f64>,

    /// Scan step in rho.
    #[arg(long, value_name = "S")]
    pub step: Option<f64>,

    /// Root refinement tolerance.
    #[arg(long, value_name = "T")]
    pub tol: Option<f64>,

    /// Threshold on |Re zeta| and |Im zeta| used for classification.
    #[arg(long, value_name = "T")]
    pub classify_tol: Option<f64>,

    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Args)]
pub struct AppendixcArgs {
    /// Offset of the outer L-scan ordinates from the sign-change ordinate.
    #[arg(long, value_name = "D")]
    pub delta: Option<f64>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub sigma: f64,

    #[arg(long)]
    pub rho: f64,
}
