//! Front end for the `zeta-sieve` binary.
//!
//! Exit codes: 0 success, 1 identity failure, 2 evaluation error, 3 no root,
//! 64 usage error.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod grid;
pub mod output;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use config::{resolve, ConfigFile};
use error::{exit, CliResult};
use output::OutputDir;

pub const DEFAULT_OUT: &str = "zeta-sieve-out";
pub const LOG_ENV: &str = "ZS_LOG_LEVEL";

pub fn init_logging() {
    let env = env_logger::Env::new().filter_or(LOG_ENV, "warn");
    let _ = env_logger::Builder::from_env(env)
        .format_timestamp(None)
        .try_init();
}

fn dispatch(cli: Cli) -> CliResult<u8> {
    let config = match &cli.config {
        Some(path) => ConfigFile::load(path)?,
        None => ConfigFile::default(),
    };
    if let Command::Eval(args) = &cli.command {
        commands::eval::run(args)?;
        return Ok(exit::OK);
    }
    let root = resolve(cli.out.clone(), &config, "out", PathBuf::from(DEFAULT_OUT))?;
    let mut out = OutputDir::create(&root)?;
    let (name, (code, echo)) = match &cli.command {
        Command::Verify(a) => ("verify", commands::verify::run(a, &config, &mut out)?),
        Command::Zeros(a) => ("zeros", commands::zeros::run(a, &config, &mut out)?),
        Command::Appendixc(a) => ("appendixc", commands::appendixc::run(a, &config, &mut out)?),
        Command::Eval(_) => unreachable!(),
    };
    out.finish(name, echo)?;
    Ok(code)
}

/// Parses `argv`, runs the command and returns the process exit code.
pub fn run<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => exit::OK,
                _ => exit::USAGE,
            };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("zeta-sieve: {e}");
            e.exit_code()
        }
    }
}
