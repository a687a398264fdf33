use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: u8 = 0;
    pub const IDENTITY_FAILURE: u8 = 1;
    pub const EVALUATION: u8 = 2;
    pub const NO_ROOT: u8 = 3;
    pub const USAGE: u8 = 64;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{0}")]
    Numerics(#[from] zeta_sieve::Error),
    #[error("evaluation failed at (sigma = {sigma}, rho = {rho}): {source}")]
    AtPoint {
        sigma: f64,
        rho: f64,
        source: zeta_sieve::Error,
    },
    #[error("no root: {0}")]
    NoRoot(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        use zeta_sieve::Error as E;
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::NoRoot(_) => exit::NO_ROOT,
            CliError::Numerics(E::InvalidConfig(_)) => exit::USAGE,
            CliError::Numerics(E::NoRoot(_)) => exit::NO_ROOT,
            _ => exit::EVALUATION,
        }
    }

    pub fn io(path: impl std::fmt::Display, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_string(),
            source,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
