use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("s = {sigma} + {rho}i lies within {distance:e} of a pole")]
    Pole { sigma: f64, rho: f64, distance: f64 },

    #[error("{what} = {value} is outside the working window {window}")]
    Range {
        what: &'static str,
        value: f64,
        window: &'static str,
    },

    #[error(
        "requested accuracy {requested:e} not met (best bound {achieved:e}) within the term cap"
    )]
    Accuracy { requested: f64, achieved: f64 },

    #[error("non-finite value produced by {what} at rho = {rho}")]
    Overflow { what: &'static str, rho: f64 },

    #[error("target returned a non-finite sample at rho = {rho}")]
    NonFiniteSample { rho: f64 },

    #[error("no convergence after {iterations} iterations in bracket [{lo}, {hi}]")]
    NoConvergence { lo: f64, hi: f64, iterations: usize },

    #[error("bracket [{lo}, {hi}] does not straddle a sign change")]
    NotBracketed { lo: f64, hi: f64 },

    #[error("no root found: {0}")]
    NoRoot(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
