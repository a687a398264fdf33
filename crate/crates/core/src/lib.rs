//! Numerics for the real/imaginary decomposition of the zeta functional equation.
//!
//! The crate is organised bottom-up:
//!
//! - [`specfun`]: complex Gamma, digamma, zeta and ρ-derivatives of zeta.
//! - [`funceq`]: the coupling coefficients `P`, `Q` of `ζ(1-s) = χ(s) ζ(s)` split
//!   into real and imaginary parts, and the identities they satisfy.
//! - [`critline`]: the critical-line factors `N`, `D_R`, `D_I`, `C_p`, `C_m` and the
//!   two sieve functions whose roots are half-zeros and full-zeros.
//! - [`zerofind`]: bracket scanning, root refinement, classification and campaigns.
//! - [`appendixc`]: the off-line constraint function `L(σ, ρ)`, its σ-derivative
//!   and the sign-change ordinate `ρ_s`.
//!
//! Everything is a pure function of its inputs and safe to call from any thread.

pub mod appendixc;
pub mod critline;
pub mod error;
pub mod funceq;
pub mod point;
pub mod specfun;
pub mod zerofind;

pub use appendixc::LScanRow;
pub use critline::CriticalLineFactors;
pub use error::{Error, Result};
pub use funceq::{Assembly, DecompositionQuad, PQCoefficients};
pub use point::{ComplexValue, StripPoint};
pub use specfun::{EvalAccuracy, Evaluated};
pub use zerofind::{ScanConfig, ZeroKind, ZeroRecord};
