//! Points of the (σ, ρ) plane and the complex value type shared by every module.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Real/imaginary pair returned by the special-function evaluators.
pub type ComplexValue = Complex64;

pub const SIGMA_MIN: f64 = -1.0;
pub const SIGMA_MAX: f64 = 2.0;

/// A point `s = sigma + i rho` of the working window `sigma ∈ [-1, 2]`, `rho ≥ 0`.
///
/// Negative ordinates are not representable; callers use conjugate symmetry.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StripPoint {
    sigma: f64,
    rho: f64,
}

impl StripPoint {
    pub fn new(sigma: f64, rho: f64) -> Result<Self> {
        if !sigma.is_finite() || !(SIGMA_MIN..=SIGMA_MAX).contains(&sigma) {
            return Err(Error::Range {
                what: "sigma",
                value: sigma,
                window: "[-1, 2]",
            });
        }
        if !rho.is_finite() || rho < 0.0 {
            return Err(Error::Range {
                what: "rho",
                value: rho,
                window: "[0, inf)",
            });
        }
        Ok(Self { sigma, rho })
    }

    /// Point on the critical line `sigma = 1/2`.
    pub fn critical(rho: f64) -> Result<Self> {
        Self::new(0.5, rho)
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }

    /// `1 - sigma` at the same ordinate. The window is symmetric about 1/2 so this
    /// never leaves it.
    pub fn reflected(&self) -> Self {
        Self {
            sigma: 1.0 - self.sigma,
            rho: self.rho,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(self.sigma, self.rho)
    }
}

impl std::fmt::Display for StripPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.sigma, self.rho)
    }
}

pub(crate) fn ensure_finite(z: Complex64, what: &'static str, rho: f64) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::Overflow { what, rho })
    }
}

pub(crate) fn ensure_finite_real(x: f64, what: &'static str, rho: f64) -> Result<f64> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(Error::Overflow { what, rho })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_is_enforced() {
        assert!(StripPoint::new(-1.0, 0.0).is_ok());
        assert!(StripPoint::new(2.0, 10.0).is_ok());
        assert!(matches!(
            StripPoint::new(2.5, 1.0),
            Err(Error::Range { what: "sigma", .. })
        ));
        assert!(matches!(
            StripPoint::new(0.5, -1.0),
            Err(Error::Range { what: "rho", .. })
        ));
        assert!(StripPoint::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn reflection_stays_in_window() {
        let p = StripPoint::new(-1.0, 3.0).unwrap();
        assert_eq!(p.reflected().sigma(), 2.0);
        assert_eq!(p.reflected().rho(), 3.0);
    }
}
