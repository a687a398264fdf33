//! `σ0:σ1:ρ0:ρ1:n` sample grids.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use zeta_sieve::point::{SIGMA_MAX, SIGMA_MIN};
use zeta_sieve::specfun::MAX_ORDINATE;

const MAX_POINTS: usize = 1_000_000;

/// `points` samples of the rectangle `[σ0, σ1] × [ρ0, ρ1]`, placed on the
/// base-(2, 3) Halton sequence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub sigma_min: f64,
    pub sigma_max: f64,
    pub rho_min: f64,
    pub rho_max: f64,
    pub points: usize,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            sigma_min: 0.05,
            sigma_max: 0.95,
            rho_min: 0.5,
            rho_max: 80.0,
            points: 200,
        }
    }
}

fn radical_inverse(mut i: usize, base: usize) -> f64 {
    let inv = 1.0 / base as f64;
    let mut frac = inv;
    let mut x = 0.0;
    while i > 0 {
        x += (i % base) as f64 * frac;
        i /= base;
        frac *= inv;
    }
    x
}

impl GridSpec {
    pub fn samples(&self) -> Vec<(f64, f64)> {
        (1..=self.points)
            .map(|i| {
                (
                    self.sigma_min + (self.sigma_max - self.sigma_min) * radical_inverse(i, 2),
                    self.rho_min + (self.rho_max - self.rho_min) * radical_inverse(i, 3),
                )
            })
            .collect()
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        if parts.len() != 5 {
            return Err(format!("expected sigma0:sigma1:rho0:rho1:n, got {s:?}"));
        }
        let num = |i: usize| -> Result<f64, String> {
            parts[i]
                .parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| format!("bad number {:?} in grid", parts[i]))
        };
        let points: usize = parts[4]
            .parse()
            .map_err(|_| format!("bad point count {:?} in grid", parts[4]))?;
        let g = GridSpec {
            sigma_min: num(0)?,
            sigma_max: num(1)?,
            rho_min: num(2)?,
            rho_max: num(3)?,
            points,
        };
        if g.sigma_min > g.sigma_max || g.rho_min > g.rho_max {
            return Err(format!("grid bounds out of order in {s:?}"));
        }
        if g.sigma_min < SIGMA_MIN || g.sigma_max > SIGMA_MAX {
            return Err(format!("sigma must lie in [{SIGMA_MIN}, {SIGMA_MAX}]"));
        }
        if g.rho_min < 0.0 || g.rho_max > MAX_ORDINATE {
            return Err(format!("rho must lie in [0, {MAX_ORDINATE}]"));
        }
        if g.points > MAX_POINTS {
            return Err(format!("at most {MAX_POINTS} grid points"));
        }
        Ok(g)
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{}:{}:{}",
            self.sigma_min, self.sigma_max, self.rho_min, self.rho_max, self.points
        )
    }
}
