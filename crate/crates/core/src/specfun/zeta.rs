//! Riemann zeta by Euler–Maclaurin summation, with the first two derivatives in `s`
//! carried along term by term.
//!
//! ```text
//! ζ(s) = Σ_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
//!        + Σ_{k=1..K} B_2k/(2k)! · s(s+1)···(s+2k-2) · N^(1-s-2k) + R_K
//! ```
//!
//! with `|R_K| ≤ |T_{K+1}| · |s+2K+1| / (σ+2K+1)`, `T_{K+1}` the first omitted
//! term. The bound is reported; `N` starts at `max(20, ⌈2 + |ρ|/2⌉)` and doubles
//! until the bound meets the requested tolerance.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::jet::{CompensatedJetSum, Jet};
use crate::error::{Error, Result};

/// Bernoulli correction order: terms through `B_{2K}` with `2K = 20`.
pub const BERNOULLI_TERMS: usize = 10;

// B_2k / (2k)!, k = 1..=11; the last entry only feeds the error bound.
const BERNOULLI_OVER_FACTORIAL: [f64; BERNOULLI_TERMS + 1] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -5.284_190_138_687_493e-10,
    1.338_253_653_068_467_9e-11,
    -3.389_680_296_322_582_7e-13,
    8.586_062_056_277_845e-15,
    -2.174_868_698_558_062e-16,
    5.509_002_828_360_229_5e-18,
];

const MAX_TERMS: usize = 1 << 14;
pub const MAX_ORDINATE: f64 = 500.0;
pub const DEFAULT_ABS_TOL: f64 = 1e-12;
const ZETA_POLE_EPS: f64 = 1e-12;

/// Requested absolute tolerance and the truncation bound actually achieved.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalAccuracy {
    pub abs_tol: f64,
    pub achieved_bound: f64,
}

impl EvalAccuracy {
    pub fn target(abs_tol: f64) -> Self {
        Self {
            abs_tol,
            achieved_bound: f64::INFINITY,
        }
    }
}

impl Default for EvalAccuracy {
    fn default() -> Self {
        Self::target(DEFAULT_ABS_TOL)
    }
}

/// `ζ(s)`, `ζ'(s)`, `ζ''(s)` together with the accuracy of the value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZetaJet {
    pub value: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
    pub accuracy: EvalAccuracy,
}

fn initial_terms(rho: f64) -> usize {
    20usize.max((2.0 + rho.abs() / 2.0).ceil() as usize)
}

fn truncation_bound(s: Complex64, n: usize) -> f64 {
    let k = BERNOULLI_TERMS + 1;
    let mut poch = 1.0;
    for j in 0..(2 * k - 1) {
        poch *= (s + j as f64).norm();
    }
    let power = (n as f64).powf(1.0 - s.re - 2.0 * k as f64);
    let last = BERNOULLI_OVER_FACTORIAL[k - 1].abs() * poch * power;
    let odd = (2 * k - 1) as f64;
    last * (s + odd).norm() / (s.re + odd)
}

/// Euler–Maclaurin evaluation of `ζ` and its first two `s`-derivatives.
pub fn zeta_jet(s: Complex64, abs_tol: f64) -> Result<ZetaJet> {
    if !(abs_tol > 0.0 && abs_tol.is_finite()) {
        return Err(Error::InvalidConfig(format!(
            "absolute tolerance must be positive and finite, got {abs_tol}"
        )));
    }
    if !(s.re.is_finite() && s.im.is_finite()) || s.im.abs() > MAX_ORDINATE {
        return Err(Error::Range {
            what: "rho",
            value: s.im,
            window: "[-500, 500]",
        });
    }
    let distance = (s - 1.0).norm();
    if distance < ZETA_POLE_EPS {
        return Err(Error::Pole {
            sigma: s.re,
            rho: s.im,
            distance,
        });
    }
    if s.im < 0.0 {
        let z = zeta_jet(s.conj(), abs_tol)?;
        return Ok(ZetaJet {
            value: z.value.conj(),
            d1: z.d1.conj(),
            d2: z.d2.conj(),
            accuracy: z.accuracy,
        });
    }

    let mut n = initial_terms(s.im);
    let mut bound = truncation_bound(s, n);
    while bound > abs_tol {
        if n * 2 > MAX_TERMS {
            return Err(Error::Accuracy {
                requested: abs_tol,
                achieved: bound,
            });
        }
        n *= 2;
        bound = truncation_bound(s, n);
    }

    let mut acc = CompensatedJetSum::default();
    for k in 1..n {
        acc.add(Jet::power_of((k as f64).ln(), 0.0, s));
    }
    let ln_n = (n as f64).ln();
    acc.add(Jet::power_of(ln_n, 1.0, s) * Jet::pole_at_one(s));
    acc.add(Jet::power_of(ln_n, 0.0, s).scale(0.5));

    let mut poch = Jet::variable(s, 0.0);
    for (k, coeff) in BERNOULLI_OVER_FACTORIAL
        .iter()
        .take(BERNOULLI_TERMS)
        .enumerate()
    {
        let k = k + 1;
        let power = Jet::power_of(ln_n, 1.0 - 2.0 * k as f64, s);
        acc.add((poch * power).scale(*coeff));
        poch = poch * Jet::variable(s, (2 * k - 1) as f64) * Jet::variable(s, (2 * k) as f64);
    }

    let total = acc.total();
    let mut value = total.v;
    if s.im == 0.0 {
        value.im = 0.0;
    }
    Ok(ZetaJet {
        value,
        d1: total.d1,
        d2: total.d2,
        accuracy: EvalAccuracy {
            abs_tol,
            achieved_bound: bound,
        },
    })
}

/// `ζ(s)` at the default tolerance.
pub fn zeta(s: Complex64) -> Result<Complex64> {
    zeta_jet(s, DEFAULT_ABS_TOL).map(|z| z.value)
}
