//! Sign-change scanning, bracketed root refinement and classification of
//! critical-line roots.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::critline::{critical_zeta, full_zero_function, half_zero_function};
use crate::error::{Error, Result};

pub const MAX_REFINE_ITERATIONS: usize = 200;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub rho_min: f64,
    pub rho_max: f64,
    pub step: f64,
    pub refine_tol: f64,
    pub classify_tol: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            rho_min: 10.0,
            rho_max: 100.0,
            step: 0.05,
            refine_tol: 1e-12,
            classify_tol: 1e-6,
        }
    }
}

impl ScanConfig {
    pub fn range(rho_min: f64, rho_max: f64) -> Self {
        Self {
            rho_min,
            rho_max,
            ..Self::default()
        }
    }

    /// `rho_min == rho_max` is accepted and describes an empty scan.
    pub fn validate(&self) -> Result<()> {
        let all_finite = [
            self.rho_min,
            self.rho_max,
            self.step,
            self.refine_tol,
            self.classify_tol,
        ]
        .iter()
        .all(|x| x.is_finite());
        let problem = if !all_finite {
            Some("all fields must be finite".to_string())
        } else if self.rho_min <= 0.0 {
            Some(format!("rho_min must be positive, got {}", self.rho_min))
        } else if self.rho_min > self.rho_max {
            Some(format!(
                "rho_min {} exceeds rho_max {}",
                self.rho_min, self.rho_max
            ))
        } else if !(self.step > 0.0 && self.step <= 0.25) {
            Some(format!("step must lie in (0, 0.25], got {}", self.step))
        } else if self.refine_tol < 1e-13 {
            Some(format!(
                "refine_tol must be >= 1e-13, got {}",
                self.refine_tol
            ))
        } else if self.classify_tol <= 0.0 {
            Some(format!(
                "classify_tol must be positive, got {}",
                self.classify_tol
            ))
        } else {
            None
        };
        match problem {
            Some(msg) => Err(Error::InvalidConfig(msg)),
            None => Ok(()),
        }
    }

    /// Sample abscissae `rho_min, rho_min + step, ...`, closed at `rho_max`.
    pub fn grid(&self) -> Vec<f64> {
        if self.rho_max <= self.rho_min {
            return vec![self.rho_min];
        }
        let n = ((self.rho_max - self.rho_min) / self.step).ceil() as usize;
        (0..=n)
            .map(|i| (self.rho_min + i as f64 * self.step).min(self.rho_max))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ZeroKind {
    HalfZeroOfZetaR,
    HalfZeroOfZetaI,
    FullZero,
    Unclassified,
}

impl ZeroKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ZeroKind::HalfZeroOfZetaR => "HalfZeroOfZetaR",
            ZeroKind::HalfZeroOfZetaI => "HalfZeroOfZetaI",
            ZeroKind::FullZero => "FullZero",
            ZeroKind::Unclassified => "Unclassified",
        }
    }

    pub fn is_half_zero(&self) -> bool {
        matches!(self, ZeroKind::HalfZeroOfZetaR | ZeroKind::HalfZeroOfZetaI)
    }
}

impl std::fmt::Display for ZeroKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroRecord {
    pub rho: f64,
    pub kind: ZeroKind,
    /// `|target|` at the refined root.
    pub residual: f64,
    /// `|ζ(1/2 + iρ)|` at the refined root.
    pub zeta_mag: f64,
    pub bracket: (f64, f64),
    pub iterations: usize,
}

/// The two critical-line sieve functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Target {
    /// Roots are half-zeros.
    HalfZero,
    /// Roots include the full-zeros; `m` is the derivative order.
    FullZero { m: u8 },
}

impl Target {
    pub fn eval(&self, rho: f64) -> Result<f64> {
        match *self {
            Target::HalfZero => half_zero_function(rho),
            Target::FullZero { m } => full_zero_function(rho, m),
        }
    }
}

/// Every consecutive grid pair across which `target` changes sign strictly, in
/// ascending order. A sample that is exactly zero yields a degenerate bracket.
pub fn scan_brackets<F>(cfg: &ScanConfig, target: F) -> Result<Vec<(f64, f64)>>
where
    F: Fn(f64) -> Result<f64> + Sync,
{
    cfg.validate()?;
    let grid = cfg.grid();
    let values = grid
        .par_iter()
        .map(|&rho| {
            let v = target(rho)?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(Error::NonFiniteSample { rho })
            }
        })
        .collect::<Result<Vec<f64>>>()?;

    let mut brackets = Vec::new();
    for i in 0..grid.len() {
        if values[i] == 0.0 {
            brackets.push((grid[i], grid[i]));
            continue;
        }
        if i + 1 < grid.len() && values[i] * values[i + 1] < 0.0 {
            brackets.push((grid[i], grid[i + 1]));
        }
    }
    Ok(brackets)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Refined {
    pub rho: f64,
    pub residual: f64,
    pub iterations: usize,
}

/// Brent's bracketing method: inverse quadratic interpolation and secant steps,
/// falling back to bisection whenever they do not shrink the bracket fast enough.
/// Stops once the bracket is narrower than `tol`.
pub fn refine_root<F>(bracket: (f64, f64), target: F, tol: f64) -> Result<Refined>
where
    F: Fn(f64) -> Result<f64>,
{
    let (lo, hi) = bracket;
    let (mut a, mut b) = (lo, hi);
    let mut fa = target(a)?;
    let mut fb = target(b)?;
    if fa == 0.0 {
        return Ok(Refined {
            rho: a,
            residual: 0.0,
            iterations: 0,
        });
    }
    if fb == 0.0 {
        return Ok(Refined {
            rho: b,
            residual: 0.0,
            iterations: 0,
        });
    }
    if fa * fb > 0.0 || !(fa.is_finite() && fb.is_finite()) {
        return Err(Error::NotBracketed { lo, hi });
    }

    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for iteration in 1..=MAX_REFINE_ITERATIONS {
        if fb * fc > 0.0 {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(Refined {
                rho: b,
                residual: fb.abs(),
                iterations: iteration,
            });
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            if 2.0 * p < (3.0 * xm * q - (tol1 * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol1 { d } else { tol1.copysign(xm) };
        fb = target(b)?;
        if !fb.is_finite() {
            return Err(Error::NonFiniteSample { rho: b });
        }
    }
    Err(Error::NoConvergence {
        lo,
        hi,
        iterations: MAX_REFINE_ITERATIONS,
    })
}

/// Classification from the real and imaginary parts of `ζ` at a root.
pub fn classify_value(z: Complex64, classify_tol: f64) -> ZeroKind {
    match (z.re.abs() <= classify_tol, z.im.abs() <= classify_tol) {
        (true, true) => ZeroKind::FullZero,
        (true, false) => ZeroKind::HalfZeroOfZetaR,
        (false, true) => ZeroKind::HalfZeroOfZetaI,
        (false, false) => ZeroKind::Unclassified,
    }
}

pub fn classify(rho: f64, cfg: &ScanConfig) -> Result<ZeroKind> {
    Ok(classify_value(critical_zeta(rho)?, cfg.classify_tol))
}

/// A bracket whose refinement failed; the campaign keeps going.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BracketFailure {
    pub target: Target,
    pub bracket: (f64, f64),
    pub error: String,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Campaign {
    pub records: Vec<ZeroRecord>,
    pub failures: Vec<BracketFailure>,
}

impl Campaign {
    pub fn of_kind(&self, kind: ZeroKind) -> impl Iterator<Item = &ZeroRecord> {
        self.records.iter().filter(move |r| r.kind == kind)
    }
}

fn record_for(cfg: &ScanConfig, target: Target, bracket: (f64, f64)) -> Result<ZeroRecord> {
    let refined = refine_root(bracket, |rho| target.eval(rho), cfg.refine_tol)?;
    let z = critical_zeta(refined.rho)?;
    Ok(ZeroRecord {
        rho: refined.rho,
        kind: classify_value(z, cfg.classify_tol),
        residual: refined.residual,
        zeta_mag: z.norm(),
        bracket,
        iterations: refined.iterations,
    })
}

/// Scan, refine and classify the roots of one target. Brackets are refined in
/// parallel; the output is in ascending ρ regardless of scheduling.
pub fn find_roots(cfg: &ScanConfig, target: Target) -> Result<Campaign> {
    let brackets = scan_brackets(cfg, |rho| target.eval(rho))?;
    let outcomes: Vec<_> = brackets
        .par_iter()
        .map(|&bracket| (bracket, record_for(cfg, target, bracket)))
        .collect();
    let mut campaign = Campaign::default();
    for (bracket, outcome) in outcomes {
        match outcome {
            Ok(record) => campaign.records.push(record),
            Err(e) => campaign.failures.push(BracketFailure {
                target,
                bracket,
                error: e.to_string(),
            }),
        }
    }
    campaign.records.sort_by(|a, b| a.rho.total_cmp(&b.rho));
    Ok(campaign)
}

/// Roots of both sieve functions over the configured range, merged and
/// deduplicated within `10 · refine_tol`. Half-zeros with `D_R = 0` are roots of
/// both functions; the first occurrence (half-zero function) is kept.
pub fn run_campaign(cfg: &ScanConfig) -> Result<Campaign> {
    cfg.validate()?;
    let mut merged: Vec<(Target, ZeroRecord)> = Vec::new();
    let mut failures = Vec::new();
    for target in [Target::HalfZero, Target::FullZero { m: 1 }] {
        let c = find_roots(cfg, target)?;
        merged.extend(c.records.into_iter().map(|r| (target, r)));
        failures.extend(c.failures);
    }
    merged.sort_by(|(ta, a), (tb, b)| a.rho.total_cmp(&b.rho).then(ta.cmp(tb)));

    let window = 10.0 * cfg.refine_tol;
    let mut records: Vec<ZeroRecord> = Vec::with_capacity(merged.len());
    for (_, r) in merged {
        match records.last() {
            Some(prev) if (r.rho - prev.rho).abs() <= window => {}
            _ => records.push(r),
        }
    }
    failures.sort_by(|a: &BracketFailure, b| {
        a.bracket
            .0
            .total_cmp(&b.bracket.0)
            .then(a.target.cmp(&b.target))
    });
    Ok(Campaign { records, failures })
}
