//! Second-order truncated Taylor arithmetic in `s`: `(f, f', f'')`.

use std::ops::{Add, AddAssign, Mul};

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Jet {
    pub v: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
}

impl Jet {
    #[cfg(test)]
    pub const ZERO: Jet = Jet {
        v: Complex64::new(0.0, 0.0),
        d1: Complex64::new(0.0, 0.0),
        d2: Complex64::new(0.0, 0.0),
    };

    /// The independent variable `s` itself, shifted by `c`: `s + c`.
    pub fn variable(s: Complex64, c: f64) -> Jet {
        Jet {
            v: s + c,
            d1: Complex64::new(1.0, 0.0),
            d2: Complex64::new(0.0, 0.0),
        }
    }

    /// `base^(a - s) = exp((a - s) ln base)` for real `base > 0`.
    pub fn power_of(base_ln: f64, a: f64, s: Complex64) -> Jet {
        let v = ((a - s) * base_ln).exp();
        Jet {
            v,
            d1: -base_ln * v,
            d2: base_ln * base_ln * v,
        }
    }

    /// `1 / (s - 1)`
    pub fn pole_at_one(s: Complex64) -> Jet {
        let w = (s - 1.0).inv();
        Jet {
            v: w,
            d1: -w * w,
            d2: 2.0 * w * w * w,
        }
    }

    pub fn scale(self, k: f64) -> Jet {
        Jet {
            v: self.v * k,
            d1: self.d1 * k,
            d2: self.d2 * k,
        }
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        Jet {
            v: self.v + o.v,
            d1: self.d1 + o.d1,
            d2: self.d2 + o.d2,
        }
    }
}

impl AddAssign for Jet {
    fn add_assign(&mut self, o: Jet) {
        *self = *self + o;
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, o: Jet) -> Jet {
        Jet {
            v: self.v * o.v,
            d1: self.d1 * o.v + self.v * o.d1,
            d2: self.d2 * o.v + 2.0 * self.d1 * o.d1 + self.v * o.d2,
        }
    }
}

/// Neumaier-compensated accumulator over all three jet components.
#[derive(Debug, Default)]
pub(crate) struct CompensatedJetSum {
    sum: [f64; 6],
    carry: [f64; 6],
}

impl CompensatedJetSum {
    pub fn add(&mut self, j: Jet) {
        let parts = [j.v.re, j.v.im, j.d1.re, j.d1.im, j.d2.re, j.d2.im];
        for (k, x) in parts.into_iter().enumerate() {
            let s = self.sum[k];
            let t = s + x;
            if s.abs() >= x.abs() {
                self.carry[k] += (s - t) + x;
            } else {
                self.carry[k] += (x - t) + s;
            }
            self.sum[k] = t;
        }
    }

    pub fn total(&self) -> Jet {
        let p: [f64; 6] = std::array::from_fn(|k| self.sum[k] + self.carry[k]);
        Jet {
            v: Complex64::new(p[0], p[1]),
            d1: Complex64::new(p[2], p[3]),
            d2: Complex64::new(p[4], p[5]),
        }
    }
}
