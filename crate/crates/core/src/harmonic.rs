//! Sense-preserving harmonic maps `f = h + conj(g)` with dilatation bound `k`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series::DiskFunction;

/// Radii at which the coefficient form of `|g'| ≤ k|h'|` is checked on construction.
const CHECK_RADII: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];
const MARGIN_FLOOR: f64 = -1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicPair {
    h: DiskFunction,
    g: DiskFunction,
    k: f64,
}

impl HarmonicPair {
    /// A user-supplied pair. `g` must vanish at the origin and satisfy
    /// `Σ|b_n|² rⁿ ≤ k² Σ|a_n|² rⁿ` on the check radii.
    pub fn new(h: DiskFunction, g: DiskFunction, k: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&k) {
            return Err(Error::InvalidParam(format!(
                "dilatation bound k = {k} not in [0, 1]"
            )));
        }
        if g.a0().norm() > 1e-14 {
            return Err(Error::InvalidParam(format!(
                "g(0) = {} but the co-analytic part has no constant term",
                g.a0()
            )));
        }
        let pair = Self { h, g, k };
        for r in CHECK_RADII {
            let margin = pair.lemma51_margin(r)?;
            if margin < MARGIN_FLOOR {
                return Err(Error::DilatationViolated { r, margin });
            }
        }
        Ok(pair)
    }

    /// `g = kλ(h - h(0))`, so that `|b_n| = k|λ||a_n|`. Requires `|λ| ≤ 1`.
    pub fn scaled(h: DiskFunction, k: f64, lambda: Complex64) -> Result<Self> {
        if !(0.0..=1.0).contains(&k) {
            return Err(Error::InvalidParam(format!(
                "dilatation bound k = {k} not in [0, 1]"
            )));
        }
        if lambda.norm() > 1.0 + 1e-12 {
            return Err(Error::InvalidParam(format!(
                "|lambda| = {} exceeds 1",
                lambda.norm()
            )));
        }
        let factor = lambda * k;
        let g = h.clone().affine(factor, -(factor * h.a0()));
        Ok(Self { h, g, k })
    }

    /// The sharpness pair `h = f_a`, `b_n = kλ a_n` for `n ≥ 1`.
    pub fn extremal(a: f64, k: f64, lambda: Complex64) -> Result<Self> {
        Self::scaled(DiskFunction::moebius(a)?, k, lambda)
    }

    /// `f = h` with `g ≡ 0`.
    pub fn analytic(h: DiskFunction) -> Self {
        Self {
            h,
            g: DiskFunction::real_polynomial(&[0.0]),
            k: 0.0,
        }
    }

    pub fn h(&self) -> &DiskFunction {
        &self.h
    }

    pub fn g(&self) -> &DiskFunction {
        &self.g
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    /// `Σ_{n≥N} (|a_n| + |b_n|) rⁿ` for `N ≥ 1`.
    pub fn co_majorant(&self, r: f64, n: usize) -> Result<f64> {
        if n == 0 {
            return Err(Error::InvalidParam("co-majorant starts at N >= 1".into()));
        }
        Ok(self.h.majorant_tail(r, n)? + self.g.majorant_tail(r, n)?)
    }

    /// `k² Σ|a_n|² rⁿ - Σ|b_n|² rⁿ`, nonnegative for admissible pairs.
    pub fn lemma51_margin(&self, r: f64) -> Result<f64> {
        if !(0.0..1.0).contains(&r) {
            return Err(Error::Domain {
                what: "r",
                value: r,
            });
        }
        let s = r.sqrt();
        Ok(self.k * self.k * self.h.quadratic_sum(s, 1)? - self.g.quadratic_sum(s, 1)?)
    }
}
