//! Analytic functions on the unit disk given by their Taylor coefficients.
//!
//! A [`DiskFunction`] gives exact access to every coefficient together with
//! a bound on coefficient growth. Every sum is either evaluated in closed
//! form (Möbius, half-plane, Koebe and the dilation/affine combinators built
//! on them) or truncated at the first order whose tail bound falls below
//! [`TruncationPolicy::abs_tol`].

use std::borrow::Cow;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::search::golden_max;

/// Default number of equispaced angles for circle maxima.
pub const DEFAULT_THETA_SAMPLES: usize = 720;
/// Number of discrete local maxima refined by golden-section search.
const REFINED_PEAKS: usize = 3;
const REFINE_ITERATIONS: usize = 60;
/// Radius used for `sup_{D} |f|` when no closed form exists.
pub const BOUNDARY_RADIUS: f64 = 1.0 - 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    pub abs_tol: f64,
    pub max_order: usize,
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            max_order: 100_000,
        }
    }
}

/// How `sup_{|z|=r} |f(z)|` is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupMode {
    /// Closed form where the family admits one, otherwise the default θ-grid.
    Exact,
    /// `m` equispaced angles followed by golden-section refinement.
    ThetaGrid(usize),
}

/// Which coefficient sum to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumKind {
    /// `Σ |c_n| r^n`
    Majorant,
    /// `Σ |c_n|² r^{2n}`
    Quadratic,
    /// `Σ n |c_n|² r^{2n}`
    Area,
}

/// A truncated sum with the order used and the bound on what was dropped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Summation {
    pub value: f64,
    /// Terms `start..order` were summed.
    pub order: usize,
    pub tail_bound: f64,
}

/// `sup_{D} |f|`, flagged when it is only a numerical lower estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupNorm {
    pub value: f64,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    /// `(a - z)/(1 - a z)`
    Moebius {
        a: f64,
    },
    /// `1/(1 - z)`
    HalfPlane,
    /// `z/(1 - z)²`
    Koebe,
    Polynomial {
        coeffs: Vec<Complex64>,
    },
    /// `u · Π (z - z_j)/(1 - conj(z_j) z)`; `prefix` caches leading coefficients.
    Blaschke {
        zeros: Vec<Complex64>,
        unimodular: Complex64,
        prefix: Vec<Complex64>,
    },
    /// A known prefix; the unknown remainder obeys `|c_n| ≤ tail_scale · tail_ratio^n`.
    Explicit {
        coeffs: Vec<Complex64>,
        tail_ratio: f64,
        tail_scale: f64,
    },
    /// `base(scale · z)`
    Dilated {
        base: Box<DiskFunction>,
        scale: f64,
    },
    /// `shift + factor · base(z)`
    Affine {
        base: Box<DiskFunction>,
        factor: Complex64,
        shift: Complex64,
    },
}

/// Coefficient growth: `|c_n| ≤ scale · ratio^n · n^power` for `n ≥ from`.
#[derive(Debug, Clone, Copy)]
enum Growth {
    Finite {
        len: usize,
    },
    Geometric {
        scale: f64,
        ratio: f64,
        power: i32,
        from: usize,
        /// false when coefficients from `from` on are not available
        known: bool,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct DiskFunction {
    family: Family,
    a0: Complex64,
    bounded: bool,
}

fn check_radius(r: f64) -> Result<()> {
    if (0.0..1.0).contains(&r) {
        Ok(())
    } else {
        Err(Error::Domain {
            what: "r",
            value: r,
        })
    }
}

impl DiskFunction {
    fn from_family(family: Family, bounded: bool) -> Self {
        let mut f = Self {
            family,
            a0: Complex64::new(0.0, 0.0),
            bounded,
        };
        f.a0 = f.coeff(0);
        f
    }

    /// The extremal map `f_a(z) = (a - z)/(1 - a z)`, `a ∈ [0, 1)`.
    pub fn moebius(a: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&a) {
            return Err(Error::InvalidParam(format!(
                "Möbius parameter a = {a} not in [0, 1)"
            )));
        }
        Ok(Self::from_family(Family::Moebius { a }, true))
    }

    pub fn half_plane() -> Self {
        Self::from_family(Family::HalfPlane, false)
    }

    pub fn koebe() -> Self {
        Self::from_family(Family::Koebe, false)
    }

    pub fn polynomial(coeffs: Vec<Complex64>) -> Self {
        let coeffs = if coeffs.is_empty() {
            vec![Complex64::new(0.0, 0.0)]
        } else {
            coeffs
        };
        Self::from_family(Family::Polynomial { coeffs }, false)
    }

    pub fn real_polynomial(coeffs: &[f64]) -> Self {
        Self::polynomial(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn blaschke(zeros: Vec<Complex64>, unimodular: Complex64) -> Result<Self> {
        if let Some(z) = zeros.iter().find(|z| !(z.norm() < 1.0)) {
            return Err(Error::InvalidParam(format!(
                "Blaschke zero {z} is not inside the disk"
            )));
        }
        if (unimodular.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParam(format!(
                "Blaschke factor {unimodular} is not unimodular"
            )));
        }
        Ok(Self::from_family(
            Family::Blaschke {
                zeros,
                unimodular,
                prefix: Vec::new(),
            },
            true,
        ))
    }

    pub fn explicit(coeffs: Vec<Complex64>, tail_ratio: f64, tail_scale: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&tail_ratio) || !(tail_scale >= 0.0) {
            return Err(Error::InvalidParam(format!(
                "tail bound {tail_scale}·{tail_ratio}^n is not admissible"
            )));
        }
        let coeffs = if coeffs.is_empty() {
            vec![Complex64::new(0.0, 0.0)]
        } else {
            coeffs
        };
        Ok(Self::from_family(
            Family::Explicit {
                coeffs,
                tail_ratio,
                tail_scale,
            },
            false,
        ))
    }

    /// `z ↦ self(scale · z)` for `scale ∈ [0, 1]`.
    pub fn dilated(self, scale: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&scale) {
            return Err(Error::InvalidParam(format!(
                "dilation {scale} not in [0, 1]"
            )));
        }
        let bounded = self.bounded;
        Ok(Self::from_family(
            Family::Dilated {
                base: Box::new(self),
                scale,
            },
            bounded,
        ))
    }

    /// `z ↦ shift + factor · self(z)`.
    pub fn affine(self, factor: Complex64, shift: Complex64) -> Self {
        Self::from_family(
            Family::Affine {
                base: Box::new(self),
                factor,
                shift,
            },
            false,
        )
    }

    /// Declare that the function maps the disk into the closed unit disk.
    pub fn assume_bounded(mut self) -> Self {
        self.bounded = true;
        self
    }

    /// Precompute the first `order` coefficients of a Blaschke product.
    /// No effect on other families.
    pub fn with_coefficient_cache(mut self, order: usize) -> Self {
        if let Family::Blaschke {
            zeros,
            unimodular,
            prefix,
        } = &mut self.family
        {
            if prefix.len() < order {
                *prefix = blaschke_coefficients(zeros, *unimodular, order);
            }
        }
        self
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn a0(&self) -> Complex64 {
        self.a0
    }

    /// True when the function is known to map the disk into the closed unit disk.
    pub fn is_bounded(&self) -> bool {
        self.bounded
    }

    pub fn label(&self) -> String {
        match &self.family {
            Family::Moebius { a } => format!("moebius(a={a})"),
            Family::HalfPlane => "half-plane".into(),
            Family::Koebe => "koebe".into(),
            Family::Polynomial { coeffs } => format!("polynomial(deg={})", coeffs.len() - 1),
            Family::Blaschke { zeros, .. } => format!("blaschke(deg={})", zeros.len()),
            Family::Explicit { coeffs, .. } => format!("explicit(len={})", coeffs.len()),
            Family::Dilated { base, scale } => format!("{}(s={scale}·z)", base.label()),
            Family::Affine { base, .. } => format!("affine({})", base.label()),
        }
    }

    /// Coefficient of `z^n`.
    pub fn coeff(&self, n: usize) -> Complex64 {
        let zero = Complex64::new(0.0, 0.0);
        match &self.family {
            Family::Moebius { a } => {
                if n == 0 {
                    Complex64::new(*a, 0.0)
                } else {
                    Complex64::new(-(1.0 - a * a) * a.powi(n as i32 - 1), 0.0)
                }
            }
            Family::HalfPlane => Complex64::new(1.0, 0.0),
            Family::Koebe => Complex64::new(n as f64, 0.0),
            Family::Polynomial { coeffs } | Family::Explicit { coeffs, .. } => {
                coeffs.get(n).copied().unwrap_or(zero)
            }
            Family::Blaschke {
                zeros,
                unimodular,
                prefix,
            } => match prefix.get(n) {
                Some(c) => *c,
                None => blaschke_coefficients(zeros, *unimodular, n + 1)[n],
            },
            Family::Dilated { base, scale } => base.coeff(n) * scale.powi(n as i32),
            Family::Affine {
                base,
                factor,
                shift,
            } => {
                if n == 0 {
                    shift + factor * base.coeff(0)
                } else {
                    factor * base.coeff(n)
                }
            }
        }
    }

    /// Coefficients `0..order`.
    pub fn coefficients(&self, order: usize) -> Cow<'_, [Complex64]> {
        match &self.family {
            Family::Blaschke {
                zeros,
                unimodular,
                prefix,
            } => {
                if prefix.len() >= order {
                    Cow::Borrowed(&prefix[..order])
                } else {
                    Cow::Owned(blaschke_coefficients(zeros, *unimodular, order))
                }
            }
            Family::Dilated { base, scale } => {
                let mut c = base.coefficients(order).into_owned();
                let mut p = 1.0;
                for v in c.iter_mut() {
                    *v *= p;
                    p *= scale;
                }
                Cow::Owned(c)
            }
            Family::Affine { base, factor, .. } => {
                let mut c: Vec<Complex64> = base
                    .coefficients(order)
                    .iter()
                    .map(|v| factor * v)
                    .collect();
                if let Some(first) = c.first_mut() {
                    *first = self.a0;
                }
                Cow::Owned(c)
            }
            _ => Cow::Owned((0..order).map(|n| self.coeff(n)).collect()),
        }
    }

    fn growth(&self) -> Growth {
        match &self.family {
            Family::Moebius { a } => {
                if *a == 0.0 {
                    Growth::Finite { len: 2 }
                } else {
                    Growth::Geometric {
                        scale: (1.0 - a * a) / a,
                        ratio: *a,
                        power: 0,
                        from: 1,
                        known: true,
                    }
                }
            }
            Family::HalfPlane => Growth::Geometric {
                scale: 1.0,
                ratio: 1.0,
                power: 0,
                from: 0,
                known: true,
            },
            Family::Koebe => Growth::Geometric {
                scale: 1.0,
                ratio: 1.0,
                power: 1,
                from: 0,
                known: true,
            },
            Family::Polynomial { coeffs } => Growth::Finite { len: coeffs.len() },
            Family::Explicit {
                coeffs,
                tail_ratio,
                tail_scale,
            } => {
                if *tail_scale == 0.0 {
                    Growth::Finite { len: coeffs.len() }
                } else {
                    Growth::Geometric {
                        scale: *tail_scale,
                        ratio: *tail_ratio,
                        power: 0,
                        from: coeffs.len(),
                        known: false,
                    }
                }
            }
            Family::Blaschke {
                zeros,
                unimodular: _,
                prefix: _,
            } => {
                let m = zeros.iter().map(|z| z.norm()).fold(0.0, f64::max);
                if m == 0.0 {
                    return Growth::Finite {
                        len: zeros.len() + 1,
                    };
                }
                // Cauchy estimate on the circle of radius rho, 1 < rho < 1/m
                let rho = 0.5 * (1.0 + 1.0 / m);
                let scale = zeros
                    .iter()
                    .map(|z| (rho + z.norm()) / (1.0 - z.norm() * rho))
                    .product();
                Growth::Geometric {
                    scale,
                    ratio: 1.0 / rho,
                    power: 0,
                    from: 0,
                    known: true,
                }
            }
            Family::Dilated { base, scale } => {
                if *scale == 0.0 {
                    return Growth::Finite { len: 1 };
                }
                match base.growth() {
                    Growth::Geometric {
                        scale: c,
                        ratio,
                        power,
                        from,
                        known,
                    } => Growth::Geometric {
                        scale: c,
                        ratio: ratio * scale,
                        power,
                        from,
                        known,
                    },
                    finite => finite,
                }
            }
            Family::Affine { base, factor, .. } => {
                if factor.norm() == 0.0 {
                    return Growth::Finite { len: 1 };
                }
                match base.growth() {
                    Growth::Geometric {
                        scale,
                        ratio,
                        power,
                        from,
                        known,
                    } => Growth::Geometric {
                        scale: scale * factor.norm(),
                        ratio,
                        power,
                        from: from.max(1),
                        known,
                    },
                    finite => finite,
                }
            }
        }
    }

    /// Order at which the generic summation engine would truncate.
    pub fn required_order(
        &self,
        kind: SumKind,
        r: f64,
        policy: &TruncationPolicy,
    ) -> Result<usize> {
        check_radius(r)?;
        self.truncation(kind, r, 0, policy).map(|(order, _)| order)
    }

    fn truncation(
        &self,
        kind: SumKind,
        r: f64,
        start: usize,
        policy: &TruncationPolicy,
    ) -> Result<(usize, f64)> {
        match self.growth() {
            Growth::Finite { len } => Ok((len.max(start), 0.0)),
            Growth::Geometric {
                scale,
                ratio,
                power,
                from,
                known,
            } => {
                let (c, x, j) = match kind {
                    SumKind::Majorant => (scale, ratio * r, power),
                    SumKind::Quadratic => (scale * scale, (ratio * r).powi(2), 2 * power),
                    SumKind::Area => (scale * scale, (ratio * r).powi(2), 2 * power + 1),
                };
                if !known {
                    let m = from.max(start).max(1);
                    let bound = power_geometric_tail(c, x, j, m);
                    if bound > policy.abs_tol {
                        return Err(Error::TailTooLarge {
                            bound,
                            tol: policy.abs_tol,
                            r,
                        });
                    }
                    return Ok((m, bound));
                }
                let mut m = start.max(from).max(1);
                loop {
                    let bound = power_geometric_tail(c, x, j, m);
                    if bound <= policy.abs_tol {
                        return Ok((m, bound));
                    }
                    m += 1;
                    if m > policy.max_order {
                        return Err(Error::TruncationLimit {
                            order: m,
                            max_order: policy.max_order,
                        });
                    }
                }
            }
        }
    }

    /// Direct truncated summation of `kind` from index `start`, ignoring
    /// any closed form.
    pub fn sum_truncated(
        &self,
        kind: SumKind,
        r: f64,
        start: usize,
        policy: &TruncationPolicy,
    ) -> Result<Summation> {
        check_radius(r)?;
        let (order, tail_bound) = self.truncation(kind, r, start, policy)?;
        let coeffs = self.coefficients(order);
        let mut value = 0.0;
        let mut rn = r.powi(start as i32);
        for (n, c) in coeffs.iter().enumerate().skip(start) {
            let m = c.norm();
            value += match kind {
                SumKind::Majorant => m * rn,
                SumKind::Quadratic => m * m * rn * rn,
                SumKind::Area => n as f64 * m * m * rn * rn,
            };
            rn *= r;
        }
        Ok(Summation {
            value,
            order,
            tail_bound,
        })
    }

    /// Value at `z`, `|z| < 1`.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let modulus = z.norm();
        if !(modulus < 1.0) {
            return Err(Error::Domain {
                what: "|z|",
                value: modulus,
            });
        }
        self.eval_inside(z)
    }

    fn eval_inside(&self, z: Complex64) -> Result<Complex64> {
        let one = Complex64::new(1.0, 0.0);
        Ok(match &self.family {
            Family::Moebius { a } => (Complex64::new(*a, 0.0) - z) / (one - z * a),
            Family::HalfPlane => one / (one - z),
            Family::Koebe => z / ((one - z) * (one - z)),
            Family::Polynomial { coeffs } => horner_complex(coeffs, z),
            Family::Blaschke {
                zeros, unimodular, ..
            } => zeros.iter().fold(*unimodular, |acc, zj| {
                acc * (z - zj) / (one - zj.conj() * z)
            }),
            Family::Explicit {
                coeffs,
                tail_ratio,
                tail_scale,
            } => {
                let x = tail_ratio * z.norm();
                let bound = tail_scale * x.powi(coeffs.len() as i32) / (1.0 - x);
                let tol = TruncationPolicy::default().abs_tol;
                if bound > tol {
                    return Err(Error::TailTooLarge {
                        bound,
                        tol,
                        r: z.norm(),
                    });
                }
                horner_complex(coeffs, z)
            }
            Family::Dilated { base, scale } => base.eval_inside(z * scale)?,
            Family::Affine {
                base,
                factor,
                shift,
            } => shift + factor * base.eval_inside(z)?,
        })
    }

    fn sup_closed(&self, r: f64) -> Option<f64> {
        match &self.family {
            Family::Moebius { a } => Some((a + r) / (1.0 + a * r)),
            Family::HalfPlane => Some(1.0 / (1.0 - r)),
            Family::Koebe => Some(r / ((1.0 - r) * (1.0 - r))),
            Family::Polynomial { coeffs } if coeffs.len() == 1 => Some(coeffs[0].norm()),
            Family::Dilated { base, scale } => base.sup_closed(scale * r),
            Family::Affine {
                base,
                factor,
                shift,
            } if shift.norm() == 0.0 => base.sup_closed(r).map(|v| factor.norm() * v),
            _ => None,
        }
    }

    fn deviation_closed(&self, r: f64) -> Option<f64> {
        match &self.family {
            Family::Moebius { a } => Some((1.0 - a * a) * r / (1.0 - a * r)),
            Family::HalfPlane => Some(r / (1.0 - r)),
            Family::Koebe => Some(r / ((1.0 - r) * (1.0 - r))),
            Family::Polynomial { coeffs } if coeffs.len() == 1 => Some(0.0),
            Family::Dilated { base, scale } => base.deviation_closed(scale * r),
            Family::Affine { base, factor, .. } => {
                base.deviation_closed(r).map(|v| factor.norm() * v)
            }
            _ => None,
        }
    }

    /// `sup_{|z|=r} |f(z)|`.
    ///
    /// The θ-grid result is a lower estimate of the true supremum, accurate
    /// to the refinement resolution.
    pub fn sup_modulus(&self, r: f64, mode: SupMode) -> Result<f64> {
        check_radius(r)?;
        if r == 0.0 {
            return Ok(self.a0.norm());
        }
        let samples = match mode {
            SupMode::Exact => {
                if let Some(v) = self.sup_closed(r) {
                    return Ok(v);
                }
                DEFAULT_THETA_SAMPLES
            }
            SupMode::ThetaGrid(m) => m,
        };
        circle_max(|z| self.eval_inside(z).map(|w| w.norm()), r, samples)
    }

    /// `sup_{|z|=r} |f(z) - f(0)|`.
    pub fn sup_deviation(&self, r: f64, mode: SupMode) -> Result<f64> {
        check_radius(r)?;
        if r == 0.0 {
            return Ok(0.0);
        }
        let samples = match mode {
            SupMode::Exact => {
                if let Some(v) = self.deviation_closed(r) {
                    return Ok(v);
                }
                DEFAULT_THETA_SAMPLES
            }
            SupMode::ThetaGrid(m) => m,
        };
        let a0 = self.a0;
        circle_max(|z| self.eval_inside(z).map(|w| (w - a0).norm()), r, samples)
    }

    /// `sup_{D} |f|`.
    pub fn sup_norm(&self) -> Result<SupNorm> {
        match &self.family {
            Family::Moebius { .. } | Family::Blaschke { .. } => Ok(SupNorm {
                value: 1.0,
                exact: true,
            }),
            Family::HalfPlane | Family::Koebe => Ok(SupNorm {
                value: f64::INFINITY,
                exact: true,
            }),
            Family::Dilated { base, scale } if *scale < 1.0 => Ok(SupNorm {
                value: base.sup_modulus(*scale, SupMode::Exact)?,
                exact: base.sup_closed(*scale).is_some(),
            }),
            Family::Dilated { base, .. } => base.sup_norm(),
            _ => Ok(SupNorm {
                value: self.sup_modulus(BOUNDARY_RADIUS, SupMode::Exact)?,
                exact: false,
            }),
        }
    }

    /// `Σ_{n≥N} |c_n| r^n`.
    pub fn majorant_tail(&self, r: f64, n: usize) -> Result<f64> {
        self.majorant_tail_with(r, n, &TruncationPolicy::default())
    }

    pub fn majorant_tail_with(&self, r: f64, n: usize, policy: &TruncationPolicy) -> Result<f64> {
        check_radius(r)?;
        match &self.family {
            Family::Moebius { a } => Ok(if n == 0 {
                a + (1.0 - a * a) * r / (1.0 - a * r)
            } else {
                (1.0 - a * a) * a.powi(n as i32 - 1) * r.powi(n as i32) / (1.0 - a * r)
            }),
            Family::HalfPlane => Ok(r.powi(n as i32) / (1.0 - r)),
            Family::Koebe => {
                let nf = n as f64;
                Ok(r.powi(n as i32) * (nf * (1.0 - r) + r) / ((1.0 - r) * (1.0 - r)))
            }
            Family::Dilated { base, scale } => base.majorant_tail_with(scale * r, n, policy),
            Family::Affine { base, factor, .. } => {
                if n == 0 {
                    Ok(self.a0.norm() + factor.norm() * base.majorant_tail_with(r, 1, policy)?)
                } else {
                    Ok(factor.norm() * base.majorant_tail_with(r, n, policy)?)
                }
            }
            _ => Ok(self.sum_truncated(SumKind::Majorant, r, n, policy)?.value),
        }
    }

    /// `Σ_{n≥N} |c_n|² r^{2n}`.
    pub fn quadratic_sum(&self, r: f64, n: usize) -> Result<f64> {
        self.quadratic_sum_with(r, n, &TruncationPolicy::default())
    }

    pub fn quadratic_sum_with(&self, r: f64, n: usize, policy: &TruncationPolicy) -> Result<f64> {
        check_radius(r)?;
        match &self.family {
            Family::Moebius { a } => {
                let b = 1.0 - a * a;
                let denom = 1.0 - a * a * r * r;
                Ok(if n == 0 {
                    a * a + b * b * r * r / denom
                } else {
                    b * b * a.powi(2 * n as i32 - 2) * r.powi(2 * n as i32) / denom
                })
            }
            Family::HalfPlane => Ok(r.powi(2 * n as i32) / (1.0 - r * r)),
            Family::Dilated { base, scale } => base.quadratic_sum_with(scale * r, n, policy),
            Family::Affine { base, factor, .. } => {
                let f2 = factor.norm_sqr();
                if n == 0 {
                    Ok(self.a0.norm_sqr() + f2 * base.quadratic_sum_with(r, 1, policy)?)
                } else {
                    Ok(f2 * base.quadratic_sum_with(r, n, policy)?)
                }
            }
            _ => Ok(self.sum_truncated(SumKind::Quadratic, r, n, policy)?.value),
        }
    }

    /// `S_r/π = Σ_{n≥1} n |c_n|² r^{2n}`.
    pub fn area_ratio(&self, r: f64) -> Result<f64> {
        self.area_ratio_with(r, &TruncationPolicy::default())
    }

    pub fn area_ratio_with(&self, r: f64, policy: &TruncationPolicy) -> Result<f64> {
        check_radius(r)?;
        match &self.family {
            Family::Moebius { a } => {
                let b = 1.0 - a * a;
                let denom = 1.0 - a * a * r * r;
                Ok(b * b * r * r / (denom * denom))
            }
            Family::HalfPlane => {
                let d = 1.0 - r * r;
                Ok(r * r / (d * d))
            }
            Family::Koebe => {
                let x = r * r;
                Ok(x * (1.0 + 4.0 * x + x * x) / (1.0 - x).powi(4))
            }
            Family::Dilated { base, scale } => base.area_ratio_with(scale * r, policy),
            Family::Affine { base, factor, .. } => {
                Ok(factor.norm_sqr() * base.area_ratio_with(r, policy)?)
            }
            _ => Ok(self.sum_truncated(SumKind::Area, r, 1, policy)?.value),
        }
    }

    /// `S_r/(π - S_r)`.
    pub fn area_odds(&self, r: f64) -> Result<f64> {
        let x = self.area_ratio(r)?;
        if x >= 1.0 {
            return Err(Error::SingularInput { value: x });
        }
        Ok(x / (1.0 - x))
    }
}

/// Bound on `Σ_{n≥m} c n^j x^n` for `m ≥ 1`.
fn power_geometric_tail(c: f64, x: f64, j: i32, m: usize) -> f64 {
    if c == 0.0 || x == 0.0 {
        return 0.0;
    }
    let mf = m as f64;
    let q = ((mf + 1.0) / mf).powi(j) * x;
    if q >= 1.0 {
        return f64::INFINITY;
    }
    c * mf.powi(j) * x.powf(mf) / (1.0 - q)
}

fn horner_complex(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}

/// Leading `order` coefficients of `u · Π (z - z_j)/(1 - conj(z_j) z)`.
pub fn blaschke_coefficients(
    zeros: &[Complex64],
    unimodular: Complex64,
    order: usize,
) -> Vec<Complex64> {
    let zero = Complex64::new(0.0, 0.0);
    let mut c = vec![zero; order];
    if order == 0 {
        return c;
    }
    c[0] = unimodular;
    let mut d = vec![zero; order];
    for zj in zeros {
        let w = zj.conj();
        // d = c / (1 - w z)
        let mut prev = zero;
        for n in 0..order {
            prev = c[n] + w * prev;
            d[n] = prev;
        }
        // c = (z - zj) d
        for n in 0..order {
            let shifted = if n == 0 { zero } else { d[n - 1] };
            c[n] = shifted - zj * d[n];
        }
    }
    c
}

/// Maximum of `g(r e^{iθ})` over θ: equispaced samples, then golden-section
/// refinement around the largest discrete local maxima.
fn circle_max<G>(g: G, r: f64, samples: usize) -> Result<f64>
where
    G: Fn(Complex64) -> Result<f64>,
{
    let m = samples.max(3);
    let step = 2.0 * PI / m as f64;
    let values = (0..m)
        .map(|j| g(Complex64::from_polar(r, j as f64 * step)))
        .collect::<Result<Vec<_>>>()?;
    let mut peaks: Vec<usize> = (0..m)
        .filter(|&j| {
            let prev = values[(j + m - 1) % m];
            let next = values[(j + 1) % m];
            values[j] >= prev && values[j] >= next
        })
        .collect();
    peaks.sort_by(|&i, &j| values[j].total_cmp(&values[i]).then(i.cmp(&j)));
    peaks.truncate(REFINED_PEAKS);

    let mut best = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    for j in peaks {
        let centre = j as f64 * step;
        let (_, v) = golden_max(
            |theta| g(Complex64::from_polar(r, theta)).unwrap_or(f64::NEG_INFINITY),
            centre - step,
            centre + step,
            REFINE_ITERATIONS,
        );
        best = best.max(v);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    /// Long division of (a - z) by (1 - a z), kept separate from the closed form.
    fn moebius_by_division(a: f64, order: usize) -> Vec<f64> {
        let num = [a, -1.0];
        let mut q = vec![0.0; order];
        let mut rem: Vec<f64> = (0..order)
            .map(|n| num.get(n).copied().unwrap_or(0.0))
            .collect();
        for n in 0..order {
            q[n] = rem[n];
            if n + 1 < order {
                rem[n + 1] += a * q[n];
            }
        }
        q
    }

    #[test]
    fn moebius_coefficients_match_long_division() {
        let f = DiskFunction::moebius(0.5).unwrap();
        assert_eq!(f.coeff(0), c(0.5));
        assert!(close(f.coeff(2).re, -0.375, 1e-15));
        let q = moebius_by_division(0.5, 12);
        for (n, qn) in q.iter().enumerate() {
            assert!(close(f.coeff(n).re, *qn, 1e-15), "n = {n}");
        }
    }

    #[test]
    fn degenerate_moebius_a_zero() {
        let f = DiskFunction::moebius(0.0).unwrap();
        assert_eq!(f.coeff(0), c(0.0));
        assert_eq!(f.coeff(1), c(-1.0));
        assert_eq!(f.coeff(2), c(0.0));
        assert!(close(f.majorant_tail(0.3, 0).unwrap(), 0.3, 1e-15));
        assert!(close(f.area_ratio(0.3).unwrap(), 0.09, 1e-15));
        assert!(DiskFunction::moebius(1.0).is_err());
    }

    #[test]
    fn half_plane_coefficients_are_one() {
        let f = DiskFunction::half_plane();
        for n in [0, 1, 7, 100] {
            assert_eq!(f.coeff(n), c(1.0));
        }
    }

    #[test]
    fn eval_examples() {
        let f = DiskFunction::moebius(0.5).unwrap();
        assert!(close(f.eval(c(0.0)).unwrap().re, 0.5, 1e-15));
        assert!(close(f.eval(c(-0.2)).unwrap().re, 0.7 / 1.1, 1e-15));
        assert!(close(
            DiskFunction::koebe().eval(c(0.5)).unwrap().re,
            2.0,
            1e-15
        ));
        assert!(matches!(f.eval(c(1.0)), Err(Error::Domain { .. })));
    }

    #[test]
    fn eval_matches_truncated_series() {
        let f = DiskFunction::moebius(0.5).unwrap();
        let z = Complex64::new(-0.2, 0.0);
        let mut s = Complex64::new(0.0, 0.0);
        let mut zn = Complex64::new(1.0, 0.0);
        for n in 0..200 {
            s += f.coeff(n) * zn;
            zn *= z;
        }
        assert!((s - f.eval(z).unwrap()).norm() < 1e-12);
    }

    #[test]
    fn sums_examples() {
        let f = DiskFunction::moebius(0.5).unwrap();
        assert!(close(f.majorant_tail(1.0 / 3.0, 0).unwrap(), 0.8, 1e-15));
        assert!(close(f.quadratic_sum(0.5, 1).unwrap(), 0.15, 1e-15));
        assert!(close(f.area_ratio(0.5).unwrap(), 0.16, 1e-15));
        assert!(close(f.area_odds(0.5).unwrap(), 0.16 / 0.84, 1e-15));

        let constant = DiskFunction::real_polynomial(&[0.7]);
        assert_eq!(constant.majorant_tail(0.4, 1).unwrap(), 0.0);
        assert_eq!(constant.quadratic_sum(0.4, 1).unwrap(), 0.0);
        assert_eq!(constant.area_ratio(0.4).unwrap(), 0.0);
        assert_eq!(constant.area_odds(0.4).unwrap(), 0.0);

        assert!(close(
            DiskFunction::half_plane().majorant_tail(0.5, 0).unwrap(),
            2.0,
            1e-15
        ));

        let z = DiskFunction::explicit(vec![c(0.0), c(1.0)], 0.0, 0.0).unwrap();
        assert!(close(z.quadratic_sum(0.3, 1).unwrap(), 0.09, 1e-15));
    }

    #[test]
    fn radius_outside_domain_is_rejected() {
        let f = DiskFunction::moebius(0.5).unwrap();
        assert!(matches!(f.majorant_tail(1.0, 0), Err(Error::Domain { .. })));
        assert!(matches!(f.quadratic_sum(1.2, 1), Err(Error::Domain { .. })));
        assert!(matches!(f.area_ratio(-0.1), Err(Error::Domain { .. })));
        assert!(matches!(
            f.sup_modulus(1.0, SupMode::Exact),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn area_odds_singular_when_ratio_reaches_one() {
        let f = DiskFunction::half_plane();
        // r²/(1-r²)² ≥ 1 once r ≥ 0.618...
        assert!(matches!(f.area_odds(0.7), Err(Error::SingularInput { .. })));
    }

    #[test]
    fn sup_modulus_closed_form_against_grid() {
        let f = DiskFunction::moebius(0.5).unwrap();
        let exact = f.sup_modulus(0.2, SupMode::Exact).unwrap();
        assert!(close(exact, 0.7 / 1.1, 1e-15));
        let grid = f.sup_modulus(0.2, SupMode::ThetaGrid(720)).unwrap();
        assert!(grid <= exact + 1e-15);
        assert!(close(grid, exact, 1e-12));
        assert_eq!(f.sup_modulus(0.0, SupMode::Exact).unwrap(), 0.5);
    }

    #[test]
    fn sup_deviation_of_moebius_is_attained_at_positive_axis() {
        let f = DiskFunction::moebius(0.6).unwrap();
        let exact = f.sup_deviation(0.3, SupMode::Exact).unwrap();
        let grid = f.sup_deviation(0.3, SupMode::ThetaGrid(720)).unwrap();
        assert!(close(exact, (1.0 - 0.36) * 0.3 / (1.0 - 0.18), 1e-15));
        assert!(close(grid, exact, 1e-12));
    }

    #[test]
    fn blaschke_with_single_zero_is_moebius() {
        let a = 0.37;
        let b = DiskFunction::blaschke(vec![c(a)], c(-1.0)).unwrap();
        let m = DiskFunction::moebius(a).unwrap();
        for n in 0..20 {
            assert!((b.coeff(n) - m.coeff(n)).norm() < 1e-15);
        }
        let z = Complex64::new(0.1, -0.4);
        assert!((b.eval(z).unwrap() - m.eval(z).unwrap()).norm() < 1e-15);
        assert!(close(
            b.majorant_tail(0.4, 1).unwrap(),
            m.majorant_tail(0.4, 1).unwrap(),
            1e-12
        ));
    }

    #[test]
    fn blaschke_coefficients_match_product_of_series() {
        let zeros = vec![Complex64::new(0.3, 0.4), Complex64::new(-0.5, 0.1)];
        let u = Complex64::from_polar(1.0, 0.7);
        let b = DiskFunction::blaschke(zeros.clone(), u).unwrap();
        // naive convolution of the two factor series
        let order = 30;
        let factor = |zj: Complex64| -> Vec<Complex64> {
            (0..order)
                .map(|n| {
                    if n == 0 {
                        -zj
                    } else {
                        (1.0 - zj.norm_sqr()) * zj.conj().powi(n as i32 - 1)
                    }
                })
                .collect()
        };
        let f1 = factor(zeros[0]);
        let f2 = factor(zeros[1]);
        for n in 0..order {
            let conv: Complex64 = (0..=n).map(|i| f1[i] * f2[n - i]).sum::<Complex64>() * u;
            assert!((conv - b.coeff(n)).norm() < 1e-14, "n = {n}");
        }
    }

    #[test]
    fn zero_only_blaschke_is_a_monomial() {
        let b = DiskFunction::blaschke(vec![c(0.0), c(0.0)], c(1.0)).unwrap();
        assert_eq!(b.coeff(2), c(1.0));
        assert!(close(b.majorant_tail(0.5, 0).unwrap(), 0.25, 1e-15));
    }

    #[test]
    fn explicit_tail_must_fit_tolerance() {
        let f = DiskFunction::explicit(vec![c(0.5), c(0.25)], 0.5, 1.0).unwrap();
        assert!(matches!(
            f.majorant_tail(0.5, 0),
            Err(Error::TailTooLarge { .. })
        ));
    }

    #[test]
    fn dilation_and_affine_closed_forms_agree_with_truncation() {
        let policy = TruncationPolicy::default();
        let h = DiskFunction::half_plane().dilated(0.8).unwrap();
        let g = DiskFunction::moebius(0.4)
            .unwrap()
            .affine(Complex64::new(0.0, 0.5), Complex64::new(-0.1, 0.2));
        for f in [&h, &g] {
            for r in [0.1, 0.5, 0.9] {
                let t = f
                    .sum_truncated(SumKind::Majorant, r, 0, &policy)
                    .unwrap()
                    .value;
                assert!(
                    close(f.majorant_tail(r, 0).unwrap(), t, 1e-11),
                    "{} r={r}",
                    f.label()
                );
                let q = f
                    .sum_truncated(SumKind::Quadratic, r, 1, &policy)
                    .unwrap()
                    .value;
                assert!(close(f.quadratic_sum(r, 1).unwrap(), q, 1e-11));
                let s = f.sum_truncated(SumKind::Area, r, 1, &policy).unwrap().value;
                assert!(close(f.area_ratio(r).unwrap(), s, 1e-11));
            }
        }
    }

    #[test]
    fn koebe_closed_forms_agree_with_truncation() {
        let policy = TruncationPolicy::default();
        let k = DiskFunction::koebe();
        for r in [0.1, 0.3, 0.6] {
            for n in [0, 1, 4] {
                let t = k
                    .sum_truncated(SumKind::Majorant, r, n, &policy)
                    .unwrap()
                    .value;
                assert!(close(k.majorant_tail(r, n).unwrap(), t, 1e-10));
            }
            let s = k.sum_truncated(SumKind::Area, r, 1, &policy).unwrap().value;
            assert!(close(k.area_ratio(r).unwrap(), s, 1e-10));
        }
    }

    #[test]
    fn sup_norms() {
        assert_eq!(
            DiskFunction::moebius(0.3)
                .unwrap()
                .sup_norm()
                .unwrap()
                .value,
            1.0
        );
        let dil = DiskFunction::moebius(0.3).unwrap().dilated(0.5).unwrap();
        let n = dil.sup_norm().unwrap();
        assert!(n.exact && close(n.value, 0.8 / 1.15, 1e-15));
        let p = DiskFunction::real_polynomial(&[0.5, 0.25])
            .sup_norm()
            .unwrap();
        assert!(!p.exact && close(p.value, 0.75, 1e-6));
    }
}
