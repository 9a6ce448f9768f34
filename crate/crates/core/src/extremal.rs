//! Closed forms of the sharp functionals along the Möbius family
//! `f_a(z) = (a - z)/(1 - a z)` at the extremal radius.
//!
//! Each sharp inequality with a free weight λ is written as
//! `1 + base(a) + λ·x(a)² - 1`, where `x(a)` is the area-type quantity of
//! `f_a` at the extremal radius. The boundary residual is
//! `base(a) + λ·x(a)²`; it vanishes at the extremal parameter.

use serde::Serialize;

/// Identifiers of the sharp functionals that carry a λ weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SharpId {
    A1,
    A2,
    A3,
    AreaSq,
    AreaSqF2,
    RefinedSq,
    RefinedSqF2,
}

impl SharpId {
    pub const ALL: [SharpId; 7] = [
        SharpId::A1,
        SharpId::A2,
        SharpId::A3,
        SharpId::AreaSq,
        SharpId::AreaSqF2,
        SharpId::RefinedSq,
        SharpId::RefinedSqF2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SharpId::A1 => "a1",
            SharpId::A2 => "a2",
            SharpId::A3 => "a3",
            SharpId::AreaSq => "area-sq",
            SharpId::AreaSqF2 => "area-sq-f2",
            SharpId::RefinedSq => "refined-sq",
            SharpId::RefinedSqF2 => "refined-sq-f2",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|id| id.as_str() == s)
    }

    /// Catalog id of the extremal parameter in [`crate::constants`].
    pub fn root_id(self) -> &'static str {
        match self {
            SharpId::A1 => "alpha",
            SharpId::A2 => "beta",
            SharpId::A3 => "gamma",
            SharpId::AreaSq => "a_area_sq",
            SharpId::AreaSqF2 => "a_area_sq_f2",
            SharpId::RefinedSq => "a_refined_sq",
            SharpId::RefinedSqF2 => "a_refined_sq_f2",
        }
    }

    /// Catalog id of the sharp λ in [`crate::constants`].
    pub fn lambda_id(self) -> &'static str {
        match self {
            SharpId::A1 => "lambda_A1",
            SharpId::A2 => "lambda_A2",
            SharpId::A3 => "lambda_A3",
            SharpId::AreaSq => "lambda_area_sq",
            SharpId::AreaSqF2 => "lambda_area_sq_f2",
            SharpId::RefinedSq => "lambda_refined_sq",
            SharpId::RefinedSqF2 => "lambda_refined_sq_f2",
        }
    }

    /// Radius at which `f_a` attains equality.
    pub fn extremal_radius(self, a: f64) -> f64 {
        match self {
            SharpId::A1 => 0.2,
            SharpId::A2 | SharpId::AreaSq | SharpId::AreaSqF2 | SharpId::RefinedSq => 1.0 / 3.0,
            SharpId::A3 | SharpId::RefinedSqF2 => 1.0 / (3.0 - a),
        }
    }

    /// The quantity squared under λ: `S_r/π` or `S_r/(π - S_r)` of `f_a`
    /// at the extremal radius.
    pub fn weight(self, a: f64) -> f64 {
        let b = 1.0 - a * a;
        match self {
            SharpId::A1 => 25.0 * b * b / (25.0 - a * a).powi(2),
            SharpId::A2 => 9.0 * b * b / (8.0 * (9.0 - a.powi(4))),
            SharpId::A3 => {
                let c = 3.0 - a;
                c * c * b * b / ((4.0 - a) * (2.0 - a) * (9.0 - 6.0 * a + a * a - a.powi(4)))
            }
            SharpId::AreaSq | SharpId::AreaSqF2 | SharpId::RefinedSq => {
                9.0 * b * b / (9.0 - a * a).powi(2)
            }
            SharpId::RefinedSqF2 => {
                let c = 3.0 - a;
                b * b * c * c / (9.0 * (3.0 - 2.0 * a).powi(2))
            }
        }
    }

    /// Residual without the λ term, so that `residual = base + λ·weight²`.
    pub fn base(self, a: f64) -> f64 {
        let b = 1.0 - a * a;
        let x = self.weight(a);
        match self {
            SharpId::A1 => {
                -1.0 + a + b / 4.0 + b / (5.0 - a) + 90.0 * b * b / (25.0 - a * a).powi(2)
            }
            SharpId::A2 => -1.0 + a + b / 2.0 + b * b / (9.0 - a.powi(4)),
            SharpId::A3 => -1.0 + a * a + b / (2.0 - a) + 9.0 / 8.0 * x,
            SharpId::AreaSq => -1.0 + a + b / (3.0 - a) + 16.0 / 9.0 * x,
            SharpId::AreaSqF2 => {
                let s = (1.0 + 3.0 * a) / (3.0 + a);
                -1.0 + s * s + b / (3.0 - a) + 16.0 / 9.0 * x
            }
            SharpId::RefinedSq => -1.0 + a + b / 2.0 + 8.0 / 9.0 * x,
            SharpId::RefinedSqF2 => -1.0 + a * a + b / (2.0 - a) + 9.0 / 8.0 * x,
        }
    }

    /// `base(a) + λ·weight(a)²`: left-hand side minus one for `f_a` at the
    /// extremal radius.
    pub fn residual(self, a: f64, lambda: f64) -> f64 {
        self.base(a) + lambda * self.weight(a).powi(2)
    }

    /// The λ for which `f_a` attains equality: `-base(a)/weight(a)²`.
    pub fn equality_lambda(self, a: f64) -> f64 {
        -self.base(a) / self.weight(a).powi(2)
    }
}

/// Small-`|a₀|` branch bound of the first main inequality at `r = 1/5`:
/// `t + (1 - t²)/4 + 1/√24 + 90(1 - t²)²/(25 - t²)² + λ(25(1 - t²)²/(25 - t²)²)²`.
pub fn a1_small_branch(t: f64, lambda: f64) -> f64 {
    let b = 1.0 - t * t;
    let x = 25.0 * b * b / (25.0 - t * t).powi(2);
    t + b / 4.0 + 1.0 / 24f64.sqrt() + 90.0 * b * b / (25.0 - t * t).powi(2) + lambda * x * x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::DiskFunction;

    /// Left-hand sides of each sharp row, evaluated through the series engine.
    fn lhs_from_series(id: SharpId, a: f64, lambda: f64) -> f64 {
        let f = DiskFunction::moebius(a).unwrap();
        let r = id.extremal_radius(a);
        let tail = f.majorant_tail(r, 1).unwrap();
        let quad = f.quadratic_sum(r, 1).unwrap();
        let refined = (1.0 / (1.0 + a) + r / (1.0 - r)) * quad;
        let s = f.area_ratio(r).unwrap();
        let odds = f.area_odds(r).unwrap();
        let sup = (a + r) / (1.0 + a * r);
        let dev = (1.0 - a * a) * r / (1.0 - a * r);
        match id {
            SharpId::A1 => a + tail + refined + dev + 3.6 * s + lambda * s * s,
            SharpId::A2 => a + tail + refined + 8.0 / 9.0 * odds + lambda * odds * odds,
            SharpId::A3 => a * a + tail + refined + 9.0 / 8.0 * odds + lambda * odds * odds,
            SharpId::AreaSq => a + tail + 16.0 / 9.0 * s + lambda * s * s,
            SharpId::AreaSqF2 => sup * sup + tail + 16.0 / 9.0 * s + lambda * s * s,
            SharpId::RefinedSq => a + tail + refined + 8.0 / 9.0 * s + lambda * s * s,
            SharpId::RefinedSqF2 => a * a + tail + refined + 9.0 / 8.0 * s + lambda * s * s,
        }
    }

    #[test]
    fn closed_forms_agree_with_series_evaluation() {
        for id in SharpId::ALL {
            for a in [0.05, 0.3, 0.56, 0.8, 0.97] {
                let lambda = 12.5;
                let direct = lhs_from_series(id, a, lambda) - 1.0;
                let closed = id.residual(a, lambda);
                assert!(
                    (direct - closed).abs() < 1e-12,
                    "{} a={a}: {direct} vs {closed}",
                    id.as_str()
                );
            }
        }
    }

    #[test]
    fn equality_lambda_zeroes_the_residual() {
        for id in SharpId::ALL {
            let lam = id.equality_lambda(0.6);
            assert!(id.residual(0.6, lam).abs() < 1e-13);
        }
    }

    #[test]
    fn parse_round_trips() {
        for id in SharpId::ALL {
            assert_eq!(SharpId::parse(id.as_str()), Some(id));
        }
        assert_eq!(SharpId::parse("classical"), None);
    }

    #[test]
    fn small_branch_is_increasing() {
        let lam = 118.38;
        let mut prev = a1_small_branch(0.0, lam);
        for j in 1..=100 {
            let v = a1_small_branch(0.002 * j as f64, lam);
            assert!(v > prev);
            prev = v;
        }
    }
}
