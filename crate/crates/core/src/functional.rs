//! Catalog of Bohr-type functionals: left-hand sides, right-hand sides and
//! stated radii.
//!
//! Notation used in the row descriptions, for `f = Σ a_n zⁿ` at radius `r`:
//!
//! - `M = Σ_{n≥0} |a_n| rⁿ` and `T_N = Σ_{n≥N} |a_n| rⁿ`
//! - `S = S_r/π = Σ n|a_n|² r^{2n}` and `X = S/(1 - S)`
//! - `R = (1/(1+|a₀|) + r/(1-r)) Σ_{n≥1} |a_n|² r^{2n}` (the refinement term)
//! - `|f(z)|` and `|f(z) - a₀|` are resolved by the [`ZPolicy`].

use std::f64::consts::PI;
use std::fmt;
use std::sync::OnceLock;

use num_complex::Complex64;
use serde::Serialize;

use crate::constants::{self, Provenance, Radius};
use crate::error::{Error, Result};
use crate::extremal::SharpId;
use crate::harmonic::HarmonicPair;
use crate::series::{DiskFunction, SupMode, BOUNDARY_RADIUS};

macro_rules! catalog_ids {
    ($($variant:ident => $name:literal),+ $(,)?) => {
        /// Stable identifier of a catalog row.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum CatalogId { $($variant),+ }

        impl CatalogId {
            pub const ALL: &'static [CatalogId] = &[$(CatalogId::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self { $(CatalogId::$variant => $name),+ }
            }

            pub fn parse(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(CatalogId::$variant),)+
                    other => Err(Error::UnknownId(other.to_string())),
                }
            }
        }
    };
}

catalog_ids! {
    Classical => "classical",
    Rogosinski => "rogosinski",
    RogosinskiSq => "rogosinski-sq",
    Area169 => "area-16-9",
    Area98 => "area-9-8",
    AreaSq => "area-sq",
    AreaSqF2 => "area-sq-f2",
    Odds169 => "odds-16-9",
    Odds98 => "odds-9-8",
    Refined => "refined",
    RefinedA0Sq => "refined-a0sq",
    RefinedDist => "refined-dist",
    RefinedDistA0Sq => "refined-dist-a0sq",
    RefinedSq => "refined-sq",
    RefinedSqF2 => "refined-sq-f2",
    A1 => "a1",
    A2 => "a2",
    A3 => "a3",
    HarmI1 => "harm-i1",
    HarmI2 => "harm-i2",
    HarmJ => "harm-j",
    SubConvex => "sub-convex",
    SubUniv => "sub-univ",
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CatalogId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl CatalogId {
    pub fn is_harmonic(self) -> bool {
        matches!(
            self,
            CatalogId::HarmI1
                | CatalogId::HarmI2
                | CatalogId::HarmJ
                | CatalogId::SubConvex
                | CatalogId::SubUniv
        )
    }

    pub fn takes_n(self) -> bool {
        matches!(self, CatalogId::Rogosinski | CatalogId::RogosinskiSq)
    }

    pub fn takes_psi(self) -> bool {
        matches!(self, CatalogId::SubConvex | CatalogId::SubUniv)
    }

    /// The λ-weighted rows and their boundary-equality closed forms.
    pub fn sharp(self) -> Option<SharpId> {
        Some(match self {
            CatalogId::A1 => SharpId::A1,
            CatalogId::A2 => SharpId::A2,
            CatalogId::A3 => SharpId::A3,
            CatalogId::AreaSq => SharpId::AreaSq,
            CatalogId::AreaSqF2 => SharpId::AreaSqF2,
            CatalogId::RefinedSq => SharpId::RefinedSq,
            CatalogId::RefinedSqF2 => SharpId::RefinedSqF2,
            _ => return None,
        })
    }

    pub fn takes_lambda(self) -> bool {
        self.sharp().is_some()
    }
}

/// The recomputed sharp λ of a weighted row.
pub fn sharp_lambda(id: SharpId) -> f64 {
    static CACHE: OnceLock<Vec<(SharpId, f64)>> = OnceLock::new();
    let table = CACHE.get_or_init(|| {
        SharpId::ALL
            .iter()
            .map(|&s| {
                let value = constants::reproduce(s.lambda_id())
                    .map(|r| r.value)
                    .unwrap_or(f64::NAN);
                (s, value)
            })
            .collect()
    });
    table
        .iter()
        .find(|(s, _)| *s == id)
        .map(|(_, v)| *v)
        .unwrap_or(f64::NAN)
}

/// How `|f(z)|`-type terms are resolved on `|z| = r`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "theta")]
pub enum ZPolicy {
    /// Supremum over the circle, as the inequalities quantify over `|z| = r`.
    #[default]
    SupCircle,
    /// The single point `z = r e^{iθ}`.
    FixedAngle(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SubordinationKind {
    Convex,
    Univalent,
}

/// Dominant function `ψ` of a subordination row.
#[derive(Debug, Clone, PartialEq)]
pub enum Subordinator {
    /// `1/(1 - z)`: convex, `ψ(0) = 1`, distance 1/2.
    HalfPlane,
    /// `z/(1 - z)²`: univalent, `ψ(0) = 0`, omits `-1/4`.
    Koebe,
    Custom {
        psi: DiskFunction,
        kind: SubordinationKind,
    },
}

impl Subordinator {
    pub fn function(&self) -> DiskFunction {
        match self {
            Subordinator::HalfPlane => DiskFunction::half_plane(),
            Subordinator::Koebe => DiskFunction::koebe(),
            Subordinator::Custom { psi, .. } => psi.clone(),
        }
    }

    pub fn kind(&self) -> SubordinationKind {
        match self {
            Subordinator::HalfPlane => SubordinationKind::Convex,
            Subordinator::Koebe => SubordinationKind::Univalent,
            Subordinator::Custom { kind, .. } => *kind,
        }
    }

    pub fn label(&self) -> String {
        match self {
            Subordinator::HalfPlane => "half-plane".into(),
            Subordinator::Koebe => "koebe".into(),
            Subordinator::Custom { psi, .. } => psi.label(),
        }
    }

    /// `dist(ψ(0), ∂ψ(D))`, with a flag telling whether it is exact.
    pub fn dist(&self, samples: usize) -> Result<(f64, bool)> {
        match self {
            Subordinator::HalfPlane => Ok((0.5, true)),
            Subordinator::Koebe => Ok((0.25, true)),
            Subordinator::Custom { psi, .. } => Ok((boundary_distance(psi, samples)?, false)),
        }
    }
}

/// `min_θ |ψ(ρ e^{iθ}) - ψ(0)|` at `ρ = 1 - 10⁻⁶`.
pub fn boundary_distance(psi: &DiskFunction, samples: usize) -> Result<f64> {
    let m = samples.max(3);
    let c = psi.a0();
    let mut best = f64::INFINITY;
    for j in 0..m {
        let z = Complex64::from_polar(BOUNDARY_RADIUS, 2.0 * PI * j as f64 / m as f64);
        best = best.min((psi.eval(z)? - c).norm());
    }
    Ok(best)
}

/// `2·dist` for convex `ψ`, `4n·dist` for univalent `ψ`.
pub fn coefficient_envelope_subordination(kind: SubordinationKind, n: usize, dist: f64) -> f64 {
    match kind {
        SubordinationKind::Convex => 2.0 * dist,
        SubordinationKind::Univalent => 4.0 * n as f64 * dist,
    }
}

/// The function or pair a functional is evaluated on.
#[derive(Debug, Clone, Copy)]
pub enum Subject<'a> {
    Analytic(&'a DiskFunction),
    Harmonic(&'a HarmonicPair),
}

impl<'a> From<&'a DiskFunction> for Subject<'a> {
    fn from(f: &'a DiskFunction) -> Self {
        Subject::Analytic(f)
    }
}

impl<'a> From<&'a HarmonicPair> for Subject<'a> {
    fn from(p: &'a HarmonicPair) -> Self {
        Subject::Harmonic(p)
    }
}

/// Right-hand side, flagged when numerically approximated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bound {
    pub value: f64,
    pub exact: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum StatedRadius {
    Fixed(Radius),
    /// `1/(3 - |a₀|)`, depending on the subject.
    ReciprocalThreeMinusA0,
}

impl StatedRadius {
    pub fn at(&self, a0: f64) -> f64 {
        match self {
            StatedRadius::Fixed(r) => r.value,
            StatedRadius::ReciprocalThreeMinusA0 => 1.0 / (3.0 - a0),
        }
    }

    pub fn provenance(&self) -> Provenance {
        match self {
            StatedRadius::Fixed(r) => r.provenance,
            StatedRadius::ReciprocalThreeMinusA0 => Provenance::ClosedForm,
        }
    }
}

/// Number of boundary samples for a custom subordinator's distance.
const DIST_SAMPLES: usize = 4096;

/// A catalog row together with its free parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct FunctionalSpec {
    pub id: CatalogId,
    pub lambda: Option<f64>,
    pub n: Option<u32>,
    pub k: Option<f64>,
    pub psi: Option<Subordinator>,
    pub z_policy: ZPolicy,
}

impl FunctionalSpec {
    pub fn new(id: CatalogId) -> Self {
        Self {
            id,
            lambda: None,
            n: None,
            k: None,
            psi: None,
            z_policy: ZPolicy::SupCircle,
        }
    }

    pub fn with_lambda(mut self, lambda: f64) -> Self {
        self.lambda = Some(lambda);
        self
    }

    pub fn with_n(mut self, n: u32) -> Self {
        self.n = Some(n);
        self
    }

    pub fn with_k(mut self, k: f64) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_psi(mut self, psi: Subordinator) -> Self {
        self.psi = Some(psi);
        self
    }

    pub fn with_z_policy(mut self, z: ZPolicy) -> Self {
        self.z_policy = z;
        self
    }

    /// Builds and validates in one step.
    pub fn parse(id: &str) -> Result<Self> {
        Ok(Self::new(CatalogId::parse(id)?))
    }

    /// Parameters must be present exactly when the row uses them.
    pub fn validate(&self) -> Result<()> {
        let id = self.id;
        let missing = |param| Error::MissingParam {
            id: id.as_str().to_string(),
            param,
        };
        let unexpected = |param| Error::UnexpectedParam {
            id: id.as_str().to_string(),
            param,
        };
        match (id.takes_n(), self.n) {
            (true, None) => return Err(missing("N")),
            (true, Some(0)) => return Err(Error::InvalidParam("N must be at least 1".into())),
            (false, Some(_)) => return Err(unexpected("N")),
            _ => {}
        }
        match (id.is_harmonic(), self.k) {
            (true, None) => return Err(missing("k")),
            (true, Some(k)) if !(0.0..=1.0).contains(&k) => {
                return Err(Error::InvalidParam(format!("k = {k} not in [0, 1]")))
            }
            (false, Some(_)) => return Err(unexpected("k")),
            _ => {}
        }
        match (id.takes_psi(), &self.psi) {
            (true, None) => return Err(missing("psi")),
            (false, Some(_)) => return Err(unexpected("psi")),
            _ => {}
        }
        match (id.takes_lambda(), self.lambda) {
            (false, Some(_)) => return Err(unexpected("lambda")),
            (true, Some(l)) if !(l >= 0.0) => {
                return Err(Error::InvalidParam(format!(
                    "lambda = {l} must be nonnegative"
                )))
            }
            _ => {}
        }
        if let Some(Subordinator::Custom { psi, .. }) = &self.psi {
            if psi.is_bounded() && psi.a0().norm() > 1.0 {
                return Err(Error::InvalidParam("psi(0) outside the closed disk".into()));
            }
        }
        Ok(())
    }

    /// The λ in use: the given one, or the recomputed sharp value.
    pub fn lambda_value(&self) -> Option<f64> {
        self.id
            .sharp()
            .map(|s| self.lambda.unwrap_or_else(|| sharp_lambda(s)))
    }

    fn need_n(&self) -> Result<usize> {
        self.n
            .map(|n| n as usize)
            .ok_or_else(|| Error::MissingParam {
                id: self.id.as_str().to_string(),
                param: "N",
            })
    }

    fn need_k(&self) -> Result<f64> {
        self.k.ok_or_else(|| Error::MissingParam {
            id: self.id.as_str().to_string(),
            param: "k",
        })
    }

    fn need_psi(&self) -> Result<&Subordinator> {
        self.psi.as_ref().ok_or_else(|| Error::MissingParam {
            id: self.id.as_str().to_string(),
            param: "psi",
        })
    }

    fn modulus(&self, f: &DiskFunction, r: f64) -> Result<f64> {
        match self.z_policy {
            ZPolicy::SupCircle => f.sup_modulus(r, SupMode::Exact),
            ZPolicy::FixedAngle(theta) => Ok(f.eval(Complex64::from_polar(r, theta))?.norm()),
        }
    }

    fn deviation(&self, f: &DiskFunction, r: f64) -> Result<f64> {
        match self.z_policy {
            ZPolicy::SupCircle => f.sup_deviation(r, SupMode::Exact),
            ZPolicy::FixedAngle(theta) => {
                Ok((f.eval(Complex64::from_polar(r, theta))? - f.a0()).norm())
            }
        }
    }

    fn analytic_lhs(&self, f: &DiskFunction, r: f64) -> Result<f64> {
        use CatalogId::*;
        let a0 = f.a0().norm();
        let tail1 = || f.majorant_tail(r, 1);
        let m = || Ok::<f64, Error>(a0 + tail1()?);
        let a0sq = || Ok::<f64, Error>(a0 * a0 + tail1()?);
        let s = || f.area_ratio(r);
        let x = || f.area_odds(r);
        let refined =
            || Ok::<f64, Error>((1.0 / (1.0 + a0) + r / (1.0 - r)) * f.quadratic_sum(r, 1)?);
        let lambda = self.lambda_value().unwrap_or(0.0);
        Ok(match self.id {
            Classical => m()?,
            Rogosinski => self.modulus(f, r)? + f.majorant_tail(r, self.need_n()?)?,
            RogosinskiSq => self.modulus(f, r)?.powi(2) + f.majorant_tail(r, self.need_n()?)?,
            Area169 => m()? + 16.0 / 9.0 * s()?,
            Area98 => a0sq()? + 9.0 / 8.0 * s()?,
            AreaSq => {
                let s = s()?;
                m()? + 16.0 / 9.0 * s + lambda * s * s
            }
            AreaSqF2 => {
                let s = s()?;
                self.modulus(f, r)?.powi(2) + tail1()? + 16.0 / 9.0 * s + lambda * s * s
            }
            Odds169 => m()? + 16.0 / 9.0 * x()?,
            Odds98 => a0sq()? + 9.0 / 8.0 * x()?,
            Refined => m()? + refined()? + 8.0 / 9.0 * s()?,
            RefinedA0Sq => a0sq()? + refined()? + 9.0 / 8.0 * s()?,
            RefinedDist => m()? + refined()? + self.deviation(f, r)?,
            RefinedDistA0Sq => a0sq()? + refined()? + self.deviation(f, r)?,
            RefinedSq => {
                let s = s()?;
                m()? + refined()? + 8.0 / 9.0 * s + lambda * s * s
            }
            RefinedSqF2 => {
                let s = s()?;
                a0sq()? + refined()? + 9.0 / 8.0 * s + lambda * s * s
            }
            A1 => {
                let s = s()?;
                m()? + refined()? + self.deviation(f, r)? + 3.6 * s + lambda * s * s
            }
            A2 => {
                let x = x()?;
                m()? + refined()? + 8.0 / 9.0 * x + lambda * x * x
            }
            A3 => {
                let x = x()?;
                a0sq()? + refined()? + 9.0 / 8.0 * x + lambda * x * x
            }
            HarmI1 | HarmI2 | HarmJ | SubConvex | SubUniv => {
                return Err(Error::KindMismatch {
                    id: self.id.as_str(),
                    expected: "harmonic",
                })
            }
        })
    }

    fn harmonic_lhs(&self, p: &HarmonicPair, r: f64) -> Result<f64> {
        let co = p.co_majorant(r, 1)?;
        let h = self.modulus(p.h(), r)?;
        Ok(match self.id {
            CatalogId::HarmI2 => h * h + co,
            CatalogId::HarmI1 | CatalogId::HarmJ | CatalogId::SubConvex | CatalogId::SubUniv => {
                h + co
            }
            _ => {
                return Err(Error::KindMismatch {
                    id: self.id.as_str(),
                    expected: "analytic",
                })
            }
        })
    }

    /// Left-hand side of the row at radius `r`.
    pub fn lhs<'a>(&self, subject: impl Into<Subject<'a>>, r: f64) -> Result<f64> {
        if !(0.0..1.0).contains(&r) {
            return Err(Error::Domain {
                what: "r",
                value: r,
            });
        }
        match subject.into() {
            Subject::Analytic(f) => self.analytic_lhs(f, r),
            Subject::Harmonic(p) => self.harmonic_lhs(p, r),
        }
    }

    /// Right-hand side of the row.
    pub fn rhs<'a>(&self, subject: impl Into<Subject<'a>>) -> Result<Bound> {
        let subject = subject.into();
        match (self.id.is_harmonic(), subject) {
            (false, Subject::Harmonic(_)) => {
                return Err(Error::KindMismatch {
                    id: self.id.as_str(),
                    expected: "analytic",
                })
            }
            (true, Subject::Analytic(_)) => {
                return Err(Error::KindMismatch {
                    id: self.id.as_str(),
                    expected: "harmonic",
                })
            }
            _ => {}
        }
        match (self.id, subject) {
            (CatalogId::HarmI1 | CatalogId::HarmI2, Subject::Harmonic(p)) => {
                let norm = p.h().sup_norm()?;
                Ok(Bound {
                    value: norm.value,
                    exact: norm.exact,
                })
            }
            (CatalogId::SubConvex | CatalogId::SubUniv, _) => {
                let psi = self.need_psi()?;
                let (dist, exact) = psi.dist(DIST_SAMPLES)?;
                Ok(Bound {
                    value: psi.function().a0().norm() + dist,
                    exact,
                })
            }
            _ => Ok(Bound {
                value: 1.0,
                exact: true,
            }),
        }
    }

    /// `lhs - rhs`.
    pub fn margin<'a>(&self, subject: impl Into<Subject<'a>>, r: f64) -> Result<f64> {
        let subject = subject.into();
        Ok(self.lhs(subject, r)? - self.rhs(subject)?.value)
    }

    /// The radius up to which the row is claimed.
    pub fn stated_radius(&self) -> Result<StatedRadius> {
        use CatalogId::*;
        let closed = |value| {
            StatedRadius::Fixed(Radius {
                value,
                provenance: Provenance::ClosedForm,
                residual: 0.0,
            })
        };
        Ok(match self.id {
            Classical | Area169 | Odds169 | Refined | RefinedDistA0Sq | AreaSq | AreaSqF2
            | RefinedSq | A2 => closed(1.0 / 3.0),
            Area98 | Odds98 => closed(0.5),
            RefinedDist | A1 => closed(0.2),
            RefinedA0Sq | RefinedSqF2 | A3 => StatedRadius::ReciprocalThreeMinusA0,
            Rogosinski => StatedRadius::Fixed(constants::radius_rogosinski(self.need_n()? as u32)?),
            RogosinskiSq => {
                StatedRadius::Fixed(constants::radius_rogosinski_sq(self.need_n()? as u32)?)
            }
            HarmI1 => StatedRadius::Fixed(constants::radius_r1(self.need_k()?)?),
            HarmI2 => StatedRadius::Fixed(constants::radius_r2(self.need_k()?)?),
            HarmJ | SubConvex => StatedRadius::Fixed(constants::radius_harm_j(self.need_k()?)?),
            SubUniv => StatedRadius::Fixed(constants::radius_r_u(self.need_k()?)?),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn moebius(a: f64) -> DiskFunction {
        DiskFunction::moebius(a).unwrap()
    }

    fn spec(id: CatalogId) -> FunctionalSpec {
        let s = FunctionalSpec::new(id);
        let s = if id.takes_n() { s.with_n(1) } else { s };
        let s = if id.is_harmonic() { s.with_k(0.5) } else { s };
        match id {
            CatalogId::SubConvex => s.with_psi(Subordinator::HalfPlane),
            CatalogId::SubUniv => s.with_psi(Subordinator::Koebe),
            _ => s,
        }
    }

    #[test]
    fn ids_round_trip() {
        for &id in CatalogId::ALL {
            assert_eq!(CatalogId::parse(id.as_str()).unwrap(), id);
        }
        assert!(matches!(CatalogId::parse("a4"), Err(Error::UnknownId(_))));
        assert_eq!(CatalogId::ALL.len(), 23);
    }

    #[test]
    fn a1_lhs_on_moebius_matches_closed_form() {
        let lam = 118.3;
        let s = FunctionalSpec::new(CatalogId::A1).with_lambda(lam);
        for a in [0.1f64, 0.564, 0.9] {
            let r = 0.2f64;
            let b = 1.0 - a * a;
            let x = b * b * r * r / (1.0 - a * a * r * r).powi(2);
            let expected = a + b * r / (1.0 - r) + b * r / (1.0 - a * r) + 3.6 * x + lam * x * x;
            assert!((s.lhs(&moebius(a), r).unwrap() - expected).abs() < 1e-14);
        }
    }

    #[test]
    fn a1_is_one_at_the_extremal_parameter() {
        let alpha = 0.5640843679935368;
        let v = FunctionalSpec::new(CatalogId::A1)
            .lhs(&moebius(alpha), 0.2)
            .unwrap();
        assert!((v - 1.0).abs() < 1e-5);
    }

    #[test]
    fn classical_on_constant() {
        let c = DiskFunction::real_polynomial(&[0.3]);
        let s = FunctionalSpec::new(CatalogId::Classical);
        for r in [0.0, 0.2, 0.9] {
            assert!((s.lhs(&c, r).unwrap() - 0.3).abs() < 1e-15);
        }
    }

    #[test]
    fn classical_on_moebius_tends_to_one() {
        let s = FunctionalSpec::new(CatalogId::Classical);
        let mut prev = 0.0;
        for a in [0.1, 0.5, 0.9, 0.99, 0.9999] {
            let v = s.lhs(&moebius(a), 1.0 / 3.0).unwrap();
            assert!(v <= 1.0 + 1e-15 && v >= prev);
            prev = v;
        }
        assert!(prev > 1.0 - 1e-7);
    }

    #[test]
    fn rhs_examples() {
        let s = FunctionalSpec::new(CatalogId::Classical);
        assert_eq!(s.rhs(&moebius(0.4)).unwrap().value, 1.0);
        let pair = HarmonicPair::analytic(DiskFunction::half_plane());
        let b = spec(CatalogId::SubConvex).rhs(&pair).unwrap();
        assert_eq!(b.value, 1.5);
        let pair = HarmonicPair::analytic(DiskFunction::koebe());
        assert_eq!(spec(CatalogId::SubUniv).rhs(&pair).unwrap().value, 0.25);
    }

    #[test]
    fn custom_koebe_distance_by_grid() {
        let psi = Subordinator::Custom {
            psi: DiskFunction::koebe(),
            kind: SubordinationKind::Univalent,
        };
        let (d, exact) = psi.dist(4096).unwrap();
        assert!(!exact);
        assert!((d - 0.25).abs() < 1e-6);
        let psi = Subordinator::Custom {
            psi: DiskFunction::half_plane(),
            kind: SubordinationKind::Convex,
        };
        assert!((psi.dist(4096).unwrap().0 - 0.5).abs() < 1e-6);
    }

    #[test]
    fn kind_mismatch() {
        let pair = HarmonicPair::analytic(moebius(0.3));
        assert!(matches!(
            FunctionalSpec::new(CatalogId::A1).lhs(&pair, 0.1),
            Err(Error::KindMismatch { .. })
        ));
        assert!(matches!(
            spec(CatalogId::HarmI1).lhs(&moebius(0.3), 0.1),
            Err(Error::KindMismatch { .. })
        ));
        assert!(spec(CatalogId::HarmJ).rhs(&moebius(0.3)).is_err());
    }

    #[test]
    fn validation() {
        for &id in CatalogId::ALL {
            spec(id).validate().unwrap();
        }
        assert!(matches!(
            FunctionalSpec::new(CatalogId::Rogosinski).validate(),
            Err(Error::MissingParam { .. })
        ));
        assert!(matches!(
            FunctionalSpec::new(CatalogId::Classical)
                .with_n(2)
                .validate(),
            Err(Error::UnexpectedParam { .. })
        ));
        assert!(matches!(
            FunctionalSpec::new(CatalogId::Classical)
                .with_lambda(2.0)
                .validate(),
            Err(Error::UnexpectedParam { .. })
        ));
        assert!(matches!(
            FunctionalSpec::new(CatalogId::HarmJ).validate(),
            Err(Error::MissingParam { .. })
        ));
        assert!(FunctionalSpec::new(CatalogId::HarmJ)
            .with_k(1.5)
            .validate()
            .is_err());
    }

    #[test]
    fn stated_radii() {
        let r = spec(CatalogId::Rogosinski).stated_radius().unwrap();
        assert!((r.at(0.0) - (5f64.sqrt() - 2.0)).abs() < 1e-14);
        assert_eq!(r.provenance(), Provenance::CertifiedRoot);
        let r = FunctionalSpec::new(CatalogId::HarmJ)
            .with_k(0.0)
            .stated_radius()
            .unwrap();
        assert_eq!(r.at(0.0), 0.2);
        let r = FunctionalSpec::new(CatalogId::HarmJ)
            .with_k(1.0)
            .stated_radius()
            .unwrap();
        assert_eq!(r.at(0.0), 1.0 / 7.0);
        assert_eq!(
            FunctionalSpec::new(CatalogId::A1)
                .stated_radius()
                .unwrap()
                .at(0.3),
            0.2
        );
        let r = FunctionalSpec::new(CatalogId::A3).stated_radius().unwrap();
        assert_eq!(r.at(0.5), 0.4);
    }

    #[test]
    fn coefficient_envelopes() {
        use SubordinationKind::*;
        assert_eq!(coefficient_envelope_subordination(Convex, 3, 0.5), 1.0);
        assert_eq!(coefficient_envelope_subordination(Univalent, 2, 0.25), 2.0);
        assert_eq!(coefficient_envelope_subordination(Convex, 7, 0.0), 0.0);
        assert_eq!(coefficient_envelope_subordination(Univalent, 7, 0.0), 0.0);
    }

    #[test]
    fn koebe_square_sum_closed_form() {
        // Σ n² rⁿ = r(1+r)/(1-r)³
        for r in [0.05f64, 0.2, 0.5] {
            let direct: f64 = (1..4000).map(|n| (n * n) as f64 * f64::powi(r, n)).sum();
            let closed = r * (1.0 + r) / (1.0 - r).powi(3);
            assert!((direct - closed).abs() < 1e-10 * closed);
            // same sum through the series engine: the Koebe coefficients are n
            let k = DiskFunction::koebe();
            let via_engine = k.quadratic_sum(r.sqrt(), 1).unwrap();
            assert!((via_engine - closed).abs() < 1e-10 * closed);
        }
    }

    #[test]
    fn fixed_angle_policy_bounds_sup_policy() {
        let f = moebius(0.4);
        let sup = FunctionalSpec::new(CatalogId::RefinedDist);
        for theta in [0.0, 1.0, PI] {
            let fixed = sup.clone().with_z_policy(ZPolicy::FixedAngle(theta));
            assert!(fixed.lhs(&f, 0.2).unwrap() <= sup.lhs(&f, 0.2).unwrap() + 1e-15);
        }
        // |f - a0| of the Möbius map peaks on the positive axis
        let at_zero = sup.clone().with_z_policy(ZPolicy::FixedAngle(0.0));
        assert!((at_zero.lhs(&f, 0.2).unwrap() - sup.lhs(&f, 0.2).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn odds_singularity_propagates() {
        let s = FunctionalSpec::new(CatalogId::Odds169);
        assert!(matches!(
            s.lhs(&DiskFunction::half_plane(), 0.7),
            Err(Error::SingularInput { .. })
        ));
    }
}
