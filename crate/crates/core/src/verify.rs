//! Grid verification of the catalog rows, boundary-equality certification at
//! the extremal parameters, lemma envelopes and sharpness probes.
//!
//! Grid sweeps evaluate every family member independently (in parallel) and
//! reduce in member order, so a report is identical for any thread count.

use std::f64::consts::{FRAC_1_SQRT_2, PI};
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constants::{self, Provenance};
use crate::error::{Error, Result};
use crate::extremal::{self, SharpId};
use crate::functional::{sharp_lambda, CatalogId, FunctionalSpec, StatedRadius, Subject};
use crate::harmonic::HarmonicPair;
use crate::search::golden_max;
use crate::series::{DiskFunction, SumKind, TruncationPolicy};

/// A probe counts as violated only above this margin.
pub const PROBE_THRESHOLD: f64 = 1e-8;
pub const DEFAULT_SEED: u64 = 42;
/// Maximum of the small-`|a₀|` branch as printed alongside the first main inequality.
pub const PRINTED_BRANCH_MAXIMUM: f64 = 0.989215;
/// Upper end of the r-axis for the area-ratio envelope.
pub const L32_R_MAX: f64 = FRAC_1_SQRT_2;
/// Upper end of the r-axis for the other envelopes.
pub const ENVELOPE_R_MAX: f64 = 0.95;
/// Largest zero modulus of the random Blaschke products.
pub const BLASCHKE_ZERO_RADIUS: f64 = 0.95;

const REFINE_ITERATIONS: usize = 100;
const MAX_PEAKS: usize = 5;
const BRANCH_GRID: usize = 2001;
const ROOT_WINDOW: f64 = 0.05;
const ROOT_STEP: f64 = 1e-4;
const A_TO_ONE_EXPONENTS: std::ops::RangeInclusive<i32> = 1..=8;

/// Sampling of the parameter plane.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridSpec {
    /// Points on `a ∈ [0, a_max]`.
    pub a_points: usize,
    /// Points on `r ∈ [0, stated radius]`.
    pub r_points: usize,
    pub a_max: f64,
    /// Dilatation bounds swept for harmonic rows without a fixed `k`.
    pub k_values: Vec<f64>,
    /// A report passes when its worst margin is at most this.
    pub tolerance: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            a_points: 400,
            r_points: 400,
            a_max: 1.0 - 1e-4,
            k_values: vec![0.0, 0.25, 0.5, 0.75, 1.0],
            tolerance: 1e-9,
        }
    }
}

impl GridSpec {
    pub fn with_dims(mut self, a_points: usize, r_points: usize) -> Self {
        self.a_points = a_points;
        self.r_points = r_points;
        self
    }

    /// Twice as fine on both axes; every old node stays a node.
    pub fn refined(&self) -> Self {
        let mut g = self.clone();
        g.a_points = 2 * self.a_points - 1;
        g.r_points = 2 * self.r_points - 1;
        g
    }

    fn validate(&self) -> Result<()> {
        if self.a_points < 2 || self.r_points < 2 {
            return Err(Error::InvalidParam(
                "a grid needs at least 2 points per axis".into(),
            ));
        }
        if !(self.a_max > 0.0 && self.a_max < 1.0) {
            return Err(Error::InvalidParam(format!(
                "a_max = {} not in (0, 1)",
                self.a_max
            )));
        }
        if self.k_values.is_empty() || self.k_values.iter().any(|k| !(0.0..=1.0).contains(k)) {
            return Err(Error::InvalidParam(
                "k values must be a nonempty subset of [0, 1]".into(),
            ));
        }
        if !(self.tolerance >= 0.0) {
            return Err(Error::InvalidParam(format!(
                "tolerance = {} is negative",
                self.tolerance
            )));
        }
        Ok(())
    }
}

/// Which functions a sweep runs over.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum FamilySpec {
    /// `f_a(z) = (a - z)/(1 - a z)`.
    Moebius,
    /// Seeded random Blaschke products of degree `1..=max_degree`.
    Blaschke {
        samples: usize,
        max_degree: usize,
        seed: u64,
    },
    /// Harmonic pairs built on the extremal functions of each row.
    HarmonicExtremal,
}

impl FamilySpec {
    pub fn blaschke(samples: usize, max_degree: usize, seed: u64) -> Self {
        FamilySpec::Blaschke {
            samples,
            max_degree,
            seed,
        }
    }

    pub fn label(&self) -> String {
        match self {
            FamilySpec::Moebius => "moebius".into(),
            FamilySpec::Blaschke {
                samples,
                max_degree,
                seed,
            } => format!("blaschke(n={samples}, degree<={max_degree}, seed={seed})"),
            FamilySpec::HarmonicExtremal => "harmonic-extremal".into(),
        }
    }
}

/// `samples` Blaschke products with zero moduli `0.95·√U`, uniform
/// arguments and a uniform unimodular factor.
pub fn random_blaschke(samples: usize, max_degree: usize, seed: u64) -> Result<Vec<DiskFunction>> {
    if max_degree == 0 {
        return Err(Error::InvalidParam(
            "Blaschke degree bound must be at least 1".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| {
            let degree = rng.gen_range(1..=max_degree);
            let zeros = (0..degree)
                .map(|_| {
                    let rho = BLASCHKE_ZERO_RADIUS * rng.gen::<f64>().sqrt();
                    Complex64::from_polar(rho, 2.0 * PI * rng.gen::<f64>())
                })
                .collect();
            let u = Complex64::from_polar(1.0, 2.0 * PI * rng.gen::<f64>());
            DiskFunction::blaschke(zeros, u)
        })
        .collect()
}

/// A location in the swept parameter space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridPoint {
    /// Family parameter; `|f(0)|` for Blaschke samples.
    pub a: f64,
    pub r: f64,
    pub k: Option<f64>,
    pub theta: Option<f64>,
    pub sample: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Located {
    pub point: GridPoint,
    pub margin: f64,
}

/// The radius an r-axis ran up to.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadiusUsed {
    pub k: Option<f64>,
    /// `None` when the radius depends on `|a₀|`.
    pub value: Option<f64>,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridExtent {
    pub a_points: usize,
    pub r_points: usize,
    pub a_range: [f64; 2],
    pub members: usize,
    pub radii: Vec<RadiusUsed>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub spec_id: String,
    pub family: String,
    pub grid: GridExtent,
    /// Maximum of `lhs - rhs` over the grid.
    pub worst_margin: f64,
    pub argmax: GridPoint,
    /// Interior local maxima of `a ↦ max_r margin`, largest first.
    pub peaks: Vec<Located>,
    pub pass: bool,
    pub tolerance: f64,
    pub radius_provenance: Provenance,
    pub lambda: Option<f64>,
    pub evaluated: usize,
    /// Points skipped because evaluation failed.
    pub flagged: usize,
    /// `max |lhs - rhs|` where the envelope is attained identically.
    pub equality_residual: Option<f64>,
    #[serde(skip)]
    pub runtime: Duration,
}

enum Owned {
    Analytic(DiskFunction),
    Harmonic(HarmonicPair),
}

impl Owned {
    fn subject(&self) -> Subject<'_> {
        match self {
            Owned::Analytic(f) => Subject::Analytic(f),
            Owned::Harmonic(p) => Subject::Harmonic(p),
        }
    }

    fn a0(&self) -> f64 {
        match self {
            Owned::Analytic(f) => f.a0().norm(),
            Owned::Harmonic(p) => p.h().a0().norm(),
        }
    }
}

struct Member {
    a: f64,
    k: Option<f64>,
    sample: Option<usize>,
    subject: Owned,
}

#[derive(Default)]
struct Outcome {
    worst: Option<(f64, f64)>,
    max_abs: f64,
    evaluated: usize,
    flagged: usize,
}

fn axis(n: usize, hi: f64) -> Vec<f64> {
    (0..n).map(|i| hi * i as f64 / (n - 1) as f64).collect()
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

/// Evaluates every member on its own r-axis.
fn sweep<T, E>(members: &[Member], r_points: usize, r_top: T, eval: E) -> Vec<Outcome>
where
    T: Fn(usize, &Member) -> Result<f64> + Sync,
    E: Fn(usize, &Member, f64) -> Result<f64> + Sync,
{
    members
        .par_iter()
        .enumerate()
        .map(|(i, m)| {
            let mut out = Outcome::default();
            let top = match r_top(i, m) {
                Ok(t) => t,
                Err(_) => {
                    out.flagged = r_points;
                    return out;
                }
            };
            for r in axis(r_points, top) {
                match eval(i, m, r) {
                    Ok(v) if v.is_finite() => {
                        out.evaluated += 1;
                        out.max_abs = out.max_abs.max(v.abs());
                        if out.worst.is_none_or(|(w, _)| v > w) {
                            out.worst = Some((v, r));
                        }
                    }
                    _ => out.flagged += 1,
                }
            }
            out
        })
        .collect()
}

struct Summary {
    worst: Located,
    peaks: Vec<Located>,
    evaluated: usize,
    flagged: usize,
    max_abs: f64,
}

fn reduce(members: &[Member], outcomes: &[Outcome], theta: Option<f64>) -> Result<Summary> {
    let point = |m: &Member, r: f64| GridPoint {
        a: m.a,
        r,
        k: m.k,
        theta,
        sample: m.sample,
    };
    let mut worst: Option<Located> = None;
    let (mut evaluated, mut flagged, mut max_abs) = (0, 0, 0.0f64);
    for (m, o) in members.iter().zip(outcomes) {
        evaluated += o.evaluated;
        flagged += o.flagged;
        max_abs = max_abs.max(o.max_abs);
        if let Some((v, r)) = o.worst {
            if worst.is_none_or(|w| v > w.margin) {
                worst = Some(Located {
                    point: point(m, r),
                    margin: v,
                });
            }
        }
    }
    let worst =
        worst.ok_or_else(|| Error::InvalidParam("no grid point could be evaluated".into()))?;

    let mut peaks = Vec::new();
    let mut start = 0;
    while start < members.len() {
        let mut end = start + 1;
        while end < members.len()
            && members[end].k == members[start].k
            && members[end].sample.is_none()
        {
            end += 1;
        }
        if members[start].sample.is_none() {
            let profile: Vec<Option<(f64, f64)>> =
                outcomes[start..end].iter().map(|o| o.worst).collect();
            for i in 1..profile.len().saturating_sub(1) {
                if let (Some(prev), Some(cur), Some(next)) =
                    (profile[i - 1], profile[i], profile[i + 1])
                {
                    if cur.0 > prev.0 && cur.0 >= next.0 {
                        peaks.push(Located {
                            point: point(&members[start + i], cur.1),
                            margin: cur.0,
                        });
                    }
                }
            }
        }
        start = end;
    }
    peaks.sort_by(|x, y| y.margin.total_cmp(&x.margin));
    peaks.truncate(MAX_PEAKS);

    Ok(Summary {
        worst,
        peaks,
        evaluated,
        flagged,
        max_abs,
    })
}

fn with_k(spec: &FunctionalSpec, k: Option<f64>) -> FunctionalSpec {
    let mut s = spec.clone();
    s.k = k;
    s
}

/// Blaschke products get their coefficients cached up to the order the
/// largest radius they are summed at requires.
fn cached(f: DiskFunction, r_top: f64) -> Result<DiskFunction> {
    let order = f.required_order(SumKind::Majorant, r_top, &TruncationPolicy::default())?;
    Ok(f.with_coefficient_cache(order + 1))
}

fn blaschke_members(
    samples: usize,
    max_degree: usize,
    seed: u64,
    r_top: impl Fn(f64) -> f64,
) -> Result<Vec<(usize, DiskFunction)>> {
    random_blaschke(samples, max_degree, seed)?
        .into_iter()
        .enumerate()
        .map(|(i, f)| {
            let top = r_top(f.a0().norm());
            Ok((i, cached(f, top)?))
        })
        .collect()
}

/// Harmonic member of a row's sharpness family with parameter `a`.
fn harmonic_member(spec: &FunctionalSpec, a: f64, k: f64) -> Result<HarmonicPair> {
    match spec.id {
        CatalogId::SubConvex | CatalogId::SubUniv => {
            let psi = spec.psi.as_ref().ok_or_else(|| Error::MissingParam {
                id: spec.id.as_str().to_string(),
                param: "psi",
            })?;
            HarmonicPair::scaled(psi.function().dilated(a)?, k, one())
        }
        _ => HarmonicPair::extremal(a, k, one()),
    }
}

fn kind_mismatch(id: CatalogId, expected: &'static str) -> Error {
    Error::KindMismatch {
        id: id.as_str(),
        expected,
    }
}

/// Sweeps `lhs - rhs` of a row over a family and the row's stated radius.
///
/// Harmonic rows run over `spec.k` when it is set and over
/// `grid.k_values` otherwise.
pub fn verify_grid(
    spec: &FunctionalSpec,
    family: &FamilySpec,
    grid: &GridSpec,
) -> Result<VerificationReport> {
    let started = Instant::now();
    grid.validate()?;
    let harmonic = spec.id.is_harmonic();
    let ks: Vec<Option<f64>> = match (harmonic, spec.k) {
        (true, Some(k)) => vec![Some(k)],
        (true, None) => grid.k_values.iter().map(|&k| Some(k)).collect(),
        (false, _) => vec![None],
    };
    let specs: Vec<FunctionalSpec> = ks.iter().map(|&k| with_k(spec, k)).collect();
    for s in &specs {
        s.validate()?;
    }
    let stated: Vec<StatedRadius> = specs
        .iter()
        .map(|s| s.stated_radius())
        .collect::<Result<_>>()?;

    let a_axis = axis(grid.a_points, grid.a_max);
    let mut members = Vec::new();
    let mut member_spec = Vec::new();
    for (idx, &k) in ks.iter().enumerate() {
        match (family, harmonic) {
            (FamilySpec::Moebius, false) => {
                for &a in &a_axis {
                    members.push(Member {
                        a,
                        k,
                        sample: None,
                        subject: Owned::Analytic(DiskFunction::moebius(a)?),
                    });
                    member_spec.push(idx);
                }
            }
            (FamilySpec::HarmonicExtremal, true) => {
                let k = k.expect("harmonic rows carry k");
                for &a in &a_axis {
                    members.push(Member {
                        a,
                        k: Some(k),
                        sample: None,
                        subject: Owned::Harmonic(harmonic_member(spec, a, k)?),
                    });
                    member_spec.push(idx);
                }
            }
            (
                FamilySpec::Blaschke {
                    samples,
                    max_degree,
                    seed,
                },
                _,
            ) => {
                if matches!(spec.id, CatalogId::SubConvex | CatalogId::SubUniv) {
                    return Err(kind_mismatch(spec.id, "harmonic-extremal family"));
                }
                let radius = stated[idx];
                for (i, f) in blaschke_members(*samples, *max_degree, *seed, |a0| radius.at(a0))? {
                    let a = f.a0().norm();
                    let subject = match k {
                        Some(k) => Owned::Harmonic(HarmonicPair::scaled(f, k, one())?),
                        None => Owned::Analytic(f),
                    };
                    members.push(Member {
                        a,
                        k,
                        sample: Some(i),
                        subject,
                    });
                    member_spec.push(idx);
                }
            }
            (FamilySpec::Moebius, true) => {
                return Err(kind_mismatch(spec.id, "harmonic-extremal family"))
            }
            (FamilySpec::HarmonicExtremal, false) => {
                return Err(kind_mismatch(spec.id, "analytic family"))
            }
        }
    }

    let rhs: Vec<Result<f64>> = members
        .par_iter()
        .zip(member_spec.par_iter())
        .map(|(m, &i)| specs[i].rhs(m.subject.subject()).map(|b| b.value))
        .collect();
    let outcomes = sweep(
        &members,
        grid.r_points,
        |i, m| {
            rhs[i].as_ref().map_err(Clone::clone)?;
            Ok(stated[member_spec[i]].at(m.subject.a0()))
        },
        |i, m, r| {
            let bound = rhs[i].as_ref().map_err(Clone::clone)?;
            Ok(specs[member_spec[i]].lhs(m.subject.subject(), r)? - bound)
        },
    );
    let theta = match spec.z_policy {
        crate::functional::ZPolicy::FixedAngle(t) => Some(t),
        crate::functional::ZPolicy::SupCircle => None,
    };
    let summary = reduce(&members, &outcomes, theta)?;

    let radii = ks
        .iter()
        .zip(&stated)
        .map(|(&k, s)| RadiusUsed {
            k,
            value: match s {
                StatedRadius::Fixed(r) => Some(r.value),
                StatedRadius::ReciprocalThreeMinusA0 => None,
            },
            provenance: s.provenance(),
        })
        .collect();

    Ok(VerificationReport {
        spec_id: spec.id.as_str().to_string(),
        family: family.label(),
        grid: GridExtent {
            a_points: grid.a_points,
            r_points: grid.r_points,
            a_range: [0.0, grid.a_max],
            members: members.len(),
            radii,
        },
        worst_margin: summary.worst.margin,
        argmax: summary.worst.point,
        peaks: summary.peaks,
        pass: summary.worst.margin <= grid.tolerance,
        tolerance: grid.tolerance,
        radius_provenance: stated[0].provenance(),
        lambda: spec.lambda_value(),
        evaluated: summary.evaluated,
        flagged: summary.flagged,
        equality_residual: None,
        runtime: started.elapsed(),
    })
}

/// The lemma bounds the row proofs rest on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Lemma {
    /// `S_r/π ≤ r²(1 - |a₀|²)²/(1 - |a₀|²r²)²` for `r ≤ 1/√2`.
    L32,
    /// `Σ_{n≥1}|a_n|rⁿ ≤ M(r)` or `N(r)` depending on whether `|a₀| ≥ r`.
    L34,
    /// `Σ_{n≥1}|a_n|rⁿ + (1/(1+|a₀|) + r/(1-r))Σ_{n≥1}|a_n|²r^{2n} ≤ (1-|a₀|²)r/(1-r)`.
    L35,
    /// `Σ|b_n|² rⁿ ≤ k² Σ|a_n|² rⁿ` for harmonic pairs.
    L51,
}

impl Lemma {
    pub const ALL: [Lemma; 4] = [Lemma::L32, Lemma::L34, Lemma::L35, Lemma::L51];

    pub fn as_str(self) -> &'static str {
        match self {
            Lemma::L32 => "L32",
            Lemma::L34 => "L34",
            Lemma::L35 => "L35",
            Lemma::L51 => "L51",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|l| l.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownId(s.to_string()))
    }

    pub fn r_max(self) -> f64 {
        match self {
            Lemma::L32 => L32_R_MAX,
            _ => ENVELOPE_R_MAX,
        }
    }

    /// `lhs - bound` of the lemma for one subject.
    fn margin(self, subject: &Owned, r: f64) -> Result<f64> {
        let a0 = subject.a0();
        match (self, subject) {
            (Lemma::L51, Owned::Harmonic(p)) => Ok(-p.lemma51_margin(r)?),
            (Lemma::L32, Owned::Analytic(f)) => {
                let b = 1.0 - a0 * a0;
                Ok(f.area_ratio(r)? - r * r * b * b / (1.0 - a0 * a0 * r * r).powi(2))
            }
            (Lemma::L34, Owned::Analytic(f)) => {
                let bound = if a0 >= r {
                    r * (1.0 - a0 * a0) / (1.0 - r * a0)
                } else {
                    r * (1.0 - a0 * a0).sqrt() / (1.0 - r * r).sqrt()
                };
                Ok(f.majorant_tail(r, 1)? - bound)
            }
            (Lemma::L35, Owned::Analytic(f)) => {
                let weight = 1.0 / (1.0 + a0) + r / (1.0 - r);
                Ok(f.majorant_tail(r, 1)? + weight * f.quadratic_sum(r, 1)?
                    - (1.0 - a0 * a0) * r / (1.0 - r))
            }
            _ => Err(Error::InvalidParam(format!(
                "{} does not apply to this subject",
                self.as_str()
            ))),
        }
    }
}

/// Worst envelope margin of a lemma over a family.
///
/// L32/L34/L35 take the Möbius or Blaschke family; L51 takes harmonic pairs
/// `(h, k(h - h(0)))` over `grid.k_values` with `h` from any family.
pub fn envelope_suite(
    lemma: Lemma,
    family: &FamilySpec,
    grid: &GridSpec,
) -> Result<VerificationReport> {
    let started = Instant::now();
    grid.validate()?;
    let r_max = lemma.r_max();
    let ks: Vec<Option<f64>> = match lemma {
        Lemma::L51 => grid.k_values.iter().map(|&k| Some(k)).collect(),
        _ => vec![None],
    };
    let bases: Vec<(f64, Option<usize>, DiskFunction)> = match family {
        FamilySpec::Moebius | FamilySpec::HarmonicExtremal => {
            if lemma != Lemma::L51 && *family == FamilySpec::HarmonicExtremal {
                return Err(Error::InvalidParam(format!(
                    "{} needs an analytic family",
                    lemma.as_str()
                )));
            }
            axis(grid.a_points, grid.a_max)
                .into_iter()
                .map(|a| Ok((a, None, DiskFunction::moebius(a)?)))
                .collect::<Result<_>>()?
        }
        FamilySpec::Blaschke {
            samples,
            max_degree,
            seed,
        } => blaschke_members(*samples, *max_degree, *seed, |_| r_max)?
            .into_iter()
            .map(|(i, f)| (f.a0().norm(), Some(i), f))
            .collect(),
    };
    let mut members = Vec::new();
    for &k in &ks {
        for (a, sample, f) in &bases {
            let subject = match k {
                Some(k) => Owned::Harmonic(HarmonicPair::scaled(f.clone(), k, one())?),
                None => Owned::Analytic(f.clone()),
            };
            members.push(Member {
                a: *a,
                k,
                sample: *sample,
                subject,
            });
        }
    }
    let outcomes = sweep(
        &members,
        grid.r_points,
        |_, _| Ok(r_max),
        |_, m, r| lemma.margin(&m.subject, r),
    );
    let summary = reduce(&members, &outcomes, None)?;
    let attained = matches!(
        (lemma, family),
        (Lemma::L32, FamilySpec::Moebius)
            | (
                Lemma::L51,
                FamilySpec::Moebius | FamilySpec::HarmonicExtremal
            )
    );
    Ok(VerificationReport {
        spec_id: lemma.as_str().to_string(),
        family: family.label(),
        grid: GridExtent {
            a_points: grid.a_points,
            r_points: grid.r_points,
            a_range: [0.0, grid.a_max],
            members: members.len(),
            radii: ks
                .iter()
                .map(|&k| RadiusUsed {
                    k,
                    value: Some(r_max),
                    provenance: Provenance::ClosedForm,
                })
                .collect(),
        },
        worst_margin: summary.worst.margin,
        argmax: summary.worst.point,
        peaks: summary.peaks,
        pass: summary.worst.margin <= grid.tolerance,
        tolerance: grid.tolerance,
        radius_provenance: Provenance::ClosedForm,
        lambda: None,
        evaluated: summary.evaluated,
        flagged: summary.flagged,
        equality_residual: attained.then_some(summary.max_abs),
        runtime: started.elapsed(),
    })
}

/// Equality check of a sharp row at its extremal parameter.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundaryEquality {
    pub id: SharpId,
    pub root: f64,
    pub lambda: f64,
    pub radius: f64,
    /// Closed-form residual at the recomputed root and λ.
    pub residual: f64,
    /// The same quantity through the series engine.
    pub series_residual: f64,
    pub printed_root: f64,
    pub printed_lambda: f64,
    /// Closed-form residual at the printed root and λ.
    pub residual_at_printed: f64,
    pub tolerance: f64,
    pub pass: bool,
}

fn catalog_row(id: SharpId) -> CatalogId {
    *CatalogId::ALL
        .iter()
        .find(|c| c.sharp() == Some(id))
        .expect("every sharp id has a catalog row")
}

/// `|residual(root, λ)|` of the closed form at both the recomputed and the
/// printed constants.
pub fn boundary_equality(id: SharpId) -> Result<BoundaryEquality> {
    let root = constants::reproduce(id.root_id())?.value;
    let lambda = constants::reproduce(id.lambda_id())?.value;
    let printed_root = constants::entry(id.root_id())?.printed;
    let printed_lambda = constants::entry(id.lambda_id())?.printed;
    let radius = id.extremal_radius(root);
    let residual = id.residual(root, lambda).abs();
    let residual_at_printed = id.residual(printed_root, printed_lambda).abs();
    let spec = FunctionalSpec::new(catalog_row(id)).with_lambda(lambda);
    let series_residual = spec.margin(&DiskFunction::moebius(root)?, radius)?.abs();
    let tolerance = match id {
        SharpId::A3 | SharpId::RefinedSqF2 => 1e-4,
        _ => 1e-5,
    };
    Ok(BoundaryEquality {
        id,
        root,
        lambda,
        radius,
        residual,
        series_residual,
        printed_root,
        printed_lambda,
        residual_at_printed,
        tolerance,
        pass: residual <= tolerance && residual_at_printed <= tolerance,
    })
}

/// How a row is pushed outside its regime.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Perturbation {
    /// Multiply the sharp λ by this factor; the radius stays at the stated one.
    LambdaScale(f64),
    /// Evaluate this far beyond the stated radius.
    RadiusExcess(f64),
    /// Evaluate beyond the stated radius along an explicit parameter sequence.
    AToOne {
        radius_excess: f64,
        sequence: Vec<f64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Witness {
    pub a: f64,
    pub r: f64,
    pub k: Option<f64>,
    pub margin: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeResult {
    pub spec_id: String,
    pub perturbation: Perturbation,
    /// The probe family; its parameter `a` tends to 1 at the extremum.
    pub family: String,
    pub lambda: Option<f64>,
    pub violated: bool,
    pub threshold: f64,
    /// The largest margin found, violating or not.
    pub witness: Witness,
    pub evaluated: usize,
}

fn probe_family(id: CatalogId) -> &'static str {
    match id {
        CatalogId::HarmI1 | CatalogId::HarmI2 => "extremal pair (f_a, k f_a)",
        CatalogId::HarmJ => "half-plane pair h = (1 - a) - 2a z/(1 - z)",
        CatalogId::SubConvex | CatalogId::SubUniv => "dilated subordinator h = psi(a z)",
        _ => "moebius f_a",
    }
}

fn probe_subject(spec: &FunctionalSpec, a: f64) -> Result<Owned> {
    if !spec.id.is_harmonic() {
        return Ok(Owned::Analytic(DiskFunction::moebius(a)?));
    }
    let k = spec.k.ok_or_else(|| Error::MissingParam {
        id: spec.id.as_str().to_string(),
        param: "k",
    })?;
    if !(0.0..1.0).contains(&a) {
        return Err(Error::Domain {
            what: "a",
            value: a,
        });
    }
    let pair = match spec.id {
        CatalogId::HarmJ => {
            let h = DiskFunction::half_plane()
                .affine(Complex64::new(-2.0 * a, 0.0), Complex64::new(1.0 + a, 0.0));
            HarmonicPair::scaled(h, k, one())?
        }
        _ => harmonic_member(spec, a, k)?,
    };
    Ok(Owned::Harmonic(pair))
}

fn a_to_one() -> impl Iterator<Item = f64> {
    A_TO_ONE_EXPONENTS.map(|j| 1.0 - 10f64.powi(-j))
}

/// Searches the row's sharpness family for a point where the perturbed
/// inequality fails.
///
/// Candidates are a `10⁻⁴` grid around the extremal root (λ probes), or a
/// coarse grid together with `a = 1 - 10⁻ʲ`, `j = 1..8` (radius probes);
/// the best candidate is refined by golden-section search between its
/// neighbours.
pub fn sharpness_probe(spec: &FunctionalSpec, perturbation: &Perturbation) -> Result<ProbeResult> {
    spec.validate()?;
    let stated = spec.stated_radius()?;
    let (probe_spec, excess, mut candidates) = match perturbation {
        Perturbation::LambdaScale(scale) => {
            if !(*scale > 0.0) {
                return Err(Error::InvalidParam(format!(
                    "lambda scale {scale} must be positive"
                )));
            }
            let sharp = spec
                .id
                .sharp()
                .ok_or_else(|| Error::InvalidParam(format!("{} has no λ to scale", spec.id)))?;
            let lambda = spec.lambda_value().expect("sharp rows carry λ");
            let root = constants::reproduce(sharp.root_id())?.value;
            let steps = (ROOT_WINDOW / ROOT_STEP).round() as i64;
            let around = (-steps..=steps)
                .map(|i| root + i as f64 * ROOT_STEP)
                .filter(|a| (0.0..1.0).contains(a))
                .collect();
            (spec.clone().with_lambda(lambda * scale), 0.0, around)
        }
        Perturbation::RadiusExcess(excess) => {
            if !(*excess >= 0.0) {
                return Err(Error::InvalidParam(format!(
                    "radius excess {excess} is negative"
                )));
            }
            let grid = GridSpec::default();
            let mut c = axis(grid.a_points, grid.a_max);
            c.extend(a_to_one());
            if let Some(sharp) = spec.id.sharp() {
                let root = constants::reproduce(sharp.root_id())?.value;
                c.extend((-10..=10).map(|i| root + i as f64 * ROOT_STEP));
            }
            (spec.clone(), *excess, c)
        }
        Perturbation::AToOne {
            radius_excess,
            sequence,
        } => {
            if !(*radius_excess >= 0.0) {
                return Err(Error::InvalidParam(format!(
                    "radius excess {radius_excess} is negative"
                )));
            }
            if sequence.is_empty() {
                return Err(Error::InvalidParam("empty parameter sequence".into()));
            }
            (spec.clone(), *radius_excess, sequence.clone())
        }
    };
    candidates.retain(|a| (0.0..1.0).contains(a));
    candidates.sort_by(f64::total_cmp);
    candidates.dedup();

    let rhs_cache = |subject: &Owned| probe_spec.rhs(subject.subject()).map(|b| b.value);
    let eval = |a: f64| -> Result<(f64, f64)> {
        let subject = probe_subject(&probe_spec, a)?;
        let r = stated.at(subject.a0()) + excess;
        Ok((
            r,
            probe_spec.lhs(subject.subject(), r)? - rhs_cache(&subject)?,
        ))
    };
    let values: Vec<Option<(f64, f64)>> = candidates.par_iter().map(|&a| eval(a).ok()).collect();
    let evaluated = values.iter().filter(|v| v.is_some()).count();
    let mut best: Option<(usize, f64, f64)> = None;
    for (i, v) in values.iter().enumerate() {
        if let Some((r, m)) = *v {
            if m.is_finite() && best.is_none_or(|(_, _, bm)| m > bm) {
                best = Some((i, r, m));
            }
        }
    }
    let (i, r, margin) =
        best.ok_or_else(|| Error::InvalidParam("no probe candidate could be evaluated".into()))?;
    let mut witness = Witness {
        a: candidates[i],
        r,
        k: probe_spec.k,
        margin,
    };
    if !matches!(perturbation, Perturbation::AToOne { .. }) {
        let lo = candidates[i.saturating_sub(1)];
        let hi = candidates[(i + 1).min(candidates.len() - 1)];
        if hi > lo {
            let (a, m) = golden_max(
                |a| {
                    eval(a)
                        .map(|(_, m)| m)
                        .ok()
                        .filter(|m| m.is_finite())
                        .unwrap_or(f64::NEG_INFINITY)
                },
                lo,
                hi,
                REFINE_ITERATIONS,
            );
            if m > witness.margin {
                let (r, m) = eval(a)?;
                witness = Witness {
                    a,
                    r,
                    k: probe_spec.k,
                    margin: m,
                };
            }
        }
    }
    Ok(ProbeResult {
        spec_id: spec.id.as_str().to_string(),
        perturbation: perturbation.clone(),
        family: probe_family(spec.id).to_string(),
        lambda: probe_spec.lambda_value(),
        violated: witness.margin > PROBE_THRESHOLD,
        threshold: PROBE_THRESHOLD,
        witness,
        evaluated,
    })
}

/// Branch functions maximized inside the proofs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// The small-`|a₀|` branch of the first main inequality, `t ∈ [0, 1/5]`.
    #[serde(rename = "A1_star")]
    A1Star,
}

impl Branch {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "A1_star" | "a1-star" | "a1_star" => Ok(Branch::A1Star),
            _ => Err(Error::UnknownId(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BranchMaximum {
    pub id: Branch,
    pub lambda: f64,
    pub t_star: f64,
    pub value: f64,
    /// The maximum as printed with the proof.
    pub printed_value: f64,
    pub below_one: bool,
}

/// Dense grid on `[0, 1/5]` followed by golden-section refinement.
pub fn branch_maximize(id: Branch) -> BranchMaximum {
    let Branch::A1Star = id;
    let lambda = sharp_lambda(SharpId::A1);
    let f = |t: f64| extremal::a1_small_branch(t, lambda);
    let ts = axis(BRANCH_GRID, 0.2);
    let mut best = 0;
    for (i, &t) in ts.iter().enumerate() {
        if f(t) > f(ts[best]) {
            best = i;
        }
    }
    let lo = ts[best.saturating_sub(1)];
    let hi = ts[(best + 1).min(ts.len() - 1)];
    let (t_star, value) = golden_max(f, lo, hi, REFINE_ITERATIONS);
    BranchMaximum {
        id,
        lambda,
        t_star,
        value,
        printed_value: PRINTED_BRANCH_MAXIMUM,
        below_one: value < 1.0,
    }
}
