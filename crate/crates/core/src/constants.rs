//! Sharp constants and radii, recomputed from their defining equations.
//!
//! Every root is found by [`find_root`] on a polynomial entered once as an
//! ascending coefficient list; every λ is evaluated from its formula at the
//! recomputed root. Printed reference values are stored only for comparison.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremal::SharpId;
pub use crate::search::{find_root, RootResult};

/// Bracket width for catalog roots.
pub const ROOT_TOL: f64 = 1e-15;

/// Horner evaluation of `Σ c_i t^i` (ascending coefficients).
pub fn horner(coeffs: &[f64], t: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c)
}

pub const POLY_ALPHA: [f64; 7] = [32500.0, -44845.0, -22435.0, -370.0, 14.0, -1.0, 1.0];
pub const POLY_BETA: [f64; 9] = [81.0, -126.0, -54.0, 14.0, -12.0, 2.0, 2.0, -2.0, -1.0];
pub const POLY_GAMMA: [f64; 13] = [
    55647.0, -212544.0, 296244.0, -200754.0, 61377.0, 5198.0, -10420.0, 972.0, 960.0, 408.0,
    -420.0, 100.0, -8.0,
];
pub const POLY_AREA_SQ: [f64; 6] = [-405.0, 473.0, 402.0, 38.0, 3.0, 1.0];
pub const POLY_AREA_SQ_F2: [f64; 5] = [-513.0, 910.0, 80.0, 2.0, 1.0];
pub const POLY_REFINED_SQ: [f64; 7] = [1458.0, -1756.0, -1218.0, -40.0, 14.0, 4.0, 2.0];
pub const POLY_REFINED_SQ_F2: [f64; 9] = [
    -524880.0, 2344464.0, -4244238.0, 4132944.0, -2361960.0, 798660.0, -154386.0, 17172.0, -1296.0,
];

pub fn lambda_a1(t: f64) -> f64 {
    (25.0 - t * t) * horner(&[11125.0, -3810.0, -2300.0, -30.0, 7.0], t)
        / (2500.0 * (1.0 + t).powi(3) * (3.0 - 5.0 * t))
}

pub fn lambda_a2(t: f64) -> f64 {
    32.0 * horner(&[27.0, 18.0, 27.0, -28.0, -15.0, -6.0, -7.0], t)
        / (81.0 * (1.0 + t).powi(3) * (3.0 - 5.0 * t))
}

pub fn lambda_a3(t: f64) -> f64 {
    let num = horner(
        &[
            -13581.0, 22491.0, -14085.0, -2584.0, 8565.0, -5130.0, 903.0, 636.0, -324.0, 40.0,
        ],
        t,
    );
    num / (8.0 * (3.0 - t).powi(3) * (1.0 + t).powi(2) * (1.0 - 7.0 * t + 4.0 * t * t))
}

pub fn lambda_area_sq(t: f64) -> f64 {
    4.0 * horner(&[486.0, -261.0, -324.0, 2.0, 30.0, 3.0], t)
        / (81.0 * (1.0 + t).powi(3) * (3.0 - 5.0 * t))
}

pub fn lambda_area_sq_f2(t: f64) -> f64 {
    horner(&[-81.0, 1044.0, 54.0, -116.0, -5.0], t) / (162.0 * (t + 1.0).powi(2) * (2.0 * t - 1.0))
}

pub fn lambda_refined_sq(t: f64) -> f64 {
    horner(&[-2673.0, 2502.0, 2025.0, -332.0, -255.0, 6.0, 7.0], t)
        / (162.0 * (1.0 + t).powi(3) * (5.0 * t - 3.0))
}

/// The λ formula exactly as printed for the squared-area refinement at
/// radius `1/(3 - |a₀|)`. It does not reproduce its own printed value; the
/// catalog uses the boundary-equality route instead.
pub fn lambda_refined_sq_f2_printed(t: f64) -> f64 {
    horner(&[-80919.0, 119556.0, -57591.0, 11664.0, -1620.0], t)
        / (8.0 * (t - 3.0).powi(2) * (1.0 + t).powi(2) * horner(&[-1.0, 29.0, -33.0, 9.0], t))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstantKind {
    Root,
    FormulaAtRoot,
    ClosedForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ClosedForm,
    CertifiedRoot,
}

#[derive(Debug, Clone, Copy)]
enum LambdaRoute {
    Formula,
    Equality,
}

#[derive(Debug, Clone, Copy)]
enum Definition {
    Root(&'static [f64]),
    Lambda {
        root: &'static str,
        formula: fn(f64) -> f64,
        sharp: SharpId,
        primary: LambdaRoute,
    },
    Closed(fn() -> f64),
}

/// One catalog constant: how it is defined and what was printed for it.
#[derive(Debug, Clone, Serialize)]
pub struct ConstantEntry {
    pub id: &'static str,
    pub kind: ConstantKind,
    pub defining: &'static str,
    pub bracket: [f64; 2],
    pub printed: f64,
    pub printed_digits: u32,
    pub tolerance: f64,
    pub source: &'static str,
    #[serde(skip)]
    definition: Definition,
}

fn one_seventh() -> f64 {
    1.0 / 7.0
}

const UNIT: [f64; 2] = [0.0, 1.0];

static CATALOG: [ConstantEntry; 23] = [
    ConstantEntry {
        id: "alpha",
        kind: ConstantKind::Root,
        defining: "32500-44845t-22435t^2-370t^3+14t^4-t^5+t^6",
        bracket: UNIT,
        printed: 0.564084,
        printed_digits: 6,
        tolerance: 1e-6,
        source: "extremal parameter of the first main inequality (|f(z)-a0| and S_r/pi)",
        definition: Definition::Root(&POLY_ALPHA),
    },
    ConstantEntry {
        id: "lambda_A1",
        kind: ConstantKind::FormulaAtRoot,
        defining: "(25-t^2)(11125-3810t-2300t^2-30t^3+7t^4)/(2500(1+t)^3(3-5t)) at t=alpha",
        bracket: UNIT,
        printed: 118.383318,
        printed_digits: 9,
        tolerance: 1e-4,
        source: "sharp weight of (S_r/pi)^2 in the first main inequality",
        definition: Definition::Lambda {
            root: "alpha",
            formula: lambda_a1,
            sharp: SharpId::A1,
            primary: LambdaRoute::Formula,
        },
    },
    ConstantEntry {
        id: "beta",
        kind: ConstantKind::Root,
        defining: "81-126t-54t^2+14t^3-12t^4+2t^5+2t^6-2t^7-t^8",
        bracket: UNIT,
        printed: 0.531615,
        printed_digits: 6,
        tolerance: 1e-6,
        source: "extremal parameter of the second main inequality (S_r/(pi-S_r), r<=1/3)",
        definition: Definition::Root(&POLY_BETA),
    },
    ConstantEntry {
        id: "lambda_A2",
        kind: ConstantKind::FormulaAtRoot,
        defining: "32(27+18t+27t^2-28t^3-15t^4-6t^5-7t^6)/(81(1+t)^3(3-5t)) at t=beta",
        bracket: UNIT,
        printed: 12.342793,
        printed_digits: 8,
        tolerance: 1e-4,
        source: "sharp weight of X^2 in the second main inequality",
        definition: Definition::Lambda {
            root: "beta",
            formula: lambda_a2,
            sharp: SharpId::A2,
            primary: LambdaRoute::Formula,
        },
    },
    ConstantEntry {
        id: "gamma",
        kind: ConstantKind::Root,
        defining: "Q(t)=55647-212544t+296244t^2-200754t^3+61377t^4+5198t^5-10420t^6+972t^7+960t^8+408t^9-420t^10+100t^11-8t^12",
        bracket: UNIT,
        printed: 0.571317,
        printed_digits: 6,
        tolerance: 1e-6,
        source: "extremal parameter of the third main inequality (|a0|^2, r<=1/(3-|a0|))",
        definition: Definition::Root(&POLY_GAMMA),
    },
    ConstantEntry {
        id: "lambda_A3",
        kind: ConstantKind::FormulaAtRoot,
        defining: "(-13581+22491t-14085t^2-2584t^3+8565t^4-5130t^5+903t^6+636t^7-324t^8+40t^9)/(8(3-t)^3(1+t)^2(1-7t+4t^2)) at t=gamma",
        bracket: UNIT,
        printed: 10.787939,
        printed_digits: 8,
        tolerance: 1e-4,
        source: "sharp weight of X^2 in the third main inequality",
        definition: Definition::Lambda {
            root: "gamma",
            formula: lambda_a3,
            sharp: SharpId::A3,
            primary: LambdaRoute::Formula,
        },
    },
    ConstantEntry {
        id: "a_area_sq",
        kind: ConstantKind::Root,
        defining: "-405+473t+402t^2+38t^3+3t^4+t^5",
        bracket: UNIT,
        printed: 0.567284,
        printed_digits: 6,
        tolerance: 1e-4,
        source: "extremal parameter of M_f + 16/9 S_r/pi + lambda (S_r/pi)^2, r<=1/3",
        definition: Definition::Root(&POLY_AREA_SQ),
    },
    ConstantEntry {
        id: "lambda_area_sq",
        kind: ConstantKind::FormulaAtRoot,
        defining: "4(486-261t-324t^2+2t^3+30t^4+3t^5)/(81(1+t)^3(3-5t)) at t=a_area_sq",
        bracket: UNIT,
        printed: 18.6095,
        printed_digits: 6,
        tolerance: 1e-4,
        source: "sharp weight of (S_r/pi)^2 added to M_f + 16/9 S_r/pi",
        definition: Definition::Lambda {
            root: "a_area_sq",
            formula: lambda_area_sq,
            sharp: SharpId::AreaSq,
            primary: LambdaRoute::Formula,
        },
    },
    ConstantEntry {
        id: "a_area_sq_f2",
        kind: ConstantKind::Root,
        defining: "-513+910t+80t^2+2t^3+t^4",
        bracket: UNIT,
        printed: 0.537869,
        printed_digits: 6,
        tolerance: 1e-4,
        source: "extremal parameter of |f(z)|^2 + tail + 16/9 S_r/pi + lambda (S_r/pi)^2",
        definition: Definition::Root(&POLY_AREA_SQ_F2),
    },
    ConstantEntry {
        id: "lambda_area_sq_f2",
        kind: ConstantKind::FormulaAtRoot,
        defining: "(-81+1044t+54t^2-116t^3-5t^4)/(162(t+1)^2(2t-1)) at t=a_area_sq_f2",
        bracket: UNIT,
        printed: 16.4618,
        printed_digits: 6,
        tolerance: 1e-4,
        source: "sharp weight of (S_r/pi)^2 in the |f(z)|^2 variant",
        definition: Definition::Lambda {
            root: "a_area_sq_f2",
            formula: lambda_area_sq_f2,
            sharp: SharpId::AreaSqF2,
            primary: LambdaRoute::Formula,
        },
    },
    ConstantEntry {
        id: "a_refined_sq",
        kind: ConstantKind::Root,
        defining: "2t^6+4t^5+14t^4-40t^3-1218t^2-1756t+1458",
        bracket: UNIT,
        printed: 0.587459,
        printed_digits: 6,
        tolerance: 1e-4,
        source: "extremal parameter of the refined sum + 8/9 S_r/pi + lambda (S_r/pi)^2",
        definition: Definition::Root(&POLY_REFINED_SQ),
    },
    ConstantEntry {
        id: "lambda_refined_sq",
        kind: ConstantKind::FormulaAtRoot,
        defining: "(-2673+2502t+2025t^2-332t^3-255t^4+6t^5+7t^6)/(162(1+t)^3(5t-3)) at t=a_refined_sq",
        bracket: UNIT,
        printed: 14.796883,
        printed_digits: 8,
        tolerance: 1e-4,
        source: "sharp weight of (S_r/pi)^2 in the refined sum at r<=1/3",
        definition: Definition::Lambda {
            root: "a_refined_sq",
            formula: lambda_refined_sq,
            sharp: SharpId::RefinedSq,
            primary: LambdaRoute::Formula,
        },
    },
    ConstantEntry {
        id: "a_refined_sq_f2",
        kind: ConstantKind::Root,
        defining: "-1296t^8+17172t^7-154386t^6+798660t^5-2361960t^4+4132944t^3-4244238t^2+2344464t-524880",
        bracket: UNIT,
        printed: 0.638302,
        printed_digits: 6,
        tolerance: 1e-4,
        source: "extremal parameter of the |a0|^2 refined sum at r<=1/(3-|a0|)",
        definition: Definition::Root(&POLY_REFINED_SQ_F2),
    },
    ConstantEntry {
        id: "lambda_refined_sq_f2",
        kind: ConstantKind::FormulaAtRoot,
        defining: "-base(t)/x(t)^2, base and x the closed forms of f_t at r=1/(3-t), t=a_refined_sq_f2",
        bracket: UNIT,
        printed: 13.966088,
        printed_digits: 8,
        tolerance: 1e-4,
        source: "sharp weight of (S_r/pi)^2 in the |a0|^2 refined sum",
        definition: Definition::Lambda {
            root: "a_refined_sq_f2",
            formula: lambda_refined_sq_f2_printed,
            sharp: SharpId::RefinedSqF2,
            primary: LambdaRoute::Equality,
        },
    },
    ConstantEntry {
        id: "sqrt17",
        kind: ConstantKind::Root,
        defining: "2r^2+3r-1",
        bracket: UNIT,
        printed: 0.280_776_406_404_415_1,
        printed_digits: 16,
        tolerance: 1e-12,
        source: "(sqrt(17)-3)/4, radius for |f(z)|+|f'(z)||z| + tail",
        definition: Definition::Root(&[-1.0, 3.0, 2.0]),
    },
    ConstantEntry {
        id: "rf_univ",
        kind: ConstantKind::Root,
        defining: "r^2-10r+1",
        bracket: UNIT,
        printed: 0.101_020_514_433_644_24,
        printed_digits: 16,
        tolerance: 1e-12,
        source: "5-2sqrt(6), Bohr-Rogosinski radius for subordination to a univalent map",
        definition: Definition::Root(&[1.0, -10.0, 1.0]),
    },
    ConstantEntry {
        id: "rf_conv",
        kind: ConstantKind::Root,
        defining: "5r-1",
        bracket: UNIT,
        printed: 0.2,
        printed_digits: 16,
        tolerance: 1e-12,
        source: "1/5, Bohr-Rogosinski radius for subordination to a convex map",
        definition: Definition::Root(&[-1.0, 5.0]),
    },
    ConstantEntry {
        id: "sqrt5_minus_2",
        kind: ConstantKind::Root,
        defining: "r^2+4r-1",
        bracket: UNIT,
        printed: 0.236_067_977_499_789_7,
        printed_digits: 16,
        tolerance: 1e-12,
        source: "sqrt(5)-2, Bohr-Rogosinski radius R_1 and harmonic r2(1)",
        definition: Definition::Root(&[-1.0, 4.0, 1.0]),
    },
    ConstantEntry {
        id: "r1_limit",
        kind: ConstantKind::Root,
        defining: "3r^2+6r-1",
        bracket: UNIT,
        printed: 0.154_700_538_379_251_46,
        printed_digits: 16,
        tolerance: 1e-12,
        source: "(2sqrt(3)-3)/3, harmonic radius r1(k) as k -> 1",
        definition: Definition::Root(&[-1.0, 6.0, 3.0]),
    },
    ConstantEntry {
        id: "one_seventh",
        kind: ConstantKind::ClosedForm,
        defining: "(K+1)/(7K+3) as K -> infinity",
        bracket: UNIT,
        printed: 0.142_857_142_857_142_85,
        printed_digits: 16,
        tolerance: 1e-15,
        source: "sharp radius for sense-preserving harmonic maps with Re h <= 1",
        definition: Definition::Closed(one_seventh),
    },
    ConstantEntry {
        id: "bohr",
        kind: ConstantKind::Root,
        defining: "3r-1",
        bracket: UNIT,
        printed: 0.333_333_333_333_333_3,
        printed_digits: 16,
        tolerance: 1e-15,
        source: "classical Bohr radius 1/3",
        definition: Definition::Root(&[-1.0, 3.0]),
    },
    ConstantEntry {
        id: "harm_bohr_k1",
        kind: ConstantKind::ClosedForm,
        defining: "(K+1)/(5K+1) at K=1",
        bracket: UNIT,
        printed: 1.0 / 3.0,
        printed_digits: 16,
        tolerance: 1e-15,
        source: "Bohr radius for K-quasiconformal harmonic maps, conformal case",
        definition: Definition::Closed(harm_bohr_k1),
    },
    ConstantEntry {
        id: "r_u_limit",
        kind: ConstantKind::Root,
        defining: "8r+4r sqrt(1+r)-(1-r)^2",
        bracket: UNIT,
        printed: 0.071_080_076_6,
        printed_digits: 9,
        tolerance: 1e-9,
        source: "harmonic subordination radius r_u(k) as k -> 1",
        definition: Definition::Closed(r_u_limit),
    },
];

fn harm_bohr_k1() -> f64 {
    2.0 / 6.0
}

fn r_u_limit() -> f64 {
    radius_r_u(1.0).map(|r| r.value).unwrap_or(f64::NAN)
}

pub fn catalog() -> &'static [ConstantEntry] {
    &CATALOG
}

pub fn entry(id: &str) -> Result<&'static ConstantEntry> {
    CATALOG
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownId(id.to_string()))
}

/// A value obtained by a second, independent route.
#[derive(Debug, Clone, Serialize)]
pub struct Alternate {
    pub route: &'static str,
    pub value: f64,
}

/// Outcome of recomputing one catalog constant.
#[derive(Debug, Clone, Serialize)]
pub struct Reproduction {
    pub id: &'static str,
    pub kind: ConstantKind,
    pub value: f64,
    pub printed: f64,
    pub delta: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// `|defining(value)|` for roots, the boundary residual for λ values.
    pub residual: Option<f64>,
    /// The recomputed root a λ was evaluated at.
    pub root: Option<f64>,
    pub alternate: Option<Alternate>,
    /// The primary route evaluated at the printed (rounded) root.
    pub value_at_printed_root: Option<f64>,
}

/// Recompute the root of a catalog polynomial.
pub fn root_of(entry: &ConstantEntry) -> Result<RootResult> {
    match entry.definition {
        Definition::Root(poly) => find_root(
            |t| horner(poly, t),
            entry.bracket[0],
            entry.bracket[1],
            ROOT_TOL,
        ),
        _ => Err(Error::InvalidParam(format!(
            "`{}` is not a root entry",
            entry.id
        ))),
    }
}

/// Recompute a catalog constant from its definition, never from `printed`.
pub fn reproduce(id: &str) -> Result<Reproduction> {
    let e = entry(id)?;
    let mut out = Reproduction {
        id: e.id,
        kind: e.kind,
        value: f64::NAN,
        printed: e.printed,
        delta: f64::NAN,
        tolerance: e.tolerance,
        pass: false,
        residual: None,
        root: None,
        alternate: None,
        value_at_printed_root: None,
    };
    match e.definition {
        Definition::Root(_) => {
            let root = root_of(e)?;
            out.value = root.value;
            out.residual = Some(root.residual);
        }
        Definition::Closed(f) => out.value = f(),
        Definition::Lambda {
            root,
            formula,
            sharp,
            primary,
        } => {
            let root_entry = entry(root)?;
            let t = root_of(root_entry)?.value;
            let by_formula = formula(t);
            let by_equality = sharp.equality_lambda(t);
            let p = root_entry.printed;
            let (value, alternate, at_printed) = match primary {
                LambdaRoute::Formula => (
                    by_formula,
                    Alternate {
                        route: "boundary-equality",
                        value: by_equality,
                    },
                    formula(p),
                ),
                LambdaRoute::Equality => (
                    by_equality,
                    Alternate {
                        route: "printed-formula",
                        value: by_formula,
                    },
                    sharp.equality_lambda(p),
                ),
            };
            out.value = value;
            out.root = Some(t);
            out.residual = Some(sharp.residual(t, value).abs());
            out.alternate = Some(alternate);
            out.value_at_printed_root = Some(at_printed);
        }
    }
    out.delta = (out.value - out.printed).abs();
    out.pass = out.delta <= out.tolerance;
    Ok(out)
}

/// Recompute every catalog constant.
pub fn reproduce_all() -> Result<Vec<Reproduction>> {
    CATALOG.iter().map(|e| reproduce(e.id)).collect()
}

/// Parameters selecting one radius.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct RadiusParams {
    pub n: Option<u32>,
    pub k: Option<f64>,
    /// `K ≥ 1`, possibly infinite.
    pub big_k: Option<f64>,
    pub a0: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Radius {
    pub value: f64,
    pub provenance: Provenance,
    /// `|defining(value)|`; zero for closed forms.
    pub residual: f64,
}

impl Radius {
    fn closed(value: f64) -> Self {
        Self {
            value,
            provenance: Provenance::ClosedForm,
            residual: 0.0,
        }
    }

    fn certified(root: RootResult) -> Self {
        Self {
            value: root.value,
            provenance: Provenance::CertifiedRoot,
            residual: root.residual,
        }
    }
}

pub const RADIUS_IDS: [&str; 9] = [
    "bohr",
    "rogosinski",
    "rogosinski_sq",
    "r1",
    "r2",
    "r_u",
    "harm_j",
    "harm_bohr",
    "refined_a0",
];

/// `k = (K - 1)/(K + 1)`, with `K = ∞` giving 1.
pub fn k_from_big_k(big_k: f64) -> Result<f64> {
    if !(big_k >= 1.0) {
        return Err(Error::InvalidParam(format!(
            "K = {big_k} must be at least 1"
        )));
    }
    Ok(if big_k.is_infinite() {
        1.0
    } else {
        (big_k - 1.0) / (big_k + 1.0)
    })
}

fn check_k(k: f64) -> Result<f64> {
    if (0.0..=1.0).contains(&k) {
        Ok(k)
    } else {
        Err(Error::InvalidParam(format!("k = {k} not in [0, 1]")))
    }
}

fn check_n(n: u32) -> Result<i32> {
    if n >= 1 && n <= i32::MAX as u32 {
        Ok(n as i32)
    } else {
        Err(Error::InvalidParam(format!("N = {n} must be at least 1")))
    }
}

/// Root of `2(1+r)r^N - (1-r)²`.
pub fn radius_rogosinski(n: u32) -> Result<Radius> {
    let n = check_n(n)?;
    find_root(
        |r| 2.0 * (1.0 + r) * r.powi(n) - (1.0 - r).powi(2),
        0.0,
        1.0,
        ROOT_TOL,
    )
    .map(Radius::certified)
}

/// Root of `(1+r)r^N - (1-r)²`.
pub fn radius_rogosinski_sq(n: u32) -> Result<Radius> {
    let n = check_n(n)?;
    find_root(
        |r| (1.0 + r) * r.powi(n) - (1.0 - r).powi(2),
        0.0,
        1.0,
        ROOT_TOL,
    )
    .map(Radius::certified)
}

/// `r₁(k)`: root of `2(k+1)r(1+r) - (1-r)²`.
pub fn radius_r1(k: f64) -> Result<Radius> {
    let k = check_k(k)?;
    find_root(
        |r| 2.0 * (k + 1.0) * r * (1.0 + r) - (1.0 - r).powi(2),
        0.0,
        1.0,
        ROOT_TOL,
    )
    .map(Radius::certified)
}

/// `r₂(k)`: root of `(k+1)r(1+r) - (1-r)²`.
pub fn radius_r2(k: f64) -> Result<Radius> {
    let k = check_k(k)?;
    find_root(
        |r| (k + 1.0) * r * (1.0 + r) - (1.0 - r).powi(2),
        0.0,
        1.0,
        ROOT_TOL,
    )
    .map(Radius::certified)
}

/// `r_u(k)`: root of `8r + 4kr√(1+r) - (1-r)²`.
pub fn radius_r_u(k: f64) -> Result<Radius> {
    let k = check_k(k)?;
    find_root(
        |r| 8.0 * r + 4.0 * k * r * (1.0 + r).sqrt() - (1.0 - r).powi(2),
        0.0,
        1.0,
        ROOT_TOL,
    )
    .map(Radius::certified)
}

/// `(K+1)/(7K+3) = 1/(5+2k)`.
pub fn radius_harm_j(k: f64) -> Result<Radius> {
    let k = check_k(k)?;
    Ok(Radius::closed(1.0 / (5.0 + 2.0 * k)))
}

/// `(K+1)/(7K+3)` in terms of `K`; `K = ∞` gives 1/7.
pub fn radius_harm_j_big_k(big_k: f64) -> Result<Radius> {
    k_from_big_k(big_k)?;
    Ok(Radius::closed(if big_k.is_infinite() {
        1.0 / 7.0
    } else {
        (big_k + 1.0) / (7.0 * big_k + 3.0)
    }))
}

/// `(K+1)/(5K+1)`; `K = ∞` gives 1/5.
pub fn radius_harm_bohr(big_k: f64) -> Result<Radius> {
    k_from_big_k(big_k)?;
    Ok(Radius::closed(if big_k.is_infinite() {
        0.2
    } else {
        (big_k + 1.0) / (5.0 * big_k + 1.0)
    }))
}

/// `1/(3 - |a₀|)`.
pub fn radius_refined_a0(a0: f64) -> Result<Radius> {
    if !(0.0..1.0).contains(&a0) {
        return Err(Error::InvalidParam(format!("|a0| = {a0} not in [0, 1)")));
    }
    Ok(Radius::closed(1.0 / (3.0 - a0)))
}

fn k_param(id: &str, params: &RadiusParams) -> Result<f64> {
    match (params.k, params.big_k) {
        (Some(k), _) => Ok(k),
        (None, Some(big_k)) => k_from_big_k(big_k),
        (None, None) => Err(Error::MissingParam {
            id: id.to_string(),
            param: "k",
        }),
    }
}

/// Radius by identifier (see [`RADIUS_IDS`]).
pub fn radius(id: &str, params: &RadiusParams) -> Result<Radius> {
    let need_n = || {
        params.n.ok_or_else(|| Error::MissingParam {
            id: id.to_string(),
            param: "N",
        })
    };
    match id {
        "bohr" => Ok(Radius::closed(1.0 / 3.0)),
        "rogosinski" => radius_rogosinski(need_n()?),
        "rogosinski_sq" => radius_rogosinski_sq(need_n()?),
        "r1" => radius_r1(k_param(id, params)?),
        "r2" => radius_r2(k_param(id, params)?),
        "r_u" => radius_r_u(k_param(id, params)?),
        "harm_j" => match (params.big_k, params.k) {
            (Some(big_k), _) => radius_harm_j_big_k(big_k),
            (None, Some(k)) => radius_harm_j(k),
            (None, None) => Err(Error::MissingParam {
                id: id.to_string(),
                param: "K",
            }),
        },
        "harm_bohr" => match (params.big_k, params.k) {
            (Some(big_k), _) => radius_harm_bohr(big_k),
            (None, Some(k)) => {
                let k = check_k(k)?;
                Ok(Radius::closed(1.0 / (3.0 + 2.0 * k)))
            }
            (None, None) => Err(Error::MissingParam {
                id: id.to_string(),
                param: "K",
            }),
        },
        "refined_a0" => radius_refined_a0(params.a0.ok_or_else(|| Error::MissingParam {
            id: id.to_string(),
            param: "a0",
        })?),
        other => Err(Error::UnknownId(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Parse a printed polynomial such as `55647-212544t+296244t^2` into
    /// ascending coefficients.
    fn parse_poly(text: &str) -> Vec<f64> {
        let mut coeffs: Vec<f64> = Vec::new();
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut terms = Vec::new();
        let mut current = String::new();
        for ch in cleaned.chars() {
            if (ch == '+' || ch == '-') && !current.is_empty() {
                terms.push(std::mem::take(&mut current));
            }
            current.push(ch);
        }
        terms.push(current);
        for term in terms {
            let (coef, power) = match term.find('t') {
                None => (term.parse::<f64>().unwrap(), 0usize),
                Some(pos) => {
                    let head = &term[..pos];
                    let c = match head {
                        "" | "+" => 1.0,
                        "-" => -1.0,
                        h => h.parse::<f64>().unwrap(),
                    };
                    let p = match term[pos + 1..].strip_prefix('^') {
                        Some(e) => e.parse().unwrap(),
                        None => 1,
                    };
                    (c, p)
                }
            };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, 0.0);
            }
            coeffs[power] += coef;
        }
        coeffs
    }

    #[test]
    fn q_coefficients_match_a_second_reading() {
        let text = "55647-212544t+296244t^2-200754t^3+61377t^4+5198t^5-10420t^6\
                    +972t^7+960t^8+408t^9-420t^10+100t^11-8t^12";
        assert_eq!(parse_poly(text), POLY_GAMMA.to_vec());
        // checksum: Q(1)
        assert_eq!(horner(&POLY_GAMMA, 1.0), -3240.0);
        let text = "-1296t^8+17172t^7-154386t^6+798660t^5-2361960t^4+4132944t^3\
                    -4244238t^2+2344464t-524880";
        assert_eq!(parse_poly(text), POLY_REFINED_SQ_F2.to_vec());
        assert_eq!(
            parse_poly("32500-44845t-22435t^2-370t^3+14t^4-t^5+t^6"),
            POLY_ALPHA.to_vec()
        );
        assert_eq!(
            parse_poly("81-126t-54t^2+14t^3-12t^4+2t^5+2t^6-2t^7-t^8"),
            POLY_BETA.to_vec()
        );
    }

    #[test]
    fn find_root_examples() {
        let r = find_root(|r| r * r + 4.0 * r - 1.0, 0.0, 1.0, 1e-12).unwrap();
        assert!((r.value - 0.2360679).abs() < 1e-7);
        let r = find_root(|r| 3.0 * r * r + 6.0 * r - 1.0, 0.0, 1.0, 1e-12).unwrap();
        assert!((r.value - 0.1547005).abs() < 1e-7);
    }

    #[test]
    fn roots_are_unique_on_unit_interval() {
        for poly in [
            &POLY_ALPHA[..],
            &POLY_BETA,
            &POLY_GAMMA,
            &POLY_AREA_SQ,
            &POLY_AREA_SQ_F2,
            &POLY_REFINED_SQ,
            &POLY_REFINED_SQ_F2,
        ] {
            let mut changes = 0;
            let mut prev = horner(poly, 0.0).signum();
            for j in 1..=10_000 {
                let s = horner(poly, j as f64 / 10_000.0).signum();
                if s != prev {
                    changes += 1;
                }
                prev = s;
            }
            assert_eq!(changes, 1);
        }
    }

    #[test]
    fn recomputed_roots_match_independent_values() {
        let expected = [
            ("alpha", 0.5640843679935368),
            ("beta", 0.5316147292781575),
            ("gamma", 0.5713173591306242),
            ("a_area_sq", 0.5672839368174054),
            ("a_area_sq_f2", 0.5378690546359885),
            ("a_refined_sq", 0.5874591082522503),
            ("a_refined_sq_f2", 0.6383020627551432),
        ];
        for (id, value) in expected {
            let rep = reproduce(id).unwrap();
            assert!((rep.value - value).abs() < 1e-13, "{id}: {}", rep.value);
            assert!(rep.residual.unwrap() < 1e-8);
        }
    }

    #[test]
    fn lambda_routes_agree() {
        for id in [
            "lambda_A1",
            "lambda_A2",
            "lambda_A3",
            "lambda_area_sq",
            "lambda_area_sq_f2",
            "lambda_refined_sq",
        ] {
            let rep = reproduce(id).unwrap();
            let alt = rep.alternate.clone().unwrap().value;
            assert!(
                (rep.value - alt).abs() < 1e-7 * rep.value,
                "{id}: formula {} vs equality {alt}",
                rep.value
            );
        }
        let rep = reproduce("lambda_refined_sq_f2").unwrap();
        assert!((rep.value - 13.966086513).abs() < 1e-6);
        assert!(rep.alternate.unwrap().value < 0.0);
    }

    #[test]
    fn lambda_values_match_independent_computation() {
        for (id, value) in [
            ("lambda_A1", 118.38439488953595),
            ("lambda_A2", 12.342748239478),
            ("lambda_A3", 10.787923095220),
            ("lambda_area_sq", 18.609549031341),
            ("lambda_area_sq_f2", 16.461780984643),
        ] {
            let rep = reproduce(id).unwrap();
            assert!((rep.value - value).abs() < 1e-8, "{id}: {}", rep.value);
        }
    }

    #[test]
    fn root_perturbation_moves_lambda() {
        let alpha = reproduce("alpha").unwrap().value;
        for (f, t) in [
            (lambda_a1 as fn(f64) -> f64, alpha),
            (lambda_a2, reproduce("beta").unwrap().value),
            (lambda_a3, reproduce("gamma").unwrap().value),
        ] {
            let base = f(t);
            assert!((f(t + 1e-3) - base).abs() > 1e-3);
            assert!((f(t - 1e-3) - base).abs() > 1e-3);
        }
    }

    #[test]
    fn printed_a1_lambda_comes_from_the_rounded_root() {
        let rep = reproduce("lambda_A1").unwrap();
        let at_printed = rep.value_at_printed_root.unwrap();
        assert!((at_printed - 118.383318).abs() < 1e-4);
        assert!(rep.delta > 1e-3);
    }

    #[test]
    fn radii_examples() {
        let r = radius(
            "r2",
            &RadiusParams {
                k: Some(1.0),
                ..Default::default()
            },
        )
        .unwrap();
        assert!((r.value - (5f64.sqrt() - 2.0)).abs() < 1e-14);
        let r = radius(
            "harm_j",
            &RadiusParams {
                big_k: Some(1.0),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(r.value, 0.2);
        assert_eq!(r.provenance, Provenance::ClosedForm);
        let r = radius(
            "harm_j",
            &RadiusParams {
                big_k: Some(f64::INFINITY),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(r.value, 1.0 / 7.0);
        let r = radius(
            "rogosinski",
            &RadiusParams {
                n: Some(2),
                ..Default::default()
            },
        )
        .unwrap();
        let f = |r: f64| 2.0 * (1.0 + r) * r * r - (1.0 - r).powi(2);
        assert!(f(r.value - 1e-9) < 0.0 && f(r.value + 1e-9) > 0.0);
        assert!(matches!(
            radius("rogosinski", &RadiusParams::default()),
            Err(Error::MissingParam { .. })
        ));
        assert!(matches!(
            radius("nope", &RadiusParams::default()),
            Err(Error::UnknownId(_))
        ));
    }

    #[test]
    fn harmonic_radii_decrease_in_k() {
        let ks = [0.0, 0.25, 0.5, 0.75, 1.0];
        for f in [radius_r1, radius_r2, radius_r_u, radius_harm_j] {
            let vals: Vec<f64> = ks.iter().map(|&k| f(k).unwrap().value).collect();
            assert!(vals.windows(2).all(|w| w[1] < w[0]));
        }
        let r_u = [
            0.1010205144,
            0.0912962283,
            0.0833449168,
            0.0767093010,
            0.0710800766,
        ];
        for (k, expected) in ks.iter().zip(r_u) {
            assert!((radius_r_u(*k).unwrap().value - expected).abs() < 1e-10);
        }
    }

    #[test]
    fn identities_between_radii() {
        let r1 = radius_rogosinski(1).unwrap().value;
        let c = reproduce("sqrt5_minus_2").unwrap().value;
        assert!((r1 - c).abs() < 1e-14);
        assert!((radius_r_u(0.0).unwrap().value - (5.0 - 2.0 * 6f64.sqrt())).abs() < 1e-14);
        assert!((radius_r1(1.0).unwrap().value - (2.0 * 3f64.sqrt() - 3.0) / 3.0).abs() < 1e-14);
    }

    #[test]
    fn closed_form_catalog_entries_reproduce() {
        for id in [
            "sqrt17",
            "rf_univ",
            "rf_conv",
            "sqrt5_minus_2",
            "r1_limit",
            "one_seventh",
            "bohr",
            "harm_bohr_k1",
            "r_u_limit",
        ] {
            let rep = reproduce(id).unwrap();
            assert!(rep.pass, "{id}: {} vs {}", rep.value, rep.printed);
        }
    }

    #[test]
    fn unknown_id_is_an_error() {
        assert!(matches!(reproduce("zeta"), Err(Error::UnknownId(_))));
    }
}
