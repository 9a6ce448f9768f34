use std::f64::consts::{FRAC_1_SQRT_2, PI};

use bohrlab::constants::{radius_harm_j, radius_r1, radius_r2, radius_r_u};
use bohrlab::extremal::SharpId;
use bohrlab::functional::{sharp_lambda, CatalogId, FunctionalSpec};
use bohrlab::series::blaschke_coefficients;
use bohrlab::verify::{verify_grid, FamilySpec, GridSpec};
use bohrlab::{Complex64, DiskFunction, HarmonicPair, TruncationPolicy};
use proptest::prelude::*;

fn blaschke_parts() -> impl Strategy<Value = (Vec<Complex64>, Complex64)> {
    (
        prop::collection::vec((0.0..0.95f64, 0.0..2.0 * PI), 1..=5),
        0.0..2.0 * PI,
    )
        .prop_map(|(zeros, u)| {
            (
                zeros
                    .into_iter()
                    .map(|(m, t)| Complex64::from_polar(m, t))
                    .collect(),
                Complex64::from_polar(1.0, u),
            )
        })
}

fn blaschke() -> impl Strategy<Value = DiskFunction> {
    blaschke_parts().prop_map(|(z, u)| DiskFunction::blaschke(z, u).unwrap())
}

const ANALYTIC_ROWS: [CatalogId; 18] = [
    CatalogId::Classical,
    CatalogId::Rogosinski,
    CatalogId::RogosinskiSq,
    CatalogId::Area169,
    CatalogId::Area98,
    CatalogId::AreaSq,
    CatalogId::AreaSqF2,
    CatalogId::Odds169,
    CatalogId::Odds98,
    CatalogId::Refined,
    CatalogId::RefinedA0Sq,
    CatalogId::RefinedDist,
    CatalogId::RefinedDistA0Sq,
    CatalogId::RefinedSq,
    CatalogId::RefinedSqF2,
    CatalogId::A1,
    CatalogId::A2,
    CatalogId::A3,
];

fn row(id: CatalogId) -> FunctionalSpec {
    if id.takes_n() {
        FunctionalSpec::new(id).with_n(2)
    } else {
        FunctionalSpec::new(id)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_sums_grow_with_r(f in blaschke(), r1 in 0.0..0.9f64, dr in 0.0..0.09f64) {
        let r2 = r1 + dr;
        prop_assert!(f.majorant_tail(r1, 0).unwrap() <= f.majorant_tail(r2, 0).unwrap() + 1e-12);
        prop_assert!(f.quadratic_sum(r1, 1).unwrap() <= f.quadratic_sum(r2, 1).unwrap() + 1e-12);
        prop_assert!(f.area_ratio(r1).unwrap() <= f.area_ratio(r2).unwrap() + 1e-12);
    }

    #[test]
    fn truncated_tails_match_long_direct_sums((zeros, u) in blaschke_parts(), r in 0.0..0.8f64) {
        let f = DiskFunction::blaschke(zeros.clone(), u).unwrap();
        let coeffs = blaschke_coefficients(&zeros, u, 4000);
        let direct: f64 = coeffs.iter().enumerate().skip(1).map(|(n, c)| c.norm() * r.powi(n as i32)).sum();
        let policy = TruncationPolicy { abs_tol: 1e-12, ..TruncationPolicy::default() };
        let got = f.majorant_tail_with(r, 1, &policy).unwrap();
        prop_assert!((got - direct).abs() <= 1e-10, "{got} vs {direct}");
    }

    #[test]
    fn blaschke_coefficients_stay_in_the_unit_ball((zeros, u) in blaschke_parts()) {
        let c = blaschke_coefficients(&zeros, u, 200);
        let energy: f64 = c.iter().map(|c| c.norm_sqr()).sum();
        prop_assert!(energy <= 1.0 + 1e-9);
        prop_assert!(c[0].norm() < 1.0);
    }

    #[test]
    fn lemma_envelopes_hold_for_blaschke(f in blaschke(), t in 0.0..1.0f64) {
        let a0 = f.a0().norm();
        let b = 1.0 - a0 * a0;

        let r = t * FRAC_1_SQRT_2;
        let area = f.area_ratio(r).unwrap();
        prop_assert!(area <= r * r * b * b / (1.0 - a0 * a0 * r * r).powi(2) + 1e-12);

        let r = t * 0.95;
        let tail = f.majorant_tail(r, 1).unwrap();
        let bound = if a0 >= r { r * b / (1.0 - r * a0) } else { r * b.sqrt() / (1.0 - r * r).sqrt() };
        prop_assert!(tail <= bound + 1e-12);
        let refined = tail + (1.0 / (1.0 + a0) + r / (1.0 - r)) * f.quadratic_sum(r, 1).unwrap();
        prop_assert!(refined <= b * r / (1.0 - r) + 1e-12);
    }

    #[test]
    fn scaled_pairs_respect_the_dilatation(f in blaschke(), k in 0.0..=1.0f64, m in 0.0..=1.0f64, arg in 0.0..2.0 * PI, r in 0.01..0.95f64) {
        let pair = HarmonicPair::scaled(f.clone(), k, Complex64::from_polar(m, arg)).unwrap();
        prop_assert!(pair.lemma51_margin(r).unwrap() >= -1e-12);
        let expected = (1.0 + k * m) * f.majorant_tail(r, 1).unwrap();
        prop_assert!((pair.co_majorant(r, 1).unwrap() - expected).abs() <= 1e-12);
    }

    #[test]
    fn moebius_rows_hold_inside_their_radius(a in 0.0..0.9999f64, t in 0.0..=1.0f64) {
        let f = DiskFunction::moebius(a).unwrap();
        for id in ANALYTIC_ROWS {
            let spec = row(id);
            let r = t * spec.stated_radius().unwrap().at(a);
            let m = spec.margin(&f, r).unwrap();
            prop_assert!(m <= 1e-9, "{id} a={a} r={r} margin {m}");
        }
    }

    #[test]
    fn catalog_lhs_is_monotone_in_r(f in blaschke(), r1 in 0.0..0.3f64, dr in 0.0..0.1f64) {
        for id in ANALYTIC_ROWS {
            let spec = row(id);
            let lo = spec.lhs(&f, r1).unwrap();
            let hi = spec.lhs(&f, r1 + dr).unwrap();
            prop_assert!(lo <= hi + 1e-12, "{id}: {lo} > {hi}");
        }
    }

    #[test]
    fn harmonic_radii_decrease_in_k(k1 in 0.0..=1.0f64, k2 in 0.0..=1.0f64) {
        let (lo, hi) = if k1 <= k2 { (k1, k2) } else { (k2, k1) };
        for radius in [radius_r1, radius_r2, radius_r_u, radius_harm_j] {
            prop_assert!(radius(hi).unwrap().value <= radius(lo).unwrap().value);
        }
    }

    #[test]
    fn larger_lambda_breaks_equality(scale in 1.001..2.0f64) {
        for id in SharpId::ALL {
            let root = bohrlab::constants::reproduce(id.root_id()).unwrap().value;
            prop_assert!(id.residual(root, scale * sharp_lambda(id)) > 0.0);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn reports_do_not_depend_on_thread_count(seed in 0u64..1000) {
        let spec = FunctionalSpec::new(CatalogId::A2);
        let family = FamilySpec::blaschke(40, 4, seed);
        let grid = GridSpec::default().with_dims(2, 50);
        let run = |threads| {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
            serde_json::to_string(&pool.install(|| verify_grid(&spec, &family, &grid).unwrap())).unwrap()
        };
        prop_assert_eq!(run(1), run(3));
    }
}

#[test]
fn refining_the_grid_keeps_passes() {
    let coarse = GridSpec::default().with_dims(50, 50);
    let fine = coarse.refined();
    for id in [
        CatalogId::Classical,
        CatalogId::A1,
        CatalogId::A3,
        CatalogId::RefinedDist,
    ] {
        let spec = row(id);
        let a = verify_grid(&spec, &FamilySpec::Moebius, &coarse).unwrap();
        let b = verify_grid(&spec, &FamilySpec::Moebius, &fine).unwrap();
        assert!(a.pass);
        assert!(b.worst_margin <= coarse.tolerance + a.tolerance, "{id}");
        assert!(b.worst_margin >= a.worst_margin);
    }
    let spec = FunctionalSpec::new(CatalogId::HarmI2);
    let a = verify_grid(&spec, &FamilySpec::HarmonicExtremal, &coarse).unwrap();
    let b = verify_grid(&spec, &FamilySpec::HarmonicExtremal, &fine).unwrap();
    assert!(a.pass && b.pass);
}
