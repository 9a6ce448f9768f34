mod args;
mod output;

use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use bohrlab::constants::{self, RadiusParams};
use bohrlab::extremal::SharpId;
use bohrlab::functional::{CatalogId, FunctionalSpec, Subordinator, ZPolicy};
use bohrlab::verify::{self, Branch, FamilySpec, GridSpec, Lemma, Perturbation};
use clap::Parser;
use serde::Serialize;
use serde_json::Value;

use args::{Cli, Command, FamilyArg, FamilyArgs, GridArgs, PsiArg, RowArgs, SweepArgs, SweepParam};
use output::{write_csv, Report, SCHEMA_VERSION};

const THREADS_VAR: &str = "BOHRLAB_THREADS";

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(&cli)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| anyhow!("{THREADS_VAR}={raw:?} is not a positive integer"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .context("cannot configure the thread pool")
}

fn to_value<T: Serialize>(x: &T) -> Result<Value> {
    Ok(serde_json::to_value(x)?)
}

/// Runs one command and writes its report. `Ok(false)` means a check failed.
fn run(cli: &Cli) -> Result<bool> {
    let (name, results, pass) = match &cli.command {
        Command::Constants(a) => constants_cmd(&a.id)?,
        Command::Verify(a) => {
            let spec = row_spec(&a.row)?;
            let family = family_spec(&a.family, spec.id.is_harmonic())?;
            let rep = verify::verify_grid(&spec, &family, &grid_spec(&a.grid)?)?;
            ("verify", vec![to_value(&rep)?], rep.pass)
        }
        Command::Probe(a) => {
            let spec = row_spec(&a.row)?;
            let perturbation = match (a.lambda_scale, a.radius_excess, &a.a_sequence) {
                (Some(s), _, _) => Perturbation::LambdaScale(s),
                (None, Some(d), Some(seq)) => Perturbation::AToOne {
                    radius_excess: d,
                    sequence: seq.clone(),
                },
                (None, Some(d), None) => Perturbation::RadiusExcess(d),
                (None, None, _) => bail!("probe needs --lambda-scale or --radius-excess"),
            };
            let res = verify::sharpness_probe(&spec, &perturbation)?;
            ("probe", vec![to_value(&res)?], res.violated)
        }
        Command::Envelope(a) => {
            let lemma = Lemma::parse(&a.lemma)?;
            let family = family_spec(&a.family, lemma == Lemma::L51)?;
            let rep = verify::envelope_suite(lemma, &family, &grid_spec(&a.grid)?)?;
            ("envelope", vec![to_value(&rep)?], rep.pass)
        }
        Command::Sweep(a) => ("sweep", sweep_cmd(a)?, true),
        Command::Equality(a) => {
            let ids: Vec<SharpId> = if a.functional == "all" {
                SharpId::ALL.to_vec()
            } else {
                let id = SharpId::parse(&a.functional)
                    .ok_or_else(|| anyhow!("{} is not a sharp functional", a.functional))?;
                vec![id]
            };
            let mut results = Vec::new();
            let mut pass = true;
            for id in ids {
                let eq = verify::boundary_equality(id)?;
                pass &= eq.pass;
                results.push(to_value(&eq)?);
            }
            ("equality", results, pass)
        }
        Command::Branch(a) => {
            let b = verify::branch_maximize(Branch::parse(&a.id)?);
            ("branch", vec![to_value(&b)?], b.below_one)
        }
    };
    Report {
        schema_version: SCHEMA_VERSION,
        command: name,
        config_echo: &cli.command,
        results,
        pass,
    }
    .write(cli.json.as_deref())?;
    Ok(pass)
}

#[derive(Serialize)]
struct ConstantRow<'a> {
    id: &'a str,
    recomputed: f64,
    printed: f64,
    delta: f64,
    tolerance: f64,
    pass: bool,
    kind: constants::ConstantKind,
    residual: Option<f64>,
    root: Option<f64>,
    alternate: Option<&'a constants::Alternate>,
    value_at_printed_root: Option<f64>,
}

fn constants_cmd(id: &str) -> Result<(&'static str, Vec<Value>, bool)> {
    let reproductions = if id == "all" {
        constants::reproduce_all()?
    } else {
        vec![constants::reproduce(id)?]
    };
    let mut results = Vec::new();
    for r in &reproductions {
        results.push(to_value(&ConstantRow {
            id: r.id,
            recomputed: r.value,
            printed: r.printed,
            delta: r.delta,
            tolerance: r.tolerance,
            pass: r.pass,
            kind: r.kind,
            residual: r.residual,
            root: r.root,
            alternate: r.alternate.as_ref(),
            value_at_printed_root: r.value_at_printed_root,
        })?);
    }
    let pass = reproductions.iter().all(|r| r.pass);
    Ok(("constants", results, pass))
}

fn row_spec(row: &RowArgs) -> Result<FunctionalSpec> {
    let id = CatalogId::parse(&row.functional)?;
    let mut spec = FunctionalSpec::new(id);
    if let Some(n) = row.n {
        spec = spec.with_n(n);
    }
    match (row.k, row.big_k) {
        (Some(k), _) => spec = spec.with_k(k),
        (None, Some(big_k)) => spec = spec.with_k(constants::k_from_big_k(big_k)?),
        (None, None) => {}
    }
    if let Some(lambda) = row.lambda {
        spec = spec.with_lambda(lambda);
    }
    let psi = match (row.psi, id) {
        (Some(PsiArg::HalfPlane), _) => Some(Subordinator::HalfPlane),
        (Some(PsiArg::Koebe), _) => Some(Subordinator::Koebe),
        (None, CatalogId::SubConvex) => Some(Subordinator::HalfPlane),
        (None, CatalogId::SubUniv) => Some(Subordinator::Koebe),
        (None, _) => None,
    };
    if let Some(psi) = psi {
        spec = spec.with_psi(psi);
    }
    if let Some(theta) = row.theta {
        spec = spec.with_z_policy(ZPolicy::FixedAngle(theta));
    }
    Ok(spec)
}

fn family_spec(args: &FamilyArgs, harmonic: bool) -> Result<FamilySpec> {
    let family = args.family.unwrap_or(if harmonic {
        FamilyArg::HarmonicExtremal
    } else {
        FamilyArg::Moebius
    });
    Ok(match family {
        FamilyArg::Moebius => FamilySpec::Moebius,
        FamilyArg::HarmonicExtremal => FamilySpec::HarmonicExtremal,
        FamilyArg::Blaschke => {
            if args.samples == 0 {
                bail!("--samples must be positive");
            }
            FamilySpec::blaschke(args.samples, args.max_degree, args.seed)
        }
    })
}

fn grid_spec(args: &GridArgs) -> Result<GridSpec> {
    let (a, r) = args
        .grid
        .split_once(['x', 'X'])
        .ok_or_else(|| anyhow!("--grid expects A_POINTSxR_POINTS, got {:?}", args.grid))?;
    let a_points = a
        .trim()
        .parse()
        .with_context(|| format!("bad a-point count {a:?}"))?;
    let r_points = r
        .trim()
        .parse()
        .with_context(|| format!("bad r-point count {r:?}"))?;
    Ok(GridSpec {
        k_values: args.k_values.clone(),
        tolerance: args.tolerance,
        ..GridSpec::default()
    }
    .with_dims(a_points, r_points))
}

fn sweep_values(a: &SweepArgs) -> Result<Vec<f64>> {
    let values = match (&a.values, &a.range) {
        (Some(list), None) => list
            .iter()
            .filter(|s| !s.trim().is_empty())
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .with_context(|| format!("bad value {s:?}"))
            })
            .collect::<Result<Vec<_>>>()?,
        (None, Some(range)) => {
            let parts: Vec<f64> = range
                .split(':')
                .map(|s| {
                    s.trim()
                        .parse::<f64>()
                        .with_context(|| format!("bad range {range:?}"))
                })
                .collect::<Result<_>>()?;
            let [start, stop, step] = parts[..] else {
                bail!("--range expects START:STOP:STEP, got {range:?}");
            };
            if !(step > 0.0) || !start.is_finite() || !stop.is_finite() {
                bail!("--range step must be positive and the ends finite");
            }
            let count = ((stop - start) / step + 1e-9).floor();
            if count < 0.0 {
                Vec::new()
            } else {
                (0..=count as usize)
                    .map(|i| start + i as f64 * step)
                    .collect()
            }
        }
        _ => bail!("sweep needs exactly one of --values or --range"),
    };
    if values.is_empty() {
        bail!("the sweep range is empty");
    }
    Ok(values)
}

#[derive(Serialize)]
struct CurveResult {
    curve: String,
    over: SweepParam,
    path: String,
    params: Vec<f64>,
    values: Vec<f64>,
}

fn sweep_cmd(a: &SweepArgs) -> Result<Vec<Value>> {
    let params = sweep_values(a)?;
    std::fs::create_dir_all(&a.out_dir)
        .with_context(|| format!("cannot create {}", a.out_dir.display()))?;
    let mut results = Vec::new();
    for curve in &a.curves {
        let mut rows = Vec::with_capacity(params.len());
        for &p in &params {
            let mut rp = RadiusParams::default();
            match a.over {
                SweepParam::K => rp.k = Some(p),
                SweepParam::BigK => rp.big_k = Some(p),
                SweepParam::A0 => rp.a0 = Some(p),
                SweepParam::N => {
                    if p.fract() != 0.0 || p < 1.0 || p > u32::MAX as f64 {
                        bail!("N = {p} is not a positive integer");
                    }
                    rp.n = Some(p as u32);
                }
            }
            rows.push((p, constants::radius(curve, &rp)?.value));
        }
        let path = a.out_dir.join(format!("{curve}.csv"));
        write_csv(&path, &rows)?;
        results.push(to_value(&CurveResult {
            curve: curve.clone(),
            over: a.over,
            path: path.display().to_string(),
            params: rows.iter().map(|r| r.0).collect(),
            values: rows.iter().map(|r| r.1).collect(),
        })?);
    }
    Ok(results)
}
