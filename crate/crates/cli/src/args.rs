use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser, Serialize)]
#[command(name = "bohrlab", version)]
#[command(about = "Reproduce, verify and probe Bohr-type inequalities on the unit disk")]
pub struct Cli {
    /// Write the JSON report here instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    #[serde(skip)]
    pub json: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case", tag = "command")]
pub enum Command {
    /// Recompute catalog constants from their defining equations
    Constants(ConstantsArgs),
    /// Sweep a functional over a family and its stated radius
    Verify(VerifyArgs),
    /// Push a functional past its λ or radius and search for a violation
    Probe(ProbeArgs),
    /// Check a lemma bound over a family
    Envelope(EnvelopeArgs),
    /// Tabulate a radius curve as CSV
    Sweep(SweepArgs),
    /// Evaluate the boundary-equality residuals of the sharp functionals
    Equality(EqualityArgs),
    /// Maximize a branch function from a proof
    Branch(BranchArgs),
}

#[derive(Debug, Args, Serialize)]
pub struct ConstantsArgs {
    /// Constant id, or `all`
    #[arg(long, default_value = "all")]
    pub id: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyArg {
    Moebius,
    Blaschke,
    HarmonicExtremal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PsiArg {
    HalfPlane,
    Koebe,
}

/// Parameters that pick out one row of the catalog.
#[derive(Debug, Args, Serialize)]
pub struct RowArgs {
    /// Catalog id, e.g. `a1`, `rogosinski`, `harm-i1`
    #[arg(long)]
    pub functional: String,
    /// Index N of the Rogosinski rows
    #[arg(long)]
    pub n: Option<u32>,
    /// Dilatation bound k in [0, 1]
    #[arg(long, conflicts_with = "big_k")]
    pub k: Option<f64>,
    /// Quasiconformality constant K >= 1 (`inf` allowed)
    #[arg(long = "big-k", value_name = "K")]
    pub big_k: Option<f64>,
    /// Override the sharp λ
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Dominant function of the subordination rows
    #[arg(long, value_enum)]
    pub psi: Option<PsiArg>,
    /// Evaluate |f(z)| at z = r e^{iθ} instead of the circle maximum
    #[arg(long)]
    pub theta: Option<f64>,
}

#[derive(Debug, Args, Serialize)]
pub struct FamilyArgs {
    /// Defaults to `harmonic-extremal` for harmonic rows and `moebius` otherwise
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// Number of random Blaschke products
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    /// Largest Blaschke degree
    #[arg(long, default_value_t = 5)]
    pub max_degree: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

#[derive(Debug, Args, Serialize)]
pub struct GridArgs {
    /// Grid dimensions as `A_POINTSxR_POINTS`
    #[arg(long, default_value = "400x400")]
    pub grid: String,
    /// Dilatation bounds swept when no k is fixed
    #[arg(long, value_delimiter = ',', default_value = "0,0.25,0.5,0.75,1")]
    pub k_values: Vec<f64>,
    /// Largest admissible worst margin
    #[arg(long, default_value_t = 1e-9)]
    pub tolerance: f64,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub row: RowArgs,
    #[command(flatten)]
    pub family: FamilyArgs,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Args, Serialize)]
pub struct ProbeArgs {
    #[command(flatten)]
    pub row: RowArgs,
    /// Multiply the sharp λ by this factor
    #[arg(long, conflicts_with_all = ["radius_excess", "a_sequence"])]
    pub lambda_scale: Option<f64>,
    /// Evaluate this far past the stated radius
    #[arg(long)]
    pub radius_excess: Option<f64>,
    /// Explicit family parameters approaching 1, comma separated
    #[arg(long, value_delimiter = ',', requires = "radius_excess")]
    pub a_sequence: Option<Vec<f64>>,
}

#[derive(Debug, Args, Serialize)]
pub struct EnvelopeArgs {
    /// One of L32, L34, L35, L51
    #[arg(long)]
    pub lemma: String,
    #[command(flatten)]
    pub family: FamilyArgs,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepParam {
    /// Dilatation bound k
    K,
    /// Quasiconformality constant K
    #[value(name = "big-k")]
    BigK,
    /// Rogosinski index N
    N,
    /// |a₀|
    A0,
}

#[derive(Debug, Args, Serialize)]
pub struct SweepArgs {
    /// Radius curves to tabulate (r1, r2, r_u, harm_j, harm_bohr, rogosinski, rogosinski_sq, refined_a0, bohr)
    #[arg(long = "curve", required = true, value_delimiter = ',')]
    pub curves: Vec<String>,
    /// The parameter the values stand for
    #[arg(long, value_enum)]
    pub over: SweepParam,
    /// Parameter values, comma separated
    #[arg(long, value_delimiter = ',', conflicts_with = "range")]
    pub values: Option<Vec<String>>,
    /// Inclusive range `START:STOP:STEP`
    #[arg(long)]
    pub range: Option<String>,
    /// Directory receiving one `<curve>.csv` per curve
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args, Serialize)]
pub struct EqualityArgs {
    /// Sharp functional id, or `all`
    #[arg(long, default_value = "all")]
    pub functional: String,
}

#[derive(Debug, Args, Serialize)]
pub struct BranchArgs {
    #[arg(long, default_value = "A1_star")]
    pub id: String,
}
