use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "nevanlinna",
    version,
    about = "Value-distribution profiles, theorem checks and root witnesses for rational functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Tabulate r, n, nbar, N, Nbar, m, T for each target value.
    Profile(ProfileArgs),
    /// Check a theorem numerically and write a deviation report.
    Verify(VerifyArgs),
    /// Replay the shift-and-localize induction and report a root witness.
    FtaWitness(WitnessArgs),
    /// Enclose all roots of a polynomial in small disks.
    Localize(LocalizeArgs),
    /// Write seeded random test functions as JSON files.
    Corpus(CorpusArgs),
}

#[derive(Args, Debug, Clone)]
pub struct GridArgs {
    /// Smallest radius of the log-spaced grid.
    #[arg(long, default_value_t = 1.0)]
    pub rmin: f64,
    /// Largest radius of the log-spaced grid.
    #[arg(long, default_value_t = 1e4)]
    pub rmax: f64,
    /// Number of grid radii.
    #[arg(long, default_value_t = 32)]
    pub points: usize,
}

#[derive(Args, Debug, Clone)]
pub struct QuadratureArgs {
    /// Absolute tolerance of the proximity quadrature.
    #[arg(long, default_value_t = 1e-9)]
    pub abs_tol: f64,
    /// Maximum bisection depth of the proximity quadrature.
    #[arg(long, default_value_t = 24)]
    pub max_subdivisions: usize,
    /// Relative band around the circle in which a-points get endpoint treatment.
    #[arg(long, default_value_t = 1e-6)]
    pub refine_band: f64,
}

#[derive(Args, Debug)]
pub struct ProfileArgs {
    /// Rational function JSON file.
    #[arg(long = "function", visible_alias = "poly", value_name = "FILE")]
    pub function: PathBuf,
    /// Comma-separated target values, e.g. "0,1+2i,inf".
    #[arg(long = "a", value_name = "LIST", allow_hyphen_values = true)]
    pub targets: String,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub quadrature: QuadratureArgs,
    /// Output directory for one CSV per target; stdout when omitted.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremName {
    Fft,
    Smt,
    Degree,
    Claim1,
    Remark,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub theorem: TheoremName,
    /// Rational function JSON file.
    #[arg(long = "function", value_name = "FILE", conflicts_with = "poly")]
    pub function: Option<PathBuf>,
    /// Polynomial JSON file.
    #[arg(long, value_name = "FILE")]
    pub poly: Option<PathBuf>,
    /// Target values (one for fft, at least three for smt).
    #[arg(long = "a", value_name = "LIST", allow_hyphen_values = true)]
    pub targets: Option<String>,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub quadrature: QuadratureArgs,
    /// Allowed tail drift of an O(1) series.
    #[arg(long, default_value_t = 1e-3)]
    pub drift_tol: f64,
    /// Allowed tail drift of claim-1 chain components.
    #[arg(long, default_value_t = 1e-2)]
    pub chain_drift_tol: f64,
    /// Allowed distance between fitted slope and degree.
    #[arg(long, default_value_t = 1e-3)]
    pub slope_tol: f64,
    /// Relative part of the second-theorem allowance.
    #[arg(long, default_value_t = 0.0)]
    pub eps_s: f64,
    /// Absolute part of the second-theorem allowance; 4 (q + degrees) when omitted.
    #[arg(long)]
    pub c_s: Option<f64>,
    /// JSON output file; stdout when omitted.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct WitnessArgs {
    /// Polynomial JSON file.
    #[arg(long, visible_alias = "function", value_name = "FILE")]
    pub poly: PathBuf,
    /// Residual tolerance relative to the coefficient scale.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct LocalizeArgs {
    /// Polynomial JSON file.
    #[arg(long, visible_alias = "function", value_name = "FILE")]
    pub poly: PathBuf,
    /// Enclosure radius bound.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    /// Search box "x0,x1,y0,y1"; the Cauchy-bound square when omitted.
    #[arg(long, value_name = "BOX", allow_hyphen_values = true)]
    pub region: Option<String>,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusKind {
    /// Coefficients uniform in the unit box.
    Poly,
    /// Built from roots with multiplicities.
    Factored,
    /// Ratios of products of linear factors.
    Rational,
}

#[derive(Args, Debug)]
pub struct CorpusArgs {
    #[arg(long, value_enum, default_value_t = CorpusKind::Poly)]
    pub kind: CorpusKind,
    #[arg(long, default_value_t = 10)]
    pub count: usize,
    /// Degree for poly, maximum degree otherwise.
    #[arg(long, default_value_t = 6)]
    pub degree: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output directory.
    #[arg(long, value_name = "PATH")]
    pub out: PathBuf,
}
