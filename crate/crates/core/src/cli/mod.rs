//! Command-line jobs. Every job echoes its configuration (and a SHA-256 of
//! it) into the `#` header of each file it writes; `--threads` is left out
//! of the configuration because it never changes a result.

mod jobs;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::error::Error;
use crate::numerics::Precision;

/// Weighted Birkhoff averages for quasiperiodic orbits.
#[derive(Debug, Parser, Serialize)]
#[command(name = "birkhoff", version)]
pub struct Cli {
    /// Working precision: `fast` (f64) or `high` (double-double).
    #[arg(long, global = true, default_value = "fast")]
    pub precision: Precision,

    /// Worker threads; defaults to the available cores.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub threads: Option<usize>,

    /// Print the report as JSON.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Command {
    /// Weighted and plain Birkhoff averages along a Standard Map orbit.
    Wba(WbaArgs),
    /// Rotation number of a quasiperiodic curve.
    Rotnum(RotnumArgs),
    /// Fourier model of the conjugacy to a rigid rotation.
    Conjugacy(ConjugacyArgs),
    /// zeros_N over a grid of Standard Map seeds.
    Grid(GridArgs),
    /// Three weighted averages per seed.
    Embed3(Embed3Args),
    /// Poincaré section of the planar restricted three-body problem.
    Threebody(ThreebodyArgs),
    /// Lyapunov exponent of a Standard Map orbit.
    Lyapunov(LyapunovArgs),
}

/// Where the trajectory comes from. Exactly one of `--curve`, `--input`,
/// `--standard-map` is required.
#[derive(Debug, Args, Serialize)]
pub struct SourceArgs {
    /// fish, flower, circle or custom (with `--term`).
    #[arg(long, conflicts_with_all = ["input", "standard_map"])]
    pub curve: Option<String>,

    /// CSV with columns `n,x,y` (or a section file `n,q1,p1,t`).
    #[arg(long, conflicts_with = "standard_map")]
    pub input: Option<PathBuf>,

    /// Standard Map parameter `r`; needs `--seed`.
    #[arg(long = "standard-map", value_name = "R", allow_hyphen_values = true)]
    pub standard_map: Option<f64>,

    /// Standard Map initial condition.
    #[arg(long, value_name = "X,Y", allow_hyphen_values = true)]
    pub seed: Option<String>,

    /// Fourier term `k,re,im` of a custom curve; repeatable.
    #[arg(long = "term", value_name = "K,RE,IM", allow_hyphen_values = true)]
    pub terms: Vec<String>,

    /// Rotation number used to sample a curve (default: golden mean).
    #[arg(long = "curve-rho", value_name = "RHO")]
    pub curve_rho: Option<String>,
}

#[derive(Debug, Args, Serialize)]
pub struct WbaArgs {
    #[arg(long, default_value_t = 1.4, allow_hyphen_values = true)]
    pub r: f64,
    #[arg(long, value_name = "X,Y", allow_hyphen_values = true)]
    pub seed: String,
    #[arg(long = "N", default_value_t = 20_000)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub p: u32,
    /// sin_xy, cos_x or sin_y.
    #[arg(long, default_value = "sin_xy")]
    pub f: String,
}

#[derive(Debug, Args, Serialize)]
pub struct RotnumArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    /// Base point `x,y`, or `centroid`. Defaults to `π,0` for the
    /// Standard Map and the centroid otherwise.
    #[arg(long = "P", value_name = "X,Y", allow_hyphen_values = true)]
    pub base: Option<String>,
    #[arg(long = "K", default_value_t = 2)]
    pub k: usize,
    #[arg(long = "N", default_value_t = 20_000)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub p: u32,
    /// Also write the trajectory that was analysed.
    #[arg(long = "traj-out")]
    pub traj_out: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct ConjugacyArgs {
    #[command(flatten)]
    pub rot: RotnumArgs,
    /// Center of the polar coordinates; defaults to the base point.
    #[arg(long, value_name = "X,Y", allow_hyphen_values = true)]
    pub center: Option<String>,
    #[arg(long, default_value_t = 100)]
    pub kmax: usize,
    /// Use this rotation number instead of computing it.
    #[arg(long = "rho", value_name = "RHO")]
    pub rho: Option<String>,
    /// Coefficient table `k,re_a,im_a,abs_a,re_b,im_b,abs_b`.
    #[arg(long)]
    pub coeffs: Option<PathBuf>,
    /// Saved model, reloadable at the same precision.
    #[arg(long)]
    pub model: Option<PathBuf>,
    /// Iterate index to predict; repeatable.
    #[arg(long)]
    pub predict: Vec<u64>,
}

#[derive(Debug, Args, Serialize)]
pub struct GridArgs {
    #[arg(long, default_value_t = 1.4, allow_hyphen_values = true)]
    pub r: f64,
    #[arg(long = "N", default_value_t = 20_000)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub p: u32,
    /// Resolution `NXxNY`.
    #[arg(long, default_value = "500x500")]
    pub res: String,
    #[arg(long, default_value = "sin_xy")]
    pub f: String,
    /// `x0,x1,y0,y1`; defaults to the torus `[0, 2π]²`.
    #[arg(long, allow_hyphen_values = true)]
    pub region: Option<String>,
    #[arg(long)]
    pub out: PathBuf,
    /// Grayscale PGM image.
    #[arg(long)]
    pub img: Option<PathBuf>,
}

#[derive(Debug, Args, Serialize)]
pub struct Embed3Args {
    #[arg(long, default_value_t = 1.4, allow_hyphen_values = true)]
    pub r: f64,
    #[arg(long = "N", default_value_t = 20_000)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub p: u32,
    /// Seed `x,y`; repeatable.
    #[arg(long, value_name = "X,Y", allow_hyphen_values = true)]
    pub seed: Vec<String>,
    /// Add this many evenly spaced seeds on the diagonal `x = y`.
    #[arg(long)]
    pub diagonal: Option<usize>,
    #[arg(long, default_value = "sin_xy")]
    pub f1: String,
    #[arg(long, default_value = "cos_x")]
    pub f2: String,
    #[arg(long, default_value = "sin_y")]
    pub f3: String,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args, Serialize)]
pub struct ThreebodyArgs {
    /// Energy level.
    #[arg(long = "H", default_value_t = -2.63, allow_hyphen_values = true)]
    pub h: f64,
    #[arg(long, default_value_t = 0.1)]
    pub mu: f64,
    #[arg(long, default_value_t = 2e-5)]
    pub step: f64,
    #[arg(long, default_value_t = 20_000)]
    pub returns: usize,
    /// Section point `q1,p1`.
    #[arg(long, value_name = "Q1,P1", allow_hyphen_values = true)]
    pub seed: String,
    /// Give up when no crossing occurs for this long.
    #[arg(long = "max-time", default_value_t = 1000.0)]
    pub max_time: f64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args, Serialize)]
pub struct LyapunovArgs {
    #[arg(long, default_value_t = 1.4, allow_hyphen_values = true)]
    pub r: f64,
    #[arg(long, value_name = "X,Y", allow_hyphen_values = true)]
    pub seed: String,
    #[arg(long = "N", default_value_t = 20_000)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub p: u32,
    /// Plain 1/N average instead of the weighted one.
    #[arg(long)]
    pub uniform: bool,
}

/// Usage problems exit with 2, domain errors with 3, numerical failures
/// with 4.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::Contract(_) => 2,
        Error::Domain(_)
        | Error::DegenerateBasePoint { .. }
        | Error::InvalidBasePoint { .. }
        | Error::InvalidCenter { .. }
        | Error::Collision { .. }
        | Error::InfeasibleSeed { .. }
        | Error::Io(_)
        | Error::Csv(_) => 3,
        Error::ContinuationGap { .. }
        | Error::DisconnectedEmbedding { .. }
        | Error::InconsistentOrdering(_)
        | Error::SectionTimeout { .. }
        | Error::InsufficientData(_)
        | Error::InconsistentModel { .. } => 4,
    }
}

/// The configuration as canonical JSON; the basis of the header hash.
pub fn config_json(cli: &Cli) -> String {
    serde_json::to_string(cli).expect("configuration serializes")
}

/// Runs a parsed job, writing its report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> crate::Result<()> {
    jobs::run(cli, out)
}

/// Parses `args` (program name first), runs the job and returns the exit
/// code. Errors go to stderr.
pub fn main_with<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(t) = cli.threads {
        // fails only if a pool already exists, which is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    match run(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
