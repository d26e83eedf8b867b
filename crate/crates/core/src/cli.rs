//! Command-line front end. [`run`] is the whole program minus process setup,
//! so tests can drive it in-process.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::bounds::{
    certify, check_hypothesis, make_extremal, margin_at, BoundContext, BoundVerdict, BoundsError,
    ExtremalParams, Side, TheoremId,
};
use crate::circlescan::CircleGrid;
use crate::harness::{run_campaign, GeneratorSpec, HarnessError};
use crate::instance::InstanceFile;
use crate::ratfun::{RationalFunction, ZeroLocation};

pub const DEFAULT_GRID: usize = 1024;
pub const GRID_ENV: &str = "RATBOUND_GRID";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;
pub const EXIT_DEGENERATE: i32 = 4;

pub const CURVE_HEADER: &str = "theta,deriv_modulus,bound_rhs,margin";

#[derive(Debug, Parser)]
#[command(
    name = "ratbound",
    version,
    about = "Derivative bounds for rational functions with prescribed poles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check one inequality on an instance file.
    Certify(InstanceArgs),
    /// Certify a batch of random admissible instances.
    Campaign(CampaignArgs),
    /// Write theta, |r'|, bound and margin at every grid point as CSV.
    Curves {
        #[command(flatten)]
        common: InstanceArgs,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the equality-case instance of a theorem to a file.
    Extremal(ExtremalArgs),
}

#[derive(Debug, Args)]
struct InstanceArgs {
    #[arg(long)]
    instance: PathBuf,
    #[arg(long)]
    theorem: TheoremId,
    /// Grid points on the circle; defaults to $RATBOUND_GRID, then 1024.
    #[arg(long)]
    grid: Option<usize>,
    /// Zero-region radius; overrides the instance file.
    #[arg(long)]
    k: Option<f64>,
}

#[derive(Debug, Args)]
struct CampaignArgs {
    #[arg(long)]
    theorem: TheoremId,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    t: usize,
    #[arg(long, default_value_t = 1.0)]
    k: f64,
    #[arg(long)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    grid: Option<usize>,
    #[arg(long, default_value_t = 0.0)]
    p_boundary: f64,
    /// Zeros forced onto |z| = k; defaults to 1 for theorems that need one.
    #[arg(long)]
    boundary_zeros: Option<usize>,
    #[arg(long, default_value_t = 1.1)]
    pole_min: f64,
    #[arg(long, default_value_t = 4.0)]
    pole_max: f64,
    #[arg(long, default_value_t = 3.0)]
    zero_spread: f64,
    /// Report file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ExtremalArgs {
    #[arg(long)]
    theorem: TheoremId,
    #[arg(long)]
    a: f64,
    #[arg(long, default_value_t = 1.0)]
    k: f64,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1.0)]
    h: f64,
    #[arg(long, default_value_t = 0.0)]
    alpha: f64,
    #[arg(long)]
    out: PathBuf,
}

/// Failure carrying its exit code.
struct Failure(i32, String);

impl From<BoundsError> for Failure {
    fn from(e: BoundsError) -> Self {
        let code = match e {
            BoundsError::HypothesisViolated { .. } => EXIT_HYPOTHESIS,
            BoundsError::Degenerate { .. } => EXIT_DEGENERATE,
            _ => EXIT_USAGE,
        };
        Failure(code, e.to_string())
    }
}

impl From<HarnessError> for Failure {
    fn from(e: HarnessError) -> Self {
        let code = match e {
            HarnessError::HypothesisMismatch { .. } => EXIT_HYPOTHESIS,
            HarnessError::Instance { ref source, .. } => Failure::from(source.clone()).0,
            _ => EXIT_USAGE,
        };
        Failure(code, e.to_string())
    }
}

fn usage(msg: impl ToString) -> Failure {
    Failure(EXIT_USAGE, msg.to_string())
}

/// Runs the program on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Certify(a) => cmd_certify(&a, out),
        Command::Campaign(a) => cmd_campaign(&a, out),
        Command::Curves { common, out: path } => cmd_curves(&common, path.as_deref(), out),
        Command::Extremal(a) => cmd_extremal(&a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

/// Grid size from the flag, then the environment, then the default.
fn resolve_grid(flag: Option<usize>) -> Result<CircleGrid, Failure> {
    let count = match flag {
        Some(c) => c,
        None => match std::env::var(GRID_ENV) {
            Ok(s) => s
                .trim()
                .parse()
                .map_err(|_| usage(format!("{GRID_ENV}={s} is not an integer")))?,
            Err(_) => DEFAULT_GRID,
        },
    };
    CircleGrid::unit(count).map_err(usage)
}

fn load_instance(args: &InstanceArgs) -> Result<(RationalFunction, f64), Failure> {
    let file = InstanceFile::load(&args.instance).map_err(usage)?;
    let r = file.to_function().map_err(usage)?;
    Ok((r, args.k.or(file.k).unwrap_or(1.0)))
}

fn write_output(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), Failure> {
    match path {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| usage(format!("cannot write {}: {e}", p.display())))
        }
        None => out.write_all(text.as_bytes()).map_err(usage),
    }
}

fn verdict_code(v: &BoundVerdict) -> i32 {
    if v.degenerate.is_some() {
        EXIT_DEGENERATE
    } else if v.violations > 0 {
        EXIT_VIOLATION
    } else {
        EXIT_PASS
    }
}

fn format_verdict(v: &BoundVerdict, r: &RationalFunction) -> String {
    let c = &v.context;
    let status = match verdict_code(v) {
        EXIT_PASS => "pass",
        EXIT_VIOLATION => "violation",
        _ => "degenerate",
    };
    let mut s = String::new();
    let _ = writeln!(s, "theorem: {}", v.theorem);
    let _ = writeln!(s, "n: {}", r.n());
    let _ = writeln!(s, "t: {}", r.t());
    let _ = writeln!(s, "k: {}", c.k);
    let _ = writeln!(s, "norm: {:.16e}", c.norm);
    let _ = writeln!(s, "m: {:.16e}", c.m);
    let _ = writeln!(s, "grid: {}", v.grid_count);
    let _ = writeln!(s, "min_margin: {:.16e}", v.min_margin);
    let _ = writeln!(s, "worst_theta: {:.16e}", v.worst_theta);
    let _ = writeln!(s, "violations: {}", v.violations);
    let _ = writeln!(s, "skipped: {}", v.skipped_points);
    if let Some(reason) = &v.degenerate {
        let _ = writeln!(s, "degenerate: {reason}");
    }
    let _ = writeln!(s, "status: {status}");
    s
}

fn cmd_certify(args: &InstanceArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let grid = resolve_grid(args.grid)?;
    let (r, k) = load_instance(args)?;
    let v = certify(args.theorem, &r, k, &grid)?;
    write_output(None, &format_verdict(&v, &r), out)?;
    Ok(verdict_code(&v))
}

fn cmd_curves(
    args: &InstanceArgs,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let grid = resolve_grid(args.grid)?;
    let (r, k) = load_instance(args)?;
    let id = args.theorem;
    let k = check_hypothesis(id, &r, k)?;
    let ctx = BoundContext::compute(id, &r, k, grid.count())?;
    let mut csv = String::with_capacity(80 * (grid.count() + 1));
    csv.push_str(CURVE_HEADER);
    csv.push('\n');
    for (theta, z) in grid.points() {
        let pb = margin_at(id, &ctx, &r, z)?;
        let _ = writeln!(
            csv,
            "{theta:.16e},{:.16e},{:.16e},{:.16e}",
            pb.deriv_modulus, pb.rhs, pb.margin
        );
    }
    write_output(path, &csv, out)?;
    Ok(EXIT_PASS)
}

fn cmd_campaign(args: &CampaignArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let grid = resolve_grid(args.grid)?;
    let hyp = args.theorem.hypothesis();
    let region = match hyp.side {
        Side::Upper => ZeroLocation::AllOutsideOrOn(args.k),
        Side::Lower => ZeroLocation::AllInsideOrOn(args.k),
    };
    let mut spec = GeneratorSpec::new(args.n, args.t, region, args.seed, args.count);
    spec.pole_annulus = (args.pole_min, args.pole_max);
    spec.p_boundary = args.p_boundary;
    spec.zero_spread = args.zero_spread;
    spec.min_boundary_zeros = args
        .boundary_zeros
        .unwrap_or(usize::from(hyp.zero_on_circle && args.t > 0));
    spec.validate()?;
    let report = run_campaign(&spec, args.theorem, &grid)?;
    let json = report.to_json() + "\n";
    match &args.out {
        Some(path) => {
            write_output(Some(path), &json, out)?;
            let summary = format!(
                "theorem: {}\ninstances: {}\nmin_margin: {}\nviolations: {}\ndegenerate: {}\nreport: {}\n",
                report.theorem,
                report.instances,
                report.min_margin.map_or("none".to_string(), |m| format!("{m:.16e}")),
                report.violations,
                report.degenerate,
                path.display()
            );
            write_output(None, &summary, out)?;
        }
        None => write_output(None, &json, out)?,
    }
    Ok(if report.passed() {
        EXIT_PASS
    } else {
        EXIT_VIOLATION
    })
}

fn cmd_extremal(args: &ExtremalArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let p = ExtremalParams::new(args.a, args.k, args.t.unwrap_or(args.n), args.n)
        .with_shift(args.h, args.alpha);
    let ex = make_extremal(args.theorem, &p).map_err(usage)?;
    let file = InstanceFile::from_function(&ex.function, Some(ex.k));
    file.save(&args.out).map_err(usage)?;
    write_output(None, &format!("wrote {}\n", args.out.display()), out)?;
    Ok(EXIT_PASS)
}
