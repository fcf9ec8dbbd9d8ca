//! Command-line front end.

use std::ffi::OsString;
use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::Sign;
use crate::dynamics::sweep::linspace;
use crate::dynamics::{
    compare_analytic_numeric, compare_models, run_sweep, time_constancy, ComparisonReport, SweepRow, SweepSpec,
};
use crate::error::Error;
use crate::hamiltonian::Model;
use crate::output::write_csv;
use crate::states::InputState;
use crate::verify::{all_mandatory_pass, run_algebra_suite, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

/// A real number, optionally a multiple of π written with a `pi` suffix
/// (`0.25pi`, `pi`, `-pi`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Angle(pub f64);

impl FromStr for Angle {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        parse_real(s).map(Angle)
    }
}

fn parse_real(s: &str) -> Result<f64, String> {
    let t = s.trim();
    let value = match t.strip_suffix("pi") {
        Some(head) => {
            let factor = match head {
                "" | "+" => 1.0,
                "-" => -1.0,
                other => other
                    .trim_end_matches('*')
                    .parse::<f64>()
                    .map_err(|e| format!("'{s}': {e}"))?,
            };
            factor * std::f64::consts::PI
        }
        None => t.parse::<f64>().map_err(|e| format!("'{s}': {e}"))?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("'{s}' is not finite"))
    }
}

/// `min:max:count`, evenly spaced and inclusive.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridArg {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl GridArg {
    pub fn values(&self) -> Vec<f64> {
        linspace(self.min, self.max, self.count)
    }
}

impl FromStr for GridArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [min, max, count] = parts.as_slice() else {
            return Err(format!("'{s}' is not of the form min:max:count"));
        };
        let (min, max) = (parse_real(min)?, parse_real(max)?);
        let count: usize = count.parse().map_err(|e| format!("count '{count}': {e}"))?;
        if count == 0 {
            return Err("count must be at least 1".into());
        }
        if count > 1 && max <= min {
            return Err(format!("max {max} must exceed min {min}"));
        }
        Ok(GridArg { min, max, count })
    }
}

impl fmt::Display for GridArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.min, self.max, self.count)
    }
}

fn parse_epsilon(s: &str) -> Result<Sign, String> {
    match s.trim() {
        "+1" | "1" | "+" => Ok(Sign::Plus),
        "-1" | "-" => Ok(Sign::Minus),
        other => Err(format!("epsilon must be +1 or -1, got '{other}'")),
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "ybcorr",
    version,
    about = "Quantum correlations under Yang-Baxter two-qubit Hamiltonians"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the algebraic relations of the generators, R-matrices and Hamiltonians.
    VerifyAlgebra(VerifyArgs),
    /// Evolve one state to one time and print its measures as CSV.
    Measure(MeasureArgs),
    /// Evolve over a (p, scaled time) grid and write CSV.
    Sweep(SweepArgs),
    /// Write the grid behind one of the four published figures.
    Figures(FigureArgs),
    /// Compare numeric measures with the closed forms.
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct VerifyArgs {
    /// Override every gated tolerance.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u8).range(3..=4))]
    pub sites: u8,
}

#[derive(Debug, Args)]
pub struct PhysicsArgs {
    /// Phase angle; accepts a `pi` suffix.
    #[arg(long, default_value = "0.25pi", allow_hyphen_values = true)]
    pub phi: Angle,
    #[arg(long, default_value = "0.5pi", allow_hyphen_values = true)]
    pub theta: Angle,
    /// B = (mu1 + mu2)/2
    #[arg(long = "B", default_value_t = 1.0, allow_negative_numbers = true)]
    pub b: f64,
    /// J = (mu1 - mu2)/2
    #[arg(long = "J", default_value_t = 1.0, allow_negative_numbers = true)]
    pub j: f64,
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub g: f64,
    /// Sign in h3, +1 or -1.
    #[arg(long, value_parser = parse_epsilon, allow_hyphen_values = true)]
    pub epsilon: Option<Sign>,
}

#[derive(Debug, Args)]
pub struct ModelStateArgs {
    #[arg(long)]
    pub model: Model,
    #[arg(long)]
    pub state: InputState,
}

#[derive(Debug, Args)]
pub struct MeasureArgs {
    #[command(flatten)]
    pub target: ModelStateArgs,
    #[arg(long, allow_negative_numbers = true)]
    pub p: f64,
    /// Scaled time: Bt for h1 and h3, Jt for h2.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub time: Angle,
    #[command(flatten)]
    pub physics: PhysicsArgs,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long, default_value = "0:1:101", allow_hyphen_values = true)]
    pub p_grid: GridArg,
    /// Scaled time grid; bounds accept a `pi` suffix.
    #[arg(long, default_value = "0:pi:201", allow_hyphen_values = true)]
    pub time_grid: GridArg,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub target: ModelStateArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub physics: PhysicsArgs,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FigureId {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
}

impl FigureId {
    pub fn spec(self) -> SweepSpec {
        let (model, state) = match self {
            FigureId::Fig1 => (Model::H1, InputState::Werner),
            FigureId::Fig2 => (Model::H1, InputState::Xlike),
            FigureId::Fig3 => (Model::H2, InputState::Werner),
            FigureId::Fig4 => (Model::H2, InputState::Xlike),
        };
        let mut spec = SweepSpec::new(model, state);
        if self == FigureId::Fig3 {
            spec.time_grid = vec![std::f64::consts::FRAC_PI_4];
        }
        spec
    }
}

#[derive(Debug, Args)]
pub struct FigureArgs {
    pub figure: FigureId,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub target: ModelStateArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[command(flatten)]
    pub physics: PhysicsArgs,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
}

fn build_spec(target: &ModelStateArgs, physics: &PhysicsArgs, p_grid: Vec<f64>, time_grid: Vec<f64>) -> SweepSpec {
    if physics.epsilon.is_some() && target.model != Model::H3 {
        eprintln!("warning: --epsilon only affects h3; ignored for {}", target.model);
    }
    SweepSpec {
        model: target.model,
        state: target.state,
        p_grid,
        time_grid,
        phi: physics.phi.0,
        theta: physics.theta.0,
        b: physics.b,
        j: physics.j,
        g: physics.g,
        epsilon: physics.epsilon.unwrap_or_default(),
    }
}

enum Failure {
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit(rows: &[SweepRow], out: Option<&PathBuf>) -> Result<(), Failure> {
    let result = match out {
        Some(path) => File::create(path).and_then(|f| write_csv(BufWriter::new(f), rows)),
        None => write_csv(io::stdout().lock(), rows),
    };
    result.map_err(|e| match out {
        Some(path) => Failure::Io(format!("{}: {e}", path.display())),
        None => Failure::Io(e.to_string()),
    })
}

fn print_report(out: &mut impl Write, report: &ComparisonReport, tol: f64) -> io::Result<bool> {
    writeln!(out, "{} ({} rows)", report.title, report.rows)?;
    let mut ok = true;
    for m in &report.measures {
        let pass = m.max < tol;
        ok &= pass;
        writeln!(
            out,
            "  {} {:<12} max {:.3e}  at p = {}, scaled time = {}  (tol {:.1e})",
            if pass { "PASS" } else { "FAIL" },
            m.measure,
            m.max,
            m.worst_p,
            m.worst_time,
            tol
        )?;
    }
    Ok(ok)
}

fn run_command(command: Command) -> Result<i32, Failure> {
    match command {
        Command::VerifyAlgebra(args) => {
            let results = run_algebra_suite(&VerifyConfig {
                tol: args.tol,
                sites: args.sites as usize,
            })?;
            let mut out = io::stdout().lock();
            for r in &results {
                writeln!(out, "{r}").map_err(|e| Failure::Io(e.to_string()))?;
            }
            let ok = all_mandatory_pass(&results);
            let failed = results.iter().filter(|r| !r.passed()).count();
            writeln!(
                out,
                "{}",
                if ok {
                    "all mandatory checks passed".to_string()
                } else {
                    format!("{failed} mandatory check(s) failed")
                }
            )
            .map_err(|e| Failure::Io(e.to_string()))?;
            Ok(if ok { EXIT_OK } else { EXIT_FAILURE })
        }
        Command::Measure(args) => {
            let spec = build_spec(&args.target, &args.physics, vec![args.p], vec![args.time.0]);
            emit(&run_sweep(&spec)?, None)?;
            Ok(EXIT_OK)
        }
        Command::Sweep(args) => {
            let spec = build_spec(
                &args.target,
                &args.physics,
                args.grid.p_grid.values(),
                args.grid.time_grid.values(),
            );
            emit(&run_sweep(&spec)?, args.out.as_ref())?;
            Ok(EXIT_OK)
        }
        Command::Figures(args) => {
            let rows = run_sweep(&args.figure.spec())?;
            emit(&rows, args.out.as_ref())?;
            let worst = rows.iter().filter_map(|r| r.discrepancy).fold(0.0, f64::max);
            eprintln!(
                "{:?}: {} rows, max |numeric - analytic| = {:.3e}",
                args.figure,
                rows.len(),
                worst
            );
            Ok(EXIT_OK)
        }
        Command::Compare(args) => {
            let spec = build_spec(
                &args.target,
                &args.physics,
                args.grid.p_grid.values(),
                args.grid.time_grid.values(),
            );
            let mut reports = Vec::new();
            if spec.model == Model::H3 {
                let reference = SweepSpec {
                    model: Model::H1,
                    ..spec.clone()
                };
                reports.push(compare_models(&spec, &reference)?);
            } else {
                reports.push(compare_analytic_numeric(&spec)?);
                if spec.model == Model::H2 && spec.state == InputState::Werner {
                    reports.push(time_constancy(&spec)?);
                }
            }
            let mut out = io::stdout().lock();
            let mut ok = true;
            for report in &reports {
                ok &= print_report(&mut out, report, args.tol).map_err(|e| Failure::Io(e.to_string()))?;
            }
            Ok(if ok { EXIT_OK } else { EXIT_FAILURE })
        }
    }
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run_command(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            EXIT_IO
        }
    }
}
