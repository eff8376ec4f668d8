//! The `colored-tsp` command line: `generate`, `solve`, `bench`, `render`.
//!
//! Exit codes: 0 success, 2 usage error, 3 refused by a size cap, 4 I/O or
//! parse failure.

use std::path::PathBuf;
use std::time::Duration;

use clap::{Parser, Subcommand};

use crate::bench::{run_bench, write_bench_csv, BenchConfig};
use crate::error::Error;
use crate::instance::generate;
use crate::io::{read_instance, read_report, write_instance, write_report};
use crate::render::write_svg;
use crate::solvers::{Algorithm, Limits};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "colored-tsp", version, about = "Colored Points TSP solvers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a seeded random instance.
    Generate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100.0)]
        width: f64,
        #[arg(long, default_value_t = 100.0)]
        height: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Solve an instance and write a JSON report.
    Solve {
        #[arg(long)]
        algo: Algorithm,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also render the tour as SVG.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Time algorithms over a grid of seeded instances and write CSV.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [10, 15, 20, 25])]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [4, 5, 6, 7, 8])]
        k: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 3])]
        seeds: Vec<u64>,
        #[arg(long, value_delimiter = ',', default_values_t = [Algorithm::ExactFixed, Algorithm::Approx])]
        algos: Vec<Algorithm>,
        #[arg(long, default_value_t = 100.0)]
        width: f64,
        #[arg(long, default_value_t = 100.0)]
        height: f64,
        /// Minimum wall time per timing repetition, in milliseconds.
        #[arg(long, default_value_t = 5)]
        min_batch_ms: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Render an instance, optionally with a solved tour, as SVG.
    Render {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Solver(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Solver(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Solver(e) if e.is_cap_refusal() => EXIT_CAP,
            Failure::Solver(_) => EXIT_IO,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Solver(e) => write!(f, "{e}"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(cli) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            eprintln!("colored-tsp: {f}");
            f.exit_code()
        }
    }
}

pub fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Generate {
            n,
            k,
            seed,
            width,
            height,
            out,
        } => {
            if k == 0 || n < k {
                return Err(Failure::Usage(format!(
                    "need n >= k >= 1, got n = {n}, k = {k}"
                )));
            }
            if !(width.is_finite() && height.is_finite() && width >= 0.0 && height >= 0.0) {
                return Err(Failure::Usage(
                    "width and height must be finite and >= 0".into(),
                ));
            }
            let instance = generate(n, k, seed, width, height)?;
            write_instance(&instance, &out)?;
        }
        Command::Solve {
            algo,
            input,
            out,
            svg,
        } => {
            let instance = read_instance(&input)?;
            let report = algo.solve(&instance, &Limits::from_env())?;
            write_report(&report, &out)?;
            if let Some(svg) = svg {
                write_svg(
                    svg,
                    &instance,
                    Some(&report.tour.order),
                    report.mcsc.as_ref(),
                )?;
            }
            eprintln!(
                "{}: perimeter {} in {:.6} s",
                report.algorithm, report.tour.perimeter, report.elapsed
            );
        }
        Command::Bench {
            n,
            k,
            seeds,
            algos,
            width,
            height,
            min_batch_ms,
            out,
        } => {
            let config = BenchConfig {
                ns: n,
                ks: k,
                seeds,
                algorithms: algos,
                width,
                height,
                limits: Limits::from_env(),
                min_batch: Duration::from_millis(min_batch_ms),
            };
            let rows = run_bench(&config, |r| match r.elapsed_s {
                Some(t) => eprintln!(
                    "n={} k={} seed={} {}: {:.6} s, perimeter {}",
                    r.n,
                    r.k,
                    r.seed,
                    r.algorithm,
                    t,
                    r.perimeter.unwrap_or(f64::NAN)
                ),
                None => eprintln!(
                    "n={} k={} seed={} {}: skipped",
                    r.n, r.k, r.seed, r.algorithm
                ),
            })?;
            write_bench_csv(&rows, &out)?;
        }
        Command::Render { input, report, out } => {
            let instance = read_instance(&input)?;
            let report = report.map(|p| read_report(p, &instance)).transpose()?;
            if let Some(r) = &report {
                for w in &r.warnings {
                    eprintln!("warning: {w}");
                }
            }
            write_svg(
                out,
                &instance,
                report.as_ref().map(|r| r.tour.order.as_slice()),
                report.as_ref().and_then(|r| r.mcsc.as_ref()),
            )?;
        }
    }
    Ok(())
}
