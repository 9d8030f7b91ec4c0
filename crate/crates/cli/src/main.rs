use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use geosep_cli::bench::bench_separator;
use geosep_cli::generate::{generate, GenerateParams, Generator};
use geosep_cli::solve::{diagnostic_dump, solve, RunOptions, SolverKind};
use geosep_cli::{CliError, InstanceFile, Kind};
use geosep_core::{SeparatorError, SolveConfig};

#[derive(Parser)]
#[command(name = "geosep", version, about = "Separator-based solvers for unit-height rectangles and unit discs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Rects,
    Points,
}

#[derive(Clone, Copy, ValueEnum)]
enum GeneratorArg {
    Uniform,
    Clustered,
    Chain,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolverArg {
    MisExact,
    MisPtas,
    PierceExact,
    PiercePtas,
    CoverExact,
    CoverPtas,
}

impl From<SolverArg> for SolverKind {
    fn from(s: SolverArg) -> Self {
        match s {
            SolverArg::MisExact => SolverKind::MisExact,
            SolverArg::MisPtas => SolverKind::MisPtas,
            SolverArg::PierceExact => SolverKind::PierceExact,
            SolverArg::PiercePtas => SolverKind::PiercePtas,
            SolverArg::CoverExact => SolverKind::CoverExact,
            SolverArg::CoverPtas => SolverKind::CoverPtas,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Write a seeded random instance.
    Generate {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "uniform")]
        generator: GeneratorArg,
        #[arg(long, default_value_t = 10.0)]
        width: f64,
        #[arg(long, default_value_t = 10.0)]
        height: f64,
        #[arg(long, default_value_t = 4)]
        clusters: usize,
        #[arg(long, default_value_t = 0.5)]
        spread: f64,
        /// Chain along a column instead of a row.
        #[arg(long)]
        vertical: bool,
        #[arg(long, default_value_t = 0.75)]
        step: f64,
        #[arg(long, default_value_t = 0.5)]
        min_width: f64,
        #[arg(long, default_value_t = 2.0)]
        max_width: f64,
        #[arg(long, default_value_t = 0.001)]
        resolution: f64,
        /// Output file; stdout when omitted.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Solve an instance and print a JSON report.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum)]
        solver: SolverArg,
        #[arg(long, default_value_t = 0.5)]
        epsilon: f64,
        #[arg(long, default_value_t = 4)]
        t0: usize,
        #[arg(long, default_value_t = 3.0)]
        c0: f64,
        #[arg(long, default_value_t = 3)]
        budget: usize,
        /// Recorded in the report.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Compare against the brute-force oracle when the instance is small enough.
        #[arg(long)]
        oracle_check: bool,
        /// Print every separator call to stderr.
        #[arg(long)]
        trace: bool,
        /// Where to write the diagnostic dump if separation fails.
        #[arg(long, default_value = "geosep-separator-failure.jsonl")]
        dump: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Separate every matching instance recursively and tabulate each call as CSV.
    BenchSeparator {
        pattern: String,
        /// Components at or below this measure are not separated further.
        #[arg(long, default_value_t = 1)]
        leaf_mu: usize,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

fn write_output(out: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            source: e,
        }),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| CliError::Io {
            path: "<stdout>".into(),
            source: e,
        }),
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Generate {
            kind,
            n,
            seed,
            generator,
            width,
            height,
            clusters,
            spread,
            vertical,
            step,
            min_width,
            max_width,
            resolution,
            out,
        } => {
            let kind = match kind {
                KindArg::Rects => Kind::Rects,
                KindArg::Points => Kind::Points,
            };
            let generator = match generator {
                GeneratorArg::Uniform => Generator::Uniform { width, height },
                GeneratorArg::Clustered => Generator::Clustered {
                    clusters,
                    spread,
                    width,
                    height,
                },
                GeneratorArg::Chain => Generator::Chain { vertical, step },
            };
            let params = GenerateParams {
                min_width,
                max_width,
                resolution,
                ..GenerateParams::new(kind, n, seed, generator)
            };
            write_output(&out, &generate(&params)?.to_jsonl())?;
            Ok(0)
        }
        Command::Solve {
            file,
            solver,
            epsilon,
            t0,
            c0,
            budget,
            seed,
            oracle_check,
            trace,
            dump,
            out,
        } => {
            let inst = InstanceFile::read(&file)?;
            let opts = RunOptions {
                solver: solver.into(),
                config: SolveConfig {
                    epsilon,
                    base_threshold: t0,
                    ptas_leaf_constant: c0,
                    enum_budget_factor: budget,
                },
                seed,
                oracle_check,
                trace,
            };
            let report = match solve(&inst, &opts) {
                Ok(r) => r,
                Err(e) => {
                    if let Some(SeparatorError::NoSeparatorFound(diag)) = e.separator_error() {
                        std::fs::write(&dump, diagnostic_dump(&inst, diag)).map_err(|err| CliError::Io {
                            path: dump.display().to_string(),
                            source: err,
                        })?;
                        eprintln!("diagnostic written to {}", dump.display());
                    }
                    return Err(e);
                }
            };
            let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
            text.push('\n');
            write_output(&out, &text)?;
            if !report.feasible {
                eprintln!("solution failed the feasibility check");
                return Ok(2);
            }
            if !report.ok() {
                eprintln!("solution disagrees with the oracle");
                return Ok(2);
            }
            Ok(0)
        }
        Command::BenchSeparator { pattern, leaf_mu, out } => {
            let summary = match &out {
                Some(path) => {
                    let f = std::fs::File::create(path).map_err(|e| CliError::Io {
                        path: path.display().to_string(),
                        source: e,
                    })?;
                    bench_separator(&pattern, leaf_mu, f)?
                }
                None => bench_separator(&pattern, leaf_mu, std::io::stdout().lock())?,
            };
            eprintln!(
                "{} files, {} separator calls, max cost/sqrt(l*mu) = {:.4}, {} contract violations",
                summary.files, summary.rows, summary.max_ratio, summary.violations
            );
            Ok(if summary.violations == 0 { 0 } else { 2 })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
