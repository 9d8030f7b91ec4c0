//! Instance files, generators, solver runs, and the separator benchmark
//! behind the `geosep` binary.

pub mod bench;
pub mod generate;
pub mod instance;
pub mod solve;

use geosep_core::{SeparatorError, SolveError};
use thiserror::Error;

pub use instance::{InstanceFile, Items, Kind, Meta};

/// Environment variable holding the worker count for batch runs.
pub const WORKERS_ENV: &str = "GEOSEP_WORKERS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed instance at line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("solver {solver} needs a {expected} instance, got {got}")]
    KindMismatch { solver: String, expected: Kind, got: Kind },
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Separator(#[from] SeparatorError),
    #[error("bad file pattern: {0}")]
    Pattern(String),
    #[error("csv output: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// 3 for separator failures, 4 for everything else (bad input).
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Separator(_) | CliError::Solve(SolveError::Separator(_)) => 3,
            _ => 4,
        }
    }

    pub fn separator_error(&self) -> Option<&SeparatorError> {
        match self {
            CliError::Separator(e) | CliError::Solve(SolveError::Separator(e)) => Some(e),
            _ => None,
        }
    }
}

/// Worker count from the environment, or the rayon default when unset or
/// unparsable.
pub fn worker_count() -> Option<usize> {
    std::env::var(WORKERS_ENV).ok()?.trim().parse().ok().filter(|&n| n > 0)
}
