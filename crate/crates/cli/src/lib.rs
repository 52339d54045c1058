//! Command-line front end: verification suites with text and JSON reports,
//! exports of the flip graph, Stokes data and mutated charts.
//!
//! Exit codes: 0 when everything passes, 1 on a failed check, 2 on usage
//! or input errors.

pub mod acceptance;
pub mod export;
pub mod report;
pub mod suites;

use okamoto_cluster::ClusterError;
use okamoto_convolution::ConvolutionError;
use okamoto_painleve::PainleveError;
use thiserror::Error;

pub use report::{CheckRecord, SuiteReport};
pub use suites::{run_one, run_suite, Options, Suite};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Cluster(#[from] ClusterError),
    #[error(transparent)]
    Convolution(#[from] ConvolutionError),
    #[error(transparent)]
    Painleve(#[from] PainleveError),
    #[error("{0}")]
    Input(String),
}

pub fn read_file(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_string(), source })
}
