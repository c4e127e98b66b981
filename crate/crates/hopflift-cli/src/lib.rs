//! IO companion for the `hopflift` core: JSON/CSV file formats, SVG
//! rendering, and the command implementations behind the `hopflift`
//! binary (build, verify, compare, render, export, experiment-e5).

// Construction errors carry exact witness data by design.
#![allow(clippy::result_large_err)]

use hopflift::constructions::ConstructionError;
use thiserror::Error;

pub mod commands;
pub mod formats;
pub mod render;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    /// Malformed input: bad file contents, bad flags, bad parameters.
    #[error("input error: {0}")]
    Input(String),
    /// A builder refused to produce a configuration.
    #[error("construction error: {0}")]
    Construction(ConstructionError),
    /// The configuration is well-formed but fails verification.
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    /// Stable exit-code contract: 0 success, 1 verification or
    /// comparison failure, 2 usage/input/construction error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification(_) => 1,
            _ => 2,
        }
    }
}
