use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Walk(#[from] pauliwalk_core::WalkError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error("normalization breached: |total - 1| = {0:e}")]
    Normalization(f64),
    #[error("oracle check failed: {0}")]
    Oracle(String),
    #[error("check failed: {}", .0.join(", "))]
    ChecksFailed(Vec<String>),
    #[error("distributions differ: max abs diff {0:e}")]
    Mismatch(f64),
}

impl CliError {
    /// 2 for bad input, 3 for a broken internal invariant, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) | CliError::Walk(_) => 2,
            CliError::Normalization(_) | CliError::Oracle(_) => 3,
            CliError::Io { .. } | CliError::Parse { .. } | CliError::ChecksFailed(_) | CliError::Mismatch(_) => 1,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
