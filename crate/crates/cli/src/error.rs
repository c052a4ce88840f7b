use std::io;
use std::path::PathBuf;

use tenpoint_core::DegenerateSeed;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("invalid document: {0}")]
    Schema(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Degenerate(#[from] DegenerateSeed),
    #[error("fuzz retry budget exhausted at seed {index}: {reasons}")]
    RetryBudget { index: usize, reasons: String },
}

impl CliError {
    /// 2 for degenerate seeds and exhausted budgets, 3 for I/O and format
    /// errors. Verification failures (1) are not errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Degenerate(_) | CliError::RetryBudget { .. } => 2,
            CliError::Parse(_) | CliError::Schema(_) | CliError::Io { .. } => 3,
        }
    }
}
