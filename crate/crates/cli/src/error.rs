use std::io;

use thiserror::Error;

use crate::fnspec::ParseError;

/// Exit code 2 for usage problems, 1 for failed numerical checks.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("check failed: {0}")]
    Check(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Check(_) => 1,
            Self::Usage(_) | Self::Io(_) => 2,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        Self::Usage(e.to_string())
    }
}

impl From<backshift_core::Error> for CliError {
    fn from(e: backshift_core::Error) -> Self {
        Self::Usage(e.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        Self::Io(io::Error::other(e))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        Self::Io(io::Error::other(e))
    }
}

pub type CliResult<T> = Result<T, CliError>;
