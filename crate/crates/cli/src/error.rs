use std::path::PathBuf;

use thiserror::Error;

use crate::parse::ParseError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_NOT_A_SPLITTING: i32 = 3;
pub const EXIT_UNSUPPORTED: i32 = 4;
pub const EXIT_VERIFICATION: i32 = 5;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input: {0}")]
    Parse(#[from] ParseError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Core(#[from] frobsplit_core::Error),
    #[error("invalid document: {0}")]
    Document(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("VERIFICATION_FAILED: {0}")]
    Verification(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> CliError {
        CliError::Io { path: path.into(), source }
    }

    pub fn exit_code(&self) -> i32 {
        use frobsplit_core::Error as E;
        match self {
            CliError::Parse(_)
            | CliError::Io { .. }
            | CliError::Json(_)
            | CliError::Document(_)
            | CliError::Argument(_) => EXIT_INPUT,
            CliError::Verification(_) => EXIT_VERIFICATION,
            CliError::Core(e) => match e {
                E::NotASplitting { .. } => EXIT_NOT_A_SPLITTING,
                E::Unsupported { .. } | E::BudgetExceeded { .. } | E::NotConstructible(_) => EXIT_UNSUPPORTED,
                E::VerificationFailed(_) => EXIT_VERIFICATION,
                E::Internal(_) => EXIT_INTERNAL,
                _ => EXIT_INPUT,
            },
        }
    }
}
