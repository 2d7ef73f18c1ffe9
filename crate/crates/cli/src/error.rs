use std::path::PathBuf;

use hup_core::HupError;
use thiserror::Error;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_CHECK_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_IO: u8 = 3;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("{0}")]
    Usage(String),
    #[error("invalid scenario: {0}")]
    Scenario(String),
    #[error(transparent)]
    Core(#[from] HupError),
    #[error("i/o error on {}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl LabError {
    /// Stable process exit status for this error.
    ///
    /// Quadrature that cannot reach its target means a check could not be
    /// certified, so it maps to the check-fail status; every other module
    /// error is a violated precondition.
    pub fn exit_code(&self) -> u8 {
        match self {
            LabError::Usage(_) | LabError::Scenario(_) => EXIT_USAGE,
            LabError::Core(HupError::QuadratureFailed { .. } | HupError::RootNotFound(_)) => EXIT_CHECK_FAIL,
            LabError::Core(_) => EXIT_USAGE,
            LabError::Io { .. } => EXIT_IO,
        }
    }
}

pub type LabResult<T> = std::result::Result<T, LabError>;
