use std::path::Path;
use std::process::ExitCode;

use thiserror::Error;

/// Failures of a CLI invocation, each tied to a fixed exit status.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable, malformed or semantically invalid configuration (exit 2).
    #[error("config error: {0}")]
    Config(String),

    /// The numerical contract of the integrator was violated (exit 3).
    #[error("numerical contract violation: {0}")]
    Numerical(String),

    /// Output could not be written (exit 4).
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::Io(_) => 4,
        }
    }

    pub(crate) fn io(path: &Path, err: std::io::Error) -> Self {
        CliError::Io(format!("{}: {err}", path.display()))
    }
}

impl From<siam_core::Error> for CliError {
    fn from(err: siam_core::Error) -> Self {
        if err.is_numerical_contract() {
            let mut msg = err.to_string();
            if let siam_core::Error::EvenGrid { .. } = err {
                msg.push_str(
                    " (grid.n_points must be odd so the grid splits into Simpson panel pairs)",
                );
            }
            CliError::Numerical(msg)
        } else {
            CliError::Config(err.to_string())
        }
    }
}

impl From<CliError> for ExitCode {
    fn from(err: CliError) -> Self {
        ExitCode::from(err.exit_code())
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
