use thiserror::Error;

/// Failure of a CLI command. The variant decides the process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Input could not be read or understood: bad syntax, malformed scalar,
    /// unknown name.
    #[error("parse error: {0}")]
    Parse(String),
    /// Input was understood but violates a domain rule.
    #[error("validation error: {0}")]
    Validation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Parse(_) => 3,
        }
    }

    /// Attach a location such as `line 4, vectors.psi[1]` to a core error.
    pub fn from_core(at: &str, err: qlogic_core::Error) -> Self {
        match err {
            qlogic_core::Error::ParseScalar { .. } => CliError::Parse(format!("{at}: {err}")),
            _ => CliError::Validation(format!("{at}: {err}")),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
