use thiserror::Error;

/// Failures of a command, sorted by the exit code they map to.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read input: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad group specification: {0}")]
    Spec(String),
    #[error(transparent)]
    Core(#[from] chowlim_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(chowlim_core::Error::CapExceeded { .. }) => 3,
            CliError::Core(e) if e.is_invariant_violation() => 4,
            _ => 2,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
