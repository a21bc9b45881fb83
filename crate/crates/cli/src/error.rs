use crwb_core::Error;
use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error("invalid document: {0}")]
    Document(String),

    #[error("{0}")]
    Engine(#[from] Error),
}

impl CliError {
    /// Errors raised while turning a document into a CR algebra.
    pub fn from_structure(e: Error) -> Self {
        CliError::Document(e.to_string())
    }

    /// Maps onto the exit-code contract: 1 for a failed computation,
    /// 2 for a rejected document, 3 for bad flags.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 3,
            CliError::Document(_) => 2,
            CliError::Engine(Error::OrderOutOfRange { .. } | Error::InvalidK(_)) => 3,
            CliError::Engine(_) => 1,
        }
    }
}
