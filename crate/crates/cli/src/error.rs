use l2alex_core::Error as CoreError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0}")]
    Usage(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("audit failed")]
    AuditFailed,
}

impl CliError {
    /// 2 for bad input, 3 for unsupported knots, 4 for numeric failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e {
                CoreError::Unsupported(_) | CoreError::UndefinedLambda(_) => 3,
                CoreError::Numeric(_) => 4,
                _ => 2,
            },
            CliError::Usage(_) => 2,
            CliError::Io(_) | CliError::AuditFailed => 1,
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(std::io::Error::other(e))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(std::io::Error::other(e))
    }
}

pub type CliResult<T> = Result<T, CliError>;
