use thiserror::Error;

/// Errors raised anywhere in the toolkit.
///
/// The variants are grouped by how a caller should react to them; the CLI
/// maps each group onto a fixed process exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-range input (dimension mismatch, unknown vertex, bad index).
    #[error("input error: {0}")]
    Input(String),
    /// A text input could not be parsed.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    /// A mathematical precondition of an operation does not hold.
    #[error("contract error: {0}")]
    Contract(String),
    /// A computation ran out of its budget (catalog size, time, iteration cap).
    #[error("budget exceeded: {0}")]
    Budget(String),
    /// A result that theory says cannot happen; reported rather than guessed around.
    #[error("anomaly: {0}")]
    Anomaly(String),
    /// The requested object does not exist (for example a construction witness).
    #[error("not found: {0}")]
    NotFound(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub fn anomaly(msg: impl Into<String>) -> Self {
        Error::Anomaly(msg.into())
    }

    /// Process exit code for this error: 2 for usage/contract problems,
    /// 3 for budget and resource signals.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Budget(_) => 3,
            _ => 2,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
