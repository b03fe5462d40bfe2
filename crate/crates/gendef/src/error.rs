use thiserror::Error;

/// Crate-wide error type.
///
/// The CLI maps these onto process exit codes: parse/input errors exit with
/// 2, resource limits with 3, precondition violations with 4 and internal
/// invariant failures with 1.
#[derive(Debug, Error)]
pub enum Error {
    /// A text input (DFA or DAG file) could not be parsed.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Structurally invalid input (bad state id, duplicate letter, ...).
    #[error("input error: {0}")]
    Input(String),

    /// Two transformations of different degree were combined.
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),

    /// A configured size or arithmetic limit was exceeded.
    #[error("resource limit exceeded: {0}")]
    Resource(String),

    /// An operation was called outside its stated precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A property that is supposed to hold unconditionally failed; this
    /// always indicates a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Exit code the CLI uses for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Input(_) | Error::Dimension(..) | Error::Io(_) => 2,
            Error::Resource(_) => 3,
            Error::Precondition(_) => 4,
            Error::Internal(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
