//! Crate-wide error type, bucketed by how the CLI reports failures.

/// Errors fall into three buckets that map onto CLI exit codes: syntax
/// (malformed input files), validation (structurally invalid algebras,
/// vertices that are not sinks, failed preconditions), and computation
/// (iteration caps exceeded, singular matrices, inputs outside the
/// supported class).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("computation error: {0}")]
    Computation(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn syntax(msg: impl Into<String>) -> Self {
        Error::Syntax(msg.into())
    }
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }
    pub fn computation(msg: impl Into<String>) -> Self {
        Error::Computation(msg.into())
    }

    /// Process exit code for the CLI: 1 validation, 2 computation, 3 I/O or syntax.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Validation(_) => 1,
            Error::Computation(_) => 2,
            Error::Syntax(_) | Error::Io(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
