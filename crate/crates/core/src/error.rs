use thiserror::Error;

/// Errors raised by malformed input or misuse. Mathematical failures
/// (a relation that does not hold, a non-idempotent map) are reported as
/// data, never as errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("out of range: {0}")]
    Range(String),
    #[error("unknown {kind}: {name}")]
    Unknown { kind: &'static str, name: String },
    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("grading mismatch: {0}")]
    Grading(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors caused by the request itself (bad syntax, unknown
    /// names, out-of-range bounds) rather than by the mathematics.
    pub fn is_usage(&self) -> bool {
        !matches!(self, Error::Grading(_) | Error::Precondition(_))
    }

    pub(crate) fn unknown(kind: &'static str, name: impl Into<String>) -> Self {
        Error::Unknown { kind, name: name.into() }
    }
}
