//! Error type shared across the crate.

use std::fmt;

/// Errors produced by layer math, configuration parsing, data IO, and
/// checkpoint handling.
#[derive(Debug)]
pub enum Error {
    /// Dimension mismatch between operands.
    Shape { op: &'static str, detail: String },
    /// Invalid argument outside of shape problems (k > n, empty selection, ...).
    Invalid { op: &'static str, detail: String },
    /// A computation produced a non-finite value where finiteness is required.
    NonFinite { op: &'static str, detail: String },
    /// Config file problem, with the 1-based line number when known.
    Config { line: Option<usize>, detail: String },
    /// Checkpoint format/compatibility problem.
    Checkpoint(String),
    /// Not enough data to compute the requested statistic.
    Insufficient { op: &'static str, detail: String },
    Io(std::io::Error),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Shape { op, detail } => write!(f, "{op}: shape mismatch: {detail}"),
            Error::Invalid { op, detail } => write!(f, "{op}: {detail}"),
            Error::NonFinite { op, detail } => write!(f, "{op}: non-finite value: {detail}"),
            Error::Config { line: Some(n), detail } => write!(f, "config line {n}: {detail}"),
            Error::Config { line: None, detail } => write!(f, "config: {detail}"),
            Error::Checkpoint(detail) => write!(f, "checkpoint: {detail}"),
            Error::Insufficient { op, detail } => write!(f, "{op}: insufficient data: {detail}"),
            Error::Io(e) => write!(f, "io: {e}"),
        }
    }
}

impl std::error::Error for Error {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            Error::Io(e) => Some(e),
            _ => None,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e)
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn shape_err(op: &'static str, detail: impl Into<String>) -> Error {
    Error::Shape { op, detail: detail.into() }
}

pub(crate) fn invalid_err(op: &'static str, detail: impl Into<String>) -> Error {
    Error::Invalid { op, detail: detail.into() }
}
