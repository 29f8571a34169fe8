use thiserror::Error;

/// Errors reported for invalid caller input.
///
/// Internal consistency violations (dimension mismatches, the alternating
/// subset sums failing their divisibility checks) panic instead: those can
/// only come from a bug, never from input.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Malformed edge-list text, with the 1-based offending line.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// Input outside the domain of an operation.
    #[error("{0}")]
    Domain(String),
    /// Sign-change scan found no real root in the search bracket.
    #[error("no real root found in [0, {bound}]")]
    NoRealRoot { bound: f64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
