use thiserror::Error;

/// Errors raised by lattice operations, constructions and analyses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A numeric argument falls outside its admissible range.
    #[error("{what} = {value} is out of range 0..={max}")]
    Range {
        what: &'static str,
        value: usize,
        max: usize,
    },
    /// The input is too large for the requested operation.
    #[error("capacity exceeded: {what} = {value}, limit is {limit}")]
    Capacity {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    /// Malformed arguments, mismatched grounds and similar caller mistakes.
    #[error("{0}")]
    Usage(String),
    /// A semantic precondition of the operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// Family text that could not be parsed.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn usage(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

pub(crate) fn capacity(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::Capacity { what, value, limit })
    } else {
        Ok(())
    }
}
