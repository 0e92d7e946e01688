use thiserror::Error;

/// Requested size is above the exhaustive-enumeration limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("size {n} exceeds the enumeration limit {limit}")]
pub struct GuardExceeded {
    pub n: usize,
    pub limit: usize,
}

impl GuardExceeded {
    pub(crate) fn check(n: usize, limit: usize) -> Result<(), GuardExceeded> {
        if n > limit {
            Err(GuardExceeded { n, limit })
        } else {
            Ok(())
        }
    }
}

/// Malformed text form. `offset` is a byte offset into the input line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}
