use thiserror::Error;

/// Errors surfaced by fallible toolkit operations.
///
/// Structural mismatches between rings (different variable sets, different
/// truncation precisions) are programming errors and panic instead, the same
/// way shape mismatches do in array libraries.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
