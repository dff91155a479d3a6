use thiserror::Error;

/// Errors produced by the library.
///
/// The CLI maps these to process exit codes: parse errors exit 2, domain
/// errors 3, budget errors 4 and internal invariant failures 5.
#[derive(Debug, Error)]
pub enum Error {
    /// A name does not belong to the alphabet, or the alphabet declaration
    /// itself is malformed (duplicate names, zero arity, bad parity).
    #[error("alphabet error: {0}")]
    Alphabet(String),

    /// Syntax error while reading a term, element or config, with the byte
    /// offset into the input.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A documented precondition of an operation was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// A resource budget (degree, word count, reduction steps) was exceeded.
    #[error("budget exceeded: {0}")]
    Budget(String),

    /// An internal invariant failed; every occurrence is a bug. The main
    /// source is the runtime certificate attached to special bracketings.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
