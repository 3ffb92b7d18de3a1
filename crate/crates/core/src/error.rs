use thiserror::Error;

/// Failures raised by constructors and typed operations.
///
/// Axiom violations are never errors; checkers return a [`crate::Report`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("typing error at {at}: {msg}")]
    Typing { at: String, msg: String },
    #[error("invariant `{identity}` fails at {witness}")]
    Invariant { identity: String, witness: String },
    #[error("validation error: {0}")]
    Validation(String),
    #[error("capability error: {0}")]
    Capability(String),
    #[error("unknown reference `{0}`")]
    Unknown(String),
    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },
}

impl CoreError {
    pub fn typing(at: impl Into<String>, msg: impl Into<String>) -> Self {
        CoreError::Typing { at: at.into(), msg: msg.into() }
    }

    pub fn invariant(identity: impl Into<String>, witness: impl Into<String>) -> Self {
        CoreError::Invariant { identity: identity.into(), witness: witness.into() }
    }
}

pub type Result<T> = std::result::Result<T, CoreError>;
