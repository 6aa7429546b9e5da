use thiserror::Error;

/// Errors produced by parsing and by operations with violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("ideal does not have finite colength: no pure power of {var}")]
    NotFiniteColength { var: char },

    #[error("expected an ideal in y,z only, but a generator uses x")]
    NotTwoVariables,

    #[error("{op}: argument out of domain: {msg}")]
    Domain { op: &'static str, msg: String },

    #[error("input ideal is not Borel-fixed")]
    NotBorel,

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    /// Two routes that must agree produced different values. Carries a
    /// machine-readable payload for the CLI's exit-1 contract.
    #[error("internal inconsistency in {context}: {detail}")]
    Inconsistency {
        context: &'static str,
        detail: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
