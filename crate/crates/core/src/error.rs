use thiserror::Error;

use crate::value::{Signature, Slot};

/// Errors raised while building or transforming refined values.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ValueError {
    #[error("component [{lo}, {hi}] is not a subinterval of [0, 1]")]
    OutOfRange { lo: f64, hi: f64 },

    #[error("{block} block has {found} components, signature {sig} expects {expected}")]
    LengthMismatch {
        sig: Signature,
        block: char,
        expected: usize,
        found: usize,
    },

    #[error("signature counts must all be at least 1, got ({p},{r},{s})")]
    BadSignature { p: usize, r: usize, s: usize },

    #[error("slot {slot} is out of range for signature {sig}")]
    SlotOutOfRange { slot: Slot, sig: Signature },

    #[error("invalid dependency groups: {0}")]
    InvalidGroups(String),

    #[error("total mass is zero, normalization is undefined")]
    ZeroMass,

    #[error("normalization target must be a positive finite number, got {0}")]
    InvalidTarget(f64),

    #[error("normalized component {value} exceeds 1")]
    NormalizedOutOfRange { value: f64 },

    #[error("malformed value at column {column}: {message}")]
    Syntax { column: usize, message: String },
}

/// Errors raised by the n-valued connectives.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConnectiveError {
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("invalid priority order: {0}")]
    InvalidOrder(String),

    #[error("priority connectives require scalar components")]
    IntervalUnsupported,

    #[error("negation requires p = s, signature is {0}")]
    AsymmetricSignature(Signature),

    #[error("priority product puts mass {mass} on slot {slot}, which exceeds 1")]
    MassOverflow { slot: Slot, mass: f64 },
}

/// Errors raised by the finite symbolic logics and custom connective tables.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SymbolicError {
    #[error("unknown symbol `{0}`")]
    BadSymbol(String),

    #[error("alphabet must have between 2 and 6 symbols, got {0}")]
    BadSize(usize),

    #[error("duplicate symbol `{0}`")]
    Duplicate(String),

    #[error("line {line}: {message}")]
    Table { line: usize, message: String },
}
