//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable pair mismatch: expected {expected}, got {got}")]
    VarMismatch { expected: &'static str, got: &'static str },

    #[error("zero polynomial not allowed here: {0}")]
    ZeroInput(&'static str),

    #[error("singular Moebius change (determinant zero)")]
    SingularMoebius,

    #[error("polynomial division left a nonzero remainder: {0}")]
    InexactDivision(&'static str),

    #[error("parameterization is invalid: {0}")]
    BadParameterization(String),

    #[error("no valid second syzygy generator found; input may have gcd(a,b,c) != 1")]
    NoSecondGenerator,

    #[error("matrix size {size} exceeds the minor-enumeration guard {guard}")]
    EnumGuard { size: usize, guard: usize },

    #[error("hybrid index {j} out of range 0..={max}")]
    HybridIndexOutOfRange { j: usize, max: usize },

    #[error("singular factor extraction failed: {0}")]
    SingularFactors(String),

    #[error("identity check failed: {0}")]
    CheckFailed(String),

    #[error("rational-pair input is invalid: {0}")]
    BadRationalPair(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid input: {0}")]
    BadInput(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
