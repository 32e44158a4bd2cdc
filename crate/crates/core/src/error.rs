use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan matrix (a1={a1}, a2={a2}): {reason}")]
    InvalidCartan { a1: u32, a2: u32, reason: &'static str },

    #[error("index must be 1 or 2, got {0}")]
    BadIndex(u32),

    #[error("invalid order configuration: {0}")]
    InvalidConfig(&'static str),

    #[error("weights are not comparable within the configured bounds")]
    NotComparable,

    #[error("sigma must lie strictly between 0 and 1")]
    SigmaOutOfRange,

    #[error("malformed path: {0}")]
    MalformedPath(String),

    #[error("invalid LS path: direction {0} is not in the orbit of the shape")]
    NotInOrbit(String),

    #[error("invalid LS path: cuts are not strictly increasing from 0 to 1")]
    CutsNotMonotone,

    #[error("invalid LS path: no sigma-chain certified within bounds at cut {0}")]
    NotCertified(String),

    #[error("path endpoint {0} is not integral")]
    NonIntegral(String),

    #[error("evaluation time {0} is outside [0, 1]")]
    TimeOutOfRange(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("soundness audit failed: {0}")]
    Audit(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
