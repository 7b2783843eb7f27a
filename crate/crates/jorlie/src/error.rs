//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong in exact Jordan/Lie computations.
///
/// Partiality of conformal maps is *not* an error; see
/// [`crate::chart::Outcome`].
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("element is not a unit: {0}")]
    NonUnit(String),

    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },

    #[error("pair ({x}, {y}) is not quasi-invertible")]
    NotQuasiInvertible { x: String, y: String },

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    #[error("transformation is not structural: {0}")]
    NotStructural(String),

    #[error("point is not a member of the space: {0}")]
    NotMember(String),

    #[error("point is outside the domain of the map: {0}")]
    OutOfDomain(String),

    #[error("(e+, e-) is not an idempotent pair: {0}")]
    NotIdempotent(String),

    #[error("element does not lie in the fiber: {0}")]
    NotInFiber(String),

    #[error("square is singular at {0}")]
    SingularSquare(String),

    #[error("complement has wrong dimension: expected {expected}, got {got}")]
    DimensionDrop { expected: usize, got: usize },

    #[error("parse error: {0}")]
    ParseError(String),

    #[error("unknown instance: {0}")]
    UnknownInstance(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
