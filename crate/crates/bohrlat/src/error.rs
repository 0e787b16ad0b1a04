//! Error type shared by all modules.

use thiserror::Error;

/// Errors surfaced by matrix, poset, and reconstruction operations.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("algebra shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix is not self-adjoint (deviation {0:.3e})")]
    NotSelfAdjoint(f64),

    #[error("element is not normal (deviation {0:.3e})")]
    NotNormal(f64),

    #[error("invalid resolution: {0}")]
    InvalidResolution(String),

    #[error("not a projection: {0}")]
    NotAProjection(String),

    #[error("effect-map output outside the effect interval: {0}")]
    OutsideEffects(String),

    #[error("projections are not orthogonal (|pq| = {0:.3e})")]
    NotOrthogonal(f64),

    #[error("{what} out of range: {got} (limit {limit})")]
    SizeLimit { what: &'static str, limit: usize, got: usize },

    #[error("invalid partition data: {0}")]
    InvalidPartition(String),

    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),

    #[error("map table has no entry for the requested input: {0}")]
    TableIncomplete(String),

    #[error("table is not an order isomorphism: {0}")]
    NotOrderIsomorphism(String),

    #[error("F2 class not preserved: {0}")]
    F2ClassViolation(String),

    #[error("exceptional algebra (C^2 or M_2): {0}")]
    ExceptionalAlgebra(String),

    #[error("reconstruction failed: {0}")]
    ReconstructionFailed(String),

    #[error("oracle response inconsistent: {0}")]
    OracleInconsistent(String),

    #[error("map is neither multiplicative nor anti-multiplicative (mult {0:.3e}, anti {1:.3e})")]
    NotJordanFactor(f64, f64),

    #[error("element is not in the span of any probe")]
    NotProbed,

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
