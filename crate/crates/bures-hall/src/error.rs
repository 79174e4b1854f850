//! Error taxonomy shared by every module of the crate.
//!
//! The split mirrors how computations fail in practice: arguments outside a
//! function's mathematical domain, parameter regimes where a closed form is
//! invalid, poles of rational coefficient functions, singular recurrence
//! steps, and internal cross-check mismatches.

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation
    /// (e.g. a non-positive digamma argument, or a transform evaluated on
    /// the integration contour).
    #[error("domain error: {0}")]
    Domain(String),

    /// The requested closed form exists but is invalid for these parameters
    /// (e.g. negative-order moments at alpha = -1/2, where the defining
    /// integral diverges).
    #[error("validity error: {0}")]
    Validity(String),

    /// A rational coefficient function was evaluated at a zero of its
    /// denominator. The message names the vanishing factor.
    #[error("pole error: {0}")]
    Pole(String),

    /// A recurrence step would divide by a vanishing leading coefficient.
    #[error("singular recurrence step: {0}")]
    SingularStep(String),

    /// An iterative numerical scheme failed to reach its tolerance.
    #[error("convergence failure: {0}")]
    Convergence(String),

    /// Two supposedly identical computation paths disagreed. Reserved for
    /// internal cross-checks; reaching this indicates a defect, not bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    /// The operation is only implemented for a bounded dimension.
    #[error("unsupported dimension: {0}")]
    UnsupportedDimension(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
