//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A coefficient ratio is undefined because its denominator vanishes.
    #[error("degenerate coefficient set: {0}")]
    Degenerate(String),

    /// A parameter point fails the square-integrability conditions, so the
    /// vacuum functions (and with them the whole family) do not exist.
    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),

    /// A denominator in the one-parameter region analysis vanished.
    #[error("singular ratio at eta = {eta}: {context}")]
    Singular { eta: f64, context: String },

    /// The matrix-exponential series failed to meet its tail bound.
    #[error("matrix exponential did not converge: {0}")]
    Convergence(String),

    /// The quadrature interval is too short for the requested integrand.
    #[error("quadrature tail above threshold: {0}")]
    Tolerance(String),
}

pub type Result<T> = std::result::Result<T, Error>;
