//! Error types shared by every evaluation route.

use thiserror::Error;

/// Errors raised by kernel evaluation, special functions and quadrature.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside the documented domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series did not reach its certified tail bound within the term budget.
    #[error("series did not converge: {context} (needed tail {tol:e}, reached {achieved:e} after {terms} terms)")]
    NonConvergence {
        context: &'static str,
        tol: f64,
        achieved: f64,
        terms: usize,
    },

    /// Adaptive quadrature hit its refinement limit before reaching the tolerance.
    #[error("quadrature failure: {context} (requested {tol:e}, estimate {achieved:e})")]
    QuadratureFailure {
        context: &'static str,
        tol: f64,
        achieved: f64,
    },

    /// No decaying envelope could be established for an infinite integral.
    #[error("integrand tail not exponentially bounded")]
    TailUnbounded,

    /// Two partial-fraction denominator roots coincide; the expansion is invalid.
    #[error("degenerate denominator roots (separation {separation:e} below threshold)")]
    DegenerateRoots { separation: f64 },

    /// A radial envelope is required to truncate the transform integral.
    #[error("caller must supply a decay envelope for the integrand")]
    EnvelopeMissing,
}

pub type Result<T> = std::result::Result<T, Error>;
