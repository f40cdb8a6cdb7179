//! Special functions used by every kernel evaluation route: Gamma,
//! Bessel J of real order, Gegenbauer and Chebyshev-U polynomials, and
//! the two-parameter and Prabhakar Mittag-Leffler functions.
//!
//! All functions are pure and reentrant; there is no global mutable state.

mod bessel;
mod gamma;
mod gegenbauer;
mod ml;

pub use bessel::{bessel_j, bessel_j_order_table};
pub use gamma::{gamma, ln_gamma};
pub use gegenbauer::{chebyshev_u, gegenbauer};
pub use ml::{mittag_leffler, prabhakar};

pub(crate) use bessel::{bessel_j_backward_recurrence, bessel_j_power_series};
pub(crate) use gegenbauer::GegenbauerSeq;

use crate::error::{Error, Result};

/// Truncation controls for certified series summation.
///
/// `tail_tol` is an absolute bound on the discarded tail, `max_terms` caps
/// the term budget and `overflow_guard` aborts runaway term growth.
#[derive(Debug, Clone, Copy)]
pub struct SeriesPolicy {
    pub max_terms: usize,
    pub tail_tol: f64,
    pub overflow_guard: f64,
}

impl SeriesPolicy {
    pub fn new(max_terms: usize, tail_tol: f64, overflow_guard: f64) -> Result<Self> {
        if max_terms < 8 {
            return Err(Error::Domain("SeriesPolicy requires max_terms >= 8".into()));
        }
        if !(tail_tol > 0.0 && tail_tol < 1.0) {
            return Err(Error::Domain(
                "SeriesPolicy requires 0 < tail_tol < 1".into(),
            ));
        }
        if !(overflow_guard > 0.0) {
            return Err(Error::Domain(
                "SeriesPolicy requires overflow_guard > 0".into(),
            ));
        }
        Ok(SeriesPolicy {
            max_terms,
            tail_tol,
            overflow_guard,
        })
    }
}

impl Default for SeriesPolicy {
    /// Practical defaults: 2000 terms, 1e-12 absolute tail, 1e300 guard.
    fn default() -> Self {
        SeriesPolicy {
            max_terms: 2000,
            tail_tol: 1e-12,
            overflow_guard: 1e300,
        }
    }
}
