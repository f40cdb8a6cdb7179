//! Gegenbauer (ultraspherical) and Chebyshev-U polynomials on [-1, 1].

use crate::error::{Error, Result};

/// C_k^lambda(w) by the three-term recurrence.
///
/// lambda must be > -1/2 and nonzero (the lambda -> 0 limit degenerates;
/// use `chebyshev_u` for the trigonometric sums that replace it).
pub fn gegenbauer(k: u32, lambda: f64, w: f64) -> Result<f64> {
    if !(lambda > -0.5) || lambda == 0.0 {
        return Err(Error::Domain(format!(
            "gegenbauer requires lambda > -1/2 and lambda != 0, got {lambda}"
        )));
    }
    if !(-1.0..=1.0).contains(&w) {
        return Err(Error::Domain(format!(
            "gegenbauer requires w in [-1, 1], got {w}"
        )));
    }
    Ok(gegenbauer_unchecked(k, lambda, w))
}

pub(crate) fn gegenbauer_unchecked(k: u32, lambda: f64, w: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * lambda * w;
    for j in 2..=k {
        let jf = j as f64;
        let next = (2.0 * w * (jf + lambda - 1.0) * cur - (jf + 2.0 * lambda - 2.0) * prev) / jf;
        prev = cur;
        cur = next;
    }
    cur
}

/// Iterator state for consecutive C_k^lambda(w) values, k = 0, 1, 2, ...
///
/// The kernel series walk the whole sequence; this avoids re-running the
/// recurrence from scratch at every k.
pub(crate) struct GegenbauerSeq {
    lambda: f64,
    w: f64,
    k: u32,
    prev: f64,
    cur: f64,
}

impl GegenbauerSeq {
    pub fn new(lambda: f64, w: f64) -> Self {
        GegenbauerSeq {
            lambda,
            w,
            k: 0,
            prev: 0.0,
            cur: 1.0,
        }
    }
}

impl Iterator for GegenbauerSeq {
    type Item = f64;

    fn next(&mut self) -> Option<f64> {
        let out = self.cur;
        let k_next = self.k + 1;
        let next = if k_next == 1 {
            2.0 * self.lambda * self.w
        } else {
            let jf = k_next as f64;
            (2.0 * self.w * (jf + self.lambda - 1.0) * self.cur
                - (jf + 2.0 * self.lambda - 2.0) * self.prev)
                / jf
        };
        self.prev = self.cur;
        self.cur = next;
        self.k = k_next;
        Some(out)
    }
}

/// Chebyshev polynomial of the second kind, U_k(w) = sin((k+1) theta)/sin theta.
///
/// Finite and continuous at the endpoints: U_k(1) = k+1, U_k(-1) = (-1)^k (k+1).
pub fn chebyshev_u(k: u32, w: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&w) {
        return Err(Error::Domain(format!(
            "chebyshev_u requires w in [-1, 1], got {w}"
        )));
    }
    Ok(chebyshev_u_unchecked(k, w))
}

pub(crate) fn chebyshev_u_unchecked(k: u32, w: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * w;
    for _ in 2..=k {
        let next = 2.0 * w * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}
