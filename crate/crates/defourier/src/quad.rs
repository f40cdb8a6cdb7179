//! Gauss-Legendre quadrature: node generation by Newton iteration on the
//! Legendre recurrence, plus an adaptive bisection driver with an embedded
//! (n, 2n) error estimate.

use crate::error::{Error, Result};
use num_complex::Complex64;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Quadrature rule selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadRule {
    /// Fixed-order panels, refined by uniform subdivision.
    GaussLegendre,
    /// Adaptive bisection with an embedded Gauss pair error estimate.
    AdaptiveGk,
}

/// Controls for quadrature-backed operations.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureSpec {
    pub rule: QuadRule,
    pub base_nodes: usize,
    pub tol: f64,
    pub max_refinements: u32,
}

impl QuadratureSpec {
    pub fn new(rule: QuadRule, base_nodes: usize, tol: f64, max_refinements: u32) -> Result<Self> {
        if base_nodes < 8 {
            return Err(Error::Domain("QuadratureSpec requires base_nodes >= 8".into()));
        }
        if !(tol >= 1e-12) {
            return Err(Error::Domain("QuadratureSpec requires tol >= 1e-12".into()));
        }
        Ok(QuadratureSpec {
            rule,
            base_nodes,
            tol,
            max_refinements,
        })
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            rule: QuadRule::AdaptiveGk,
            base_nodes: 16,
            tol: 1e-9,
            max_refinements: 26,
        }
    }
}

/// Gauss-Legendre nodes and weights on [-1, 1], cached per order.
pub fn gauss_legendre(n: usize) -> &'static (Vec<f64>, Vec<f64>) {
    static CACHE: OnceLock<Mutex<HashMap<usize, &'static (Vec<f64>, Vec<f64>)>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard.entry(n).or_insert_with(|| {
        Box::leak(Box::new(compute_gauss_legendre(n)))
    })
}

fn compute_gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess, then Newton on P_n
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_and_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                let (p2, d2) = legendre_and_derivative(n, x);
                dp = d2;
                x -= p2 / d2;
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Fixed-order Gauss-Legendre on [a, b] of a complex-valued integrand.
pub fn integrate_gl(f: &dyn Fn(f64) -> Complex64, a: f64, b: f64, n: usize) -> Complex64 {
    let (nodes, weights) = gauss_legendre(n);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = Complex64::default();
    for (x, w) in nodes.iter().zip(weights.iter()) {
        acc += *w * f(mid + half * x);
    }
    acc * half
}

/// Adaptive integration of a complex integrand over [a, b] with global
/// error control: the worst panel is bisected until the summed (n, 2n)
/// error estimates drop under the tolerance or under the f64 floor of the
/// accumulated magnitude, whichever is larger. Returns the value and the
/// summed error estimate.
pub fn integrate_adaptive(
    f: &dyn Fn(f64) -> Complex64,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<(Complex64, f64)> {
    struct Panel {
        lo: f64,
        hi: f64,
        value: Complex64,
        err: f64,
        depth: u32,
    }
    let n = spec.base_nodes;
    let eval_panel = |lo: f64, hi: f64, depth: u32| -> Panel {
        let coarse = integrate_gl(f, lo, hi, n);
        let mid = 0.5 * (lo + hi);
        let fine = integrate_gl(f, lo, mid, n) + integrate_gl(f, mid, hi, n);
        Panel {
            lo,
            hi,
            value: fine,
            err: (fine - coarse).norm(),
            depth,
        }
    };
    let mut panels = vec![eval_panel(a, b, 0)];
    let max_panels = 60_000usize;
    let mut total_err = panels[0].err;
    let mut magnitude = panels[0].value.norm();
    loop {
        let floor = 32.0 * f64::EPSILON * magnitude;
        if total_err <= spec.tol.max(floor) {
            break;
        }
        // bisect the worst panel that can still be refined
        let worst = panels
            .iter()
            .enumerate()
            .filter(|(_, p)| p.depth < spec.max_refinements)
            .max_by(|x, y| x.1.err.total_cmp(&y.1.err))
            .map(|(i, _)| i);
        let Some(idx) = worst else {
            if matches!(spec.rule, QuadRule::AdaptiveGk) && total_err > 4.0 * spec.tol.max(floor) {
                return Err(Error::QuadratureFailure {
                    context: "adaptive refinement limit reached",
                    tol: spec.tol,
                    achieved: total_err,
                });
            }
            break;
        };
        if panels.len() >= max_panels {
            return Err(Error::QuadratureFailure {
                context: "adaptive panel budget exhausted",
                tol: spec.tol,
                achieved: total_err,
            });
        }
        let Panel {
            lo,
            hi,
            depth,
            err,
            value,
        } = panels.swap_remove(idx);
        total_err -= err;
        magnitude -= value.norm();
        let mid = 0.5 * (lo + hi);
        for half in [eval_panel(lo, mid, depth + 1), eval_panel(mid, hi, depth + 1)] {
            total_err += half.err;
            magnitude += half.value.norm();
            panels.push(half);
        }
    }
    let total = panels.iter().fold(Complex64::default(), |acc, p| acc + p.value);
    let err_total: f64 = panels.iter().map(|p| p.err).sum();
    Ok((total, err_total))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_integrate_polynomials_exactly() {
        // order n integrates degree 2n-1 exactly
        for &n in &[8usize, 16, 32, 48] {
            let f = |x: f64| Complex64::new(x.powi(2 * n as i32 - 1) + x.powi(4) + 1.0, 0.0);
            let got = integrate_gl(&f, -1.0, 1.0, n);
            let want = 2.0 / 5.0 + 2.0; // odd power integrates to zero
            assert!((got.re - want).abs() < 1e-13, "n={n}: {}", got.re);
        }
    }

    #[test]
    fn weights_sum_to_interval() {
        for &n in &[8usize, 20, 64, 101] {
            let (_, w) = gauss_legendre(n);
            let sum: f64 = w.iter().sum();
            assert!((sum - 2.0).abs() < 1e-13);
        }
    }

    #[test]
    fn adaptive_handles_oscillation() {
        let spec = QuadratureSpec::default();
        let f = |x: f64| Complex64::from_polar(1.0, 40.0 * x);
        let (got, est) = integrate_adaptive(&f, 0.0, 1.0, &spec).unwrap();
        let want = (Complex64::from_polar(1.0, 40.0) - 1.0) / Complex64::new(0.0, 40.0);
        assert!((got - want).norm() < 1e-9, "err {}", (got - want).norm());
        assert!(est < 1e-6);
    }

    #[test]
    fn adaptive_handles_mild_endpoint_power() {
        let spec = QuadratureSpec::default();
        let f = |x: f64| Complex64::new(x.sqrt(), 0.0);
        let (got, _) = integrate_adaptive(&f, 0.0, 1.0, &spec).unwrap();
        assert!((got.re - 2.0 / 3.0).abs() < 1e-9);
    }
}
