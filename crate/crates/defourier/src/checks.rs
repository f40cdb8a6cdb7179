//! Named identity checks shared by the CLI `identities` command and the
//! acceptance suite: each returns a residual together with the tolerance
//! it is held to.

use crate::error::Result;
use crate::oracles::{
    laplace_term_bounds_m2, numeric_laplace_forward, shift_inversion_rhs, verify_convolution,
    verify_shift_inversion, verify_trig_sums,
};
use crate::quad::QuadratureSpec;
use crate::specfun::{bessel_j, gegenbauer, mittag_leffler, prabhakar, SeriesPolicy};
use num_complex::Complex64;

/// One identity check outcome.
#[derive(Debug, Clone)]
pub struct IdentityCheck {
    pub anchor: &'static str,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl IdentityCheck {
    fn new(anchor: &'static str, residual: f64, tolerance: f64) -> Self {
        IdentityCheck {
            anchor,
            residual,
            tolerance,
            pass: residual <= tolerance,
        }
    }
}

/// Run every standalone identity the kernel derivations rest on.
pub fn run_identity_suite() -> Result<Vec<IdentityCheck>> {
    let quad = QuadratureSpec::default();
    let policy = SeriesPolicy::default();
    let mut out = Vec::new();

    // geometric trigonometric sums
    let (c1, s1) = verify_trig_sums(0.5, std::f64::consts::FRAC_PI_3)?;
    let (c2, s2) = verify_trig_sums(0.9, 0.1)?;
    out.push(IdentityCheck::new("cos-sum r=0.5", c1, 1e-12));
    out.push(IdentityCheck::new("sin-sum r=0.5", s1, 1e-12));
    out.push(IdentityCheck::new("cos-sum r=0.9", c2, 1e-10));
    out.push(IdentityCheck::new("sin-sum r=0.9", s2, 1e-10));

    // Poisson kernel and generating function of the Gegenbauer polynomials
    out.push(IdentityCheck::new(
        "poisson-kernel-expansion",
        poisson_kernel_residual()?,
        1e-11,
    ));
    out.push(IdentityCheck::new(
        "gegenbauer-generating-function",
        generating_function_residual()?,
        1e-11,
    ));

    // Prabhakar reduction at delta = 1 must be bitwise
    out.push(IdentityCheck::new(
        "prabhakar-delta-one-reduction",
        prabhakar_reduction_residual(&policy)?,
        0.0,
    ));

    // Laplace transform pairs, checked by forward quadrature
    let s2r = Complex64::new(2.0, 0.0);
    let exp_pair = {
        let f = |t: f64| Complex64::new((-t).exp(), 0.0);
        (numeric_laplace_forward(&f, s2r, &quad)? - 1.0 / 3.0).norm()
    };
    out.push(IdentityCheck::new("laplace-exponential-pair", exp_pair, 1e-8));

    let bessel_pair = {
        let f = |t: f64| Complex64::new(bessel_j(0.0, t, &policy).unwrap_or(f64::NAN), 0.0);
        (numeric_laplace_forward(&f, s2r, &quad)? - 1.0 / 5f64.sqrt()).norm()
    };
    out.push(IdentityCheck::new("laplace-bessel-pair", bessel_pair, 1e-8));

    let prabhakar_pair = {
        let (delta, alpha, beta, b) = (2.0, 3.0, 6.0, 0.5);
        let f = move |t: f64| {
            t.powf(beta - 1.0)
                * prabhakar(delta, alpha, beta, Complex64::new(b * t.powf(alpha), 0.0), &policy)
                    .unwrap_or(Complex64::new(f64::NAN, 0.0))
        };
        let want = 2f64.powf(-beta) * (1.0 - b * 2f64.powf(-alpha)).powf(-delta);
        (numeric_laplace_forward(&f, s2r, &quad)? - want).norm()
    };
    out.push(IdentityCheck::new(
        "laplace-prabhakar-pair",
        prabhakar_pair,
        1e-8,
    ));

    out.push(IdentityCheck::new(
        "laplace-convolution",
        verify_convolution(1.0, 2.0, s2r, &quad)?,
        1e-7,
    ));

    // shift-inversion formula, both orders of the exponential pair
    out.push(IdentityCheck::new(
        "shift-inversion nu=0",
        verify_shift_inversion(0.0, 1.0, 1.0, 1.0, &quad)?,
        1e-5,
    ));
    out.push(IdentityCheck::new(
        "shift-inversion nu=1",
        verify_shift_inversion(1.0, 2.0, 0.5, 0.5, &quad)?,
        1e-5,
    ));
    // degenerate a = 0 limit: the right-hand side collapses to the plain
    // integral of f (J_0(0) = 1 and the nu = 0 prefactor is 1)
    let degenerate = {
        let rhs = shift_inversion_rhs(0.0, 0.0, 1.0, 1.0, &quad)?;
        (rhs - (1.0 - (-1.0f64).exp())).norm()
    };
    out.push(IdentityCheck::new(
        "shift-inversion degenerate a=0",
        degenerate,
        1e-8,
    ));

    // term-by-term transformability: the absolute-transform bounds of the
    // m = 2 kernel series must decay geometrically at x0 = z + 1
    let bounds = laplace_term_bounds_m2(3, 1, 2.0, 3.0, 16);
    let max_ratio = bounds
        .windows(2)
        .skip(1)
        .map(|p| p[1] / p[0])
        .fold(0.0f64, f64::max);
    out.push(IdentityCheck::new(
        "laplace-term-bound-ratio",
        max_ratio,
        0.999,
    ));

    Ok(out)
}

fn poisson_kernel_residual() -> Result<f64> {
    let mut worst = 0.0f64;
    for &lambda in &[0.5, 1.0, 2.0] {
        for &w in &[-0.9f64, -0.4, 0.0, 0.3, 0.9] {
            for &t in &[-0.5f64, -0.2, 0.1, 0.35, 0.5] {
                let closed = (1.0 - t * t) / (1.0 - 2.0 * w * t + t * t).powf(lambda + 1.0);
                let mut sum = 0.0;
                let mut tk = 1.0;
                for k in 0..200u32 {
                    sum += (k as f64 + lambda) / lambda * gegenbauer(k, lambda, w)? * tk;
                    tk *= t;
                    if tk.abs() * (k as f64 + 2.0) < 1e-16 {
                        break;
                    }
                }
                worst = worst.max((sum - closed).abs());
            }
        }
    }
    Ok(worst)
}

fn generating_function_residual() -> Result<f64> {
    let mut worst = 0.0f64;
    for &alpha in &[0.5, 1.0, 2.0] {
        for &w in &[-0.9f64, -0.3, 0.2, 0.7, 0.9] {
            for &t in &[-0.5f64, -0.25, 0.15, 0.4, 0.5] {
                let closed = (1.0 - 2.0 * w * t + t * t).powf(-alpha);
                let mut sum = 0.0;
                let mut tk = 1.0;
                for k in 0..200u32 {
                    sum += gegenbauer(k, alpha, w)? * tk;
                    tk *= t;
                    if tk.abs() * (k as f64 + 2.0) < 1e-16 {
                        break;
                    }
                }
                worst = worst.max((sum - closed).abs());
            }
        }
    }
    Ok(worst)
}

fn prabhakar_reduction_residual(policy: &SeriesPolicy) -> Result<f64> {
    let mut worst = 0.0f64;
    for &(a, b) in &[(1.0, 1.0), (3.0, 3.0), (2.5, 4.0)] {
        for &z in &[
            Complex64::new(0.8, 0.0),
            Complex64::new(-3.0, 2.0),
            Complex64::new(10.0, -25.0),
        ] {
            let e = mittag_leffler(a, b, z, policy)?;
            let p = prabhakar(1.0, a, b, z, policy)?;
            // bitwise identical evaluations difference is exactly zero
            worst = worst.max((e - p).norm());
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whole_suite_passes() {
        let checks = run_identity_suite().unwrap();
        assert!(checks.len() >= 14);
        for c in &checks {
            assert!(
                c.pass,
                "identity '{}' failed: residual {:e} > tol {:e}",
                c.anchor, c.residual, c.tolerance
            );
        }
    }
}
