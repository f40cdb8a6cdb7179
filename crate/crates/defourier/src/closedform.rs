//! Exact finite-sum kernel for m = 2: a weighted sum of n plane waves
//! over the angles (theta + 2 pi j)/n.

use crate::error::Result;
use crate::params::{DeformParams, KernelEvalPoint, KernelValue, PairGeometry};
use crate::series::{i_pow, series_kernel_m2};
use crate::specfun::SeriesPolicy;
use num_complex::Complex64;

/// Below this z the direct prefactor z^-(n+1)/2 loses too many digits;
/// the series branch serves the value instead.
const SERIES_DELEGATION_Z: f64 = 1e-6;

/// Step used for the two-point Richardson limit at w = +-1, where the
/// 1/sin(theta) factor cancels against the odd sine sum.
const ENDPOINT_EPS: f64 = 1e-5;

/// Closed-form kernel for m = 2 and 1 + c = 1/n (n odd); n = 1 reproduces
/// the classical plane wave exactly.
pub fn closed_form_kernel_m2(params: &DeformParams, geometry: &PairGeometry) -> Result<KernelValue> {
    if params.m() != 2 {
        return Err(crate::error::Error::Domain(format!(
            "closed_form_kernel_m2 requires m = 2, got m = {}",
            params.m()
        )));
    }
    let z = geometry.z();
    if z < SERIES_DELEGATION_Z {
        let point = KernelEvalPoint::at_unit_time(*geometry);
        return series_kernel_m2(params, &point, &SeriesPolicy::default());
    }
    let n = params.n();
    let nt = params.n_tilde();
    let theta = geometry.theta();

    let scalar = scalar_sum(n, nt, z, theta);
    let bivector = if nt == 0 {
        // single j = 0 term with sin weight 0: the bivector part vanishes
        Complex64::default()
    } else if theta.sin() < 1e-4 {
        let near_pi = theta > std::f64::consts::FRAC_PI_2;
        richardson_bivector(n, nt, z, near_pi)
    } else {
        bivector_ratio(n, nt, z, theta)
    };

    let front = i_pow(nt) / n as f64;
    Ok(KernelValue::new(front * scalar, front * bivector))
}

fn scalar_sum(n: u32, nt: u32, z: f64, theta: f64) -> Complex64 {
    let mut acc = Complex64::default();
    for j in 0..n {
        let phi = (theta + 2.0 * std::f64::consts::PI * j as f64) / n as f64;
        acc += (nt as f64 * phi).cos() * Complex64::from_polar(1.0, -z * phi.cos());
    }
    acc * z.powi(-(nt as i32))
}

fn sine_sum(n: u32, nt: u32, z: f64, theta: f64) -> Complex64 {
    let mut acc = Complex64::default();
    for j in 0..n {
        let phi = (theta + 2.0 * std::f64::consts::PI * j as f64) / n as f64;
        acc += (nt as f64 * phi).sin() * Complex64::from_polar(1.0, -z * phi.cos());
    }
    acc
}

fn bivector_ratio(n: u32, nt: u32, z: f64, theta: f64) -> Complex64 {
    sine_sum(n, nt, z, theta) * (z.powi(-(nt as i32 + 1)) / theta.sin())
}

/// Two-point Richardson extrapolation of the even function
/// g(theta)/sin(theta) toward theta = 0 or theta = pi.
fn richardson_bivector(n: u32, nt: u32, z: f64, near_pi: bool) -> Complex64 {
    let at = |eps: f64| {
        let theta = if near_pi {
            std::f64::consts::PI - eps
        } else {
            eps
        };
        bivector_ratio(n, nt, z, theta)
    };
    let b1 = at(ENDPOINT_EPS);
    let b2 = at(2.0 * ENDPOINT_EPS);
    (4.0 * b1 - b2) / 3.0
}
