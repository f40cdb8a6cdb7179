//! The deformed Fourier transform applied to sampled functions on R^2 by
//! polar quadrature against the kernel (Gauss-Legendre radial panels times
//! a fixed 256-node angular trapezoid).

use crate::closedform::closed_form_kernel_m2;
use crate::error::{Error, Result};
use crate::mlkernel::kernel_integral_m2;
use crate::params::{DeformParams, KernelEvalPoint, KernelValue, PairGeometry};
use crate::quad::{gauss_legendre, QuadratureSpec};
use crate::series::series_kernel_m2;
use crate::specfun::{gamma, SeriesPolicy};
use num_complex::Complex64;
use std::f64::consts::PI;

/// Which kernel evaluation route backs the transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelMethod {
    Series,
    ClosedForm,
    MlIntegral,
}

/// Radial weight h(r) = r^exponent and the transform's front constant.
#[derive(Debug, Clone, Copy)]
pub struct WeightedMeasure {
    pub exponent: f64,
    pub normalization: f64,
}

impl WeightedMeasure {
    pub fn from_params(m: u32, c: f64) -> Self {
        let mf = m as f64;
        let exponent = 1.0 - (1.0 + mf * c) / (1.0 + c);
        debug_assert!(c != 0.0 || exponent == 0.0);
        WeightedMeasure {
            exponent,
            normalization: gamma(mf / 2.0) / (2.0 * PI.powf(mf / 2.0)),
        }
    }
}

const ANGULAR_NODES: usize = 256;

/// Apply the transform to f at the point y; returns the scalar and
/// bivector output channels.
///
/// The caller must supply a non-increasing radial envelope bounding |f|
/// so the radial integral can be truncated below tolerance.
pub fn apply_transform_2d(
    f: &dyn Fn(f64, f64) -> Complex64,
    y: [f64; 2],
    params: &DeformParams,
    method: KernelMethod,
    quadrature: &QuadratureSpec,
    envelope: Option<&dyn Fn(f64) -> f64>,
) -> Result<KernelValue> {
    if params.m() != 2 {
        return Err(Error::Domain("apply_transform_2d requires m = 2".into()));
    }
    let envelope = envelope.ok_or(Error::EnvelopeMissing)?;
    let measure = WeightedMeasure::from_params(2, params.c());
    let tol = quadrature.tol;

    // radial truncation where the envelope tail falls below tolerance
    let mut radius = None;
    for k in 1..=64u32 {
        let r = k as f64;
        if envelope(r) * r.powf(1.0 + measure.exponent) * 8.0 * PI < 0.1 * tol {
            radius = Some(r);
            break;
        }
    }
    let radius = radius.ok_or(Error::QuadratureFailure {
        context: "no radial truncation point found within r <= 64",
        tol,
        achieved: f64::INFINITY,
    })?;

    let y_norm = (y[0] * y[0] + y[1] * y[1]).sqrt();
    let phi_y = y[1].atan2(y[0]);
    let policy = SeriesPolicy::default();

    let kernel_at = |z: f64, w: f64| -> Result<KernelValue> {
        let geometry = PairGeometry::new(z, w.clamp(-1.0, 1.0))?;
        match method {
            KernelMethod::ClosedForm => closed_form_kernel_m2(params, &geometry),
            KernelMethod::Series => {
                series_kernel_m2(params, &KernelEvalPoint::at_unit_time(geometry), &policy)
            }
            KernelMethod::MlIntegral => {
                if z < 1e-6 {
                    series_kernel_m2(params, &KernelEvalPoint::at_unit_time(geometry), &policy)
                } else {
                    kernel_integral_m2(params, &geometry, quadrature)
                }
            }
        }
    };

    // radial panels sized to the kernel's oscillation scale z = r |y|
    let panels = ((radius * (1.0 + y_norm) / 2.0).ceil() as usize).max(8);
    let (nodes, weights) = gauss_legendre(20);
    let dphi = 2.0 * PI / ANGULAR_NODES as f64;
    let mut scalar = Complex64::default();
    let mut bivector = Complex64::default();
    for p in 0..panels {
        let lo = radius * p as f64 / panels as f64;
        let hi = radius * (p + 1) as f64 / panels as f64;
        let mid = 0.5 * (lo + hi);
        let half = 0.5 * (hi - lo);
        for (xn, wn) in nodes.iter().zip(weights.iter()) {
            let r = mid + half * xn;
            let radial_weight = wn * half * r.powf(1.0 + measure.exponent);
            let z = r * y_norm;
            for a in 0..ANGULAR_NODES {
                let phi = a as f64 * dphi;
                let w = (phi - phi_y).cos();
                let kernel = kernel_at(z, w)?;
                let x1 = r * phi.cos();
                let x2 = r * phi.sin();
                let wedge = x1 * y[1] - x2 * y[0];
                let fv = f(x1, x2);
                scalar += radial_weight * dphi * kernel.scalar * fv;
                bivector += radial_weight * dphi * wedge * kernel.bivector * fv;
            }
        }
    }
    Ok(KernelValue::new(
        measure.normalization * scalar,
        measure.normalization * bivector,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gaussian_half() -> (impl Fn(f64, f64) -> Complex64, impl Fn(f64) -> f64) {
        (
            |x1: f64, x2: f64| Complex64::new((-0.5 * (x1 * x1 + x2 * x2)).exp(), 0.0),
            |r: f64| (-0.5 * r * r).exp(),
        )
    }

    #[test]
    fn classical_gaussian_fixed_point() {
        let (f, env) = gaussian_half();
        let p = DeformParams::classical(2).unwrap();
        let quad = QuadratureSpec::default();
        for &y in &[[0.0, 0.0], [1.0, 0.5], [0.0, 2.0], [-1.3, 0.4]] {
            let out = apply_transform_2d(&f, y, &p, KernelMethod::ClosedForm, &quad, Some(&env))
                .unwrap();
            let want = (-0.5 * (y[0] * y[0] + y[1] * y[1])).exp();
            assert!(
                (out.scalar.re - want).abs() < 1e-6 && out.scalar.im.abs() < 1e-6,
                "y={y:?}: got {} want {want}",
                out.scalar
            );
            assert!(out.bivector.norm() < 1e-6);
        }
    }

    #[test]
    fn weight_exponent_at_classical_limit() {
        let m = WeightedMeasure::from_params(2, 0.0);
        assert_eq!(m.exponent, 0.0);
        assert!((m.normalization - 1.0 / (2.0 * PI)).abs() < 1e-15);
        // 1 + c = 1/n gives h(r) = r^(n-1)
        let m = WeightedMeasure::from_params(2, 1.0 / 3.0 - 1.0);
        assert!((m.exponent - 2.0).abs() < 1e-12);
    }

    #[test]
    fn linearity() {
        let p = DeformParams::new(2, 3).unwrap();
        let quad = QuadratureSpec::default();
        let env = |r: f64| 3.0 * (-0.5 * r * r).exp();
        let f = |x1: f64, x2: f64| Complex64::new((-0.5 * (x1 * x1 + x2 * x2)).exp(), 0.0);
        let g = |x1: f64, x2: f64| {
            Complex64::new(0.0, x1) * (-0.5 * (x1 * x1 + x2 * x2)).exp()
        };
        let combo = |x1: f64, x2: f64| 2.0 * f(x1, x2) + 0.5 * g(x1, x2);
        let y = [0.7, -0.4];
        let tf = apply_transform_2d(&f, y, &p, KernelMethod::ClosedForm, &quad, Some(&env)).unwrap();
        let tg = apply_transform_2d(&g, y, &p, KernelMethod::ClosedForm, &quad, Some(&env)).unwrap();
        let tc =
            apply_transform_2d(&combo, y, &p, KernelMethod::ClosedForm, &quad, Some(&env)).unwrap();
        let want_s = 2.0 * tf.scalar + 0.5 * tg.scalar;
        let want_b = 2.0 * tf.bivector + 0.5 * tg.bivector;
        assert!((tc.scalar - want_s).norm() < 1e-10);
        assert!((tc.bivector - want_b).norm() < 1e-10);
    }

    #[test]
    fn series_and_closed_form_agree() {
        let p = DeformParams::new(2, 3).unwrap();
        let quad = QuadratureSpec::default();
        let env = |r: f64| (-r * r).exp();
        let f = |x1: f64, x2: f64| Complex64::new((-(x1 * x1 + x2 * x2)).exp(), 0.0);
        let y = [0.8, 0.3];
        let a = apply_transform_2d(&f, y, &p, KernelMethod::Series, &quad, Some(&env)).unwrap();
        let b = apply_transform_2d(&f, y, &p, KernelMethod::ClosedForm, &quad, Some(&env)).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-6, "diff {}", a.max_abs_diff(&b));
    }

    #[test]
    fn missing_envelope_is_an_error() {
        let p = DeformParams::new(2, 3).unwrap();
        let f = |_: f64, _: f64| Complex64::new(1.0, 0.0);
        assert!(matches!(
            apply_transform_2d(
                &f,
                [0.5, 0.0],
                &p,
                KernelMethod::ClosedForm,
                &QuadratureSpec::default(),
                None
            ),
            Err(Error::EnvelopeMissing)
        ));
    }

    #[test]
    fn rotation_covariance_for_radial_input() {
        let p = DeformParams::new(2, 3).unwrap();
        let quad = QuadratureSpec::default();
        let env = |r: f64| (-0.5 * r * r).exp();
        let f = |x1: f64, x2: f64| Complex64::new((-0.5 * (x1 * x1 + x2 * x2)).exp(), 0.0);
        let radius = 1.1f64;
        let reference = apply_transform_2d(
            &f,
            [radius, 0.0],
            &p,
            KernelMethod::ClosedForm,
            &quad,
            Some(&env),
        )
        .unwrap();
        for k in 1..6 {
            let angle = k as f64 * PI / 3.3;
            let y = [radius * angle.cos(), radius * angle.sin()];
            let out =
                apply_transform_2d(&f, y, &p, KernelMethod::ClosedForm, &quad, Some(&env)).unwrap();
            assert!(
                (out.scalar - reference.scalar).norm() < 1e-7,
                "angle {angle}: {} vs {}",
                out.scalar,
                reference.scalar
            );
        }
    }
}
