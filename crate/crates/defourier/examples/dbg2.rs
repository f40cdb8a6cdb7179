use defourier::laplace::*;
use defourier::mlkernel::*;
use defourier::oracles::*;
use defourier::params::*;
use defourier::quad::{integrate_adaptive, QuadratureSpec};
use defourier::specfun::{bessel_j, SeriesPolicy};
use defourier::Complex64;

fn main() {
    let p = DeformParams::new(2, 3).unwrap();
    let g = PairGeometry::new(1.0, 0.2).unwrap();
    let quad = QuadratureSpec::default();
    let ml = MLParams::new(&p, &g);
    println!("b+ = {}, b- = {}", ml.b_plus, ml.b_minus);

    // h1 at t=0.5 vs Bromwich inverse of G(s) = 1/((s^3-b+)(s^3-b-))
    let spec = HFunctionSpec::new(1.0, 3, ml.b_plus, ml.b_minus, quad).unwrap();
    let h_val = h_function(&spec, 0.5).unwrap();
    let g_hat = |s: Complex64| 1.0 / ((s.powu(3) - ml.b_plus) * (s.powu(3) - ml.b_minus));
    let (h_inv, err) = numeric_laplace_inverse(&g_hat, 0.5, g.z(), &quad).unwrap();
    println!("h(0.5) quadrature = {h_val}");
    println!("h(0.5) bromwich   = {h_inv} (est {err:.2e})");

    // T(nu) vs Bromwich of I1(s) = -(1/r) z^(n+1) (r-s)^nt G(r-s) at t=1
    let z = g.z();
    let n = 3u32;
    let nt = 1i32;
    let i1 = |s: Complex64| {
        let r = (s * s + z * z).sqrt();
        let rms = r - s;
        -(z.powi(n as i32 + 1)) / r * rms.powi(nt)
            / ((rms.powu(n) - ml.b_plus) * (rms.powu(n) - ml.b_minus))
    };
    let (i1_inv, err1) = numeric_laplace_inverse(&i1, 1.0, g.z(), &quad).unwrap();
    // direct: -z^(3nt+2) * T(nt)
    let pol = SeriesPolicy::default();
    let hh = move |tau: f64| h_function(&spec, tau).unwrap();
    let t_nt = integrate_adaptive(
        &|tau: f64| {
            let root = (1.0 + 2.0 * tau).sqrt();
            root.powi(-nt) * bessel_j(nt as f64, z * root, &pol).unwrap() * hh(tau)
        },
        0.0,
        1.0,
        &quad,
    )
    .unwrap()
    .0;
    println!("L^-1(I1)(1) bromwich = {i1_inv} (est {err1:.2e})");
    println!("-z^5 T(1) direct     = {}", -z.powi(5) * t_nt);

    // shift inversion parts
    let qd = QuadratureSpec::default();
    for (nu, a, alpha, t) in [(0.0f64, 1.0f64, 1.0f64, 1.0f64), (1.0, 2.0, 0.5, 0.5)] {
        let lhs_fn = |s: Complex64| -> Complex64 {
            let root = (s * s + a * a).sqrt();
            let u = root - s;
            let shifted = if nu == 0.0 { Complex64::new(1.0, 0.0) } else { u.powf(nu) };
            shifted / root / (u + alpha)
        };
        let pole = ((alpha * alpha - a * a) / (2.0 * alpha)).max(0.0);
        let (lhs, lerr) = numeric_laplace_inverse(&lhs_fn, t, pole + 0.2, &qd).unwrap();
        let rhs = shift_inversion_rhs(nu, a, alpha, t, &qd).unwrap();
        // high-resolution RHS with plain fine GL
        let fine = integrate_adaptive(
            &|tau: f64| {
                let arg = a * (t * t + 2.0 * tau * t).sqrt();
                let j = bessel_j(nu, arg, &pol).unwrap();
                let weight = (t + 2.0 * tau).powf(-0.5 * nu);
                Complex64::new(weight * j * (-alpha * tau).exp(), 0.0)
            },
            0.0,
            t,
            &qd,
        )
        .unwrap()
        .0
            * (a * a * t).powf(0.5 * nu);
        println!("nu={nu}: lhs={lhs} (est {lerr:.2e}) rhs={rhs} fine={fine}");
    }
}
