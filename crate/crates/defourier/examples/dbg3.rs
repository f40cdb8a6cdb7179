use defourier::oracles::*;
use defourier::params::*;
use defourier::quad::{integrate_adaptive, QuadratureSpec};
use defourier::specfun::{bessel_j, SeriesPolicy};
use defourier::Complex64;

fn main() {
    let qd = QuadratureSpec::default();
    let pol = SeriesPolicy::default();

    // shift-inversion with the tau-integral taken to infinity
    for (nu, a, alpha, t) in [(0.0f64, 1.0f64, 1.0f64, 1.0f64), (1.0, 2.0, 0.5, 0.5)] {
        let lhs_fn = |s: Complex64| -> Complex64 {
            let root = (s * s + a * a).sqrt();
            let u = root - s;
            let shifted = if nu == 0.0 { Complex64::new(1.0, 0.0) } else { u.powf(nu) };
            shifted / root / (u + alpha)
        };
        let pole = ((alpha * alpha - a * a) / (2.0 * alpha)).max(0.0);
        let (lhs, _) = numeric_laplace_inverse(&lhs_fn, t, pole + 0.2, &qd).unwrap();
        // tau integral over [0, T] with exponentially decaying f: T from decay
        let horizon = 40.0 / alpha;
        let rhs_inf = integrate_adaptive(
            &|tau: f64| {
                let arg = a * (t * t + 2.0 * tau * t).sqrt();
                let j = bessel_j(nu, arg, &pol).unwrap();
                let weight = (t + 2.0 * tau).powf(-0.5 * nu);
                Complex64::new(weight * j * (-alpha * tau).exp(), 0.0)
            },
            0.0,
            horizon,
            &qd,
        )
        .unwrap()
        .0
            * if nu == 0.0 { 1.0 } else { (a * a * t).powf(0.5 * nu) };
        println!("nu={nu}: lhs={lhs:.10} rhs_infty={rhs_inf:.10}");
    }

    // laplace m2 direct vs factored for n=3 after the u fix
    use defourier::laplace::*;
    let p = DeformParams::new(2, 3).unwrap();
    let g = PairGeometry::new(1.3, 0.4).unwrap();
    let sp = LaplacePoint::new(Complex64::new(2.2, 1.1), g.z());
    let a = laplace_kernel_m2(&p, &g, &sp).unwrap();
    let b = laplace_kernel_m2_factored(&p, &g, &sp).unwrap();
    println!("direct {} {} / factored {} {}", a.scalar, a.bivector, b.scalar, b.bivector);

    // split vs compact for the n = 3 cases after the fix
    for &(m, n) in &[(3u32, 3u32), (6, 3)] {
        let p = DeformParams::new(m, n).unwrap();
        let g = PairGeometry::new(1.1, -0.55).unwrap();
        let sp = LaplacePoint::new(Complex64::new(g.z() + 1.3, 0.8), g.z());
        let v = laplace_kernel_general(&p, &g, &sp).unwrap();
        let a = laplace_a_term(&p, &g, &sp).unwrap();
        let b = laplace_b_term(&p, &g, &sp).unwrap();
        println!("m={m} n={n}: scal {} vs a+b {}", v.scalar, a + b);
    }
}
