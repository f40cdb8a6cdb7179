use defourier::closedform::closed_form_kernel_m2;
use defourier::laplace::*;
use defourier::mlkernel::*;
use defourier::params::*;
use defourier::quad::QuadratureSpec;
use defourier::series::series_kernel_m2;
use defourier::specfun::{bessel_j, SeriesPolicy};
use defourier::Complex64;

fn main() {
    let pol = SeriesPolicy::default();
    // 1. half-integer bessel
    let x = std::f64::consts::PI / 2.0;
    let got = bessel_j(0.5, x, &pol).unwrap();
    let expect = 2.0 / std::f64::consts::PI;
    println!("J_1/2(pi/2) = {got:.17e}, expect {expect:.17e}, diff {:.3e}", (got - expect).abs());

    // 2. ml kernel vs closed form
    let p = DeformParams::new(2, 3).unwrap();
    let g = PairGeometry::new(1.0, 0.2).unwrap();
    let quad = QuadratureSpec::default();
    let ml = kernel_integral_m2(&p, &g, &quad).unwrap();
    let cf = closed_form_kernel_m2(&p, &g).unwrap();
    let se = series_kernel_m2(&p, &KernelEvalPoint::at_unit_time(g), &pol).unwrap();
    println!("ml: scal {} biv {}", ml.scalar, ml.bivector);
    println!("cf: scal {} biv {}", cf.scalar, cf.bivector);
    println!("se: scal {} biv {}", se.scalar, se.bivector);

    // 3. roots annihilation: check each case
    for &n in &[3u32, 5, 7] {
        let p = DeformParams::new(2, n).unwrap();
        let g = PairGeometry::new(1.7, 0.23).unwrap();
        for (i, root) in denominator_roots(&p, &g).iter().enumerate() {
            // direct P via (s+r)-powers at the root: r = sqrt(root^2+z^2)
            let z = g.z();
            let r = (root * root + z * z).sqrt();
            let spr = root + r;
            let rms = r - root;
            let ni = match n % 4 { 1 => Complex64::new(0.0,-1.0), _ => Complex64::new(0.0,1.0) };
            let d = spr.powu(n) - 2.0 * g.w() * ni * z.powi(n as i32) - rms.powu(n);
            println!("n={n} root {i}: |P(root)| = {:.3e}", d.norm());
        }
    }

    // 4. shift inversion residuals
    use defourier::oracles::*;
    let q = QuadratureSpec::default();
    let r0 = verify_shift_inversion(0.0, 1.0, 1.0, 1.0, &q);
    println!("shift nu=0: {r0:?}");
    let r1 = verify_shift_inversion(1.0, 2.0, 0.5, 0.5, &q);
    println!("shift nu=1: {r1:?}");

    // 5. split terms vs compact
    for &(m, n) in &[(3u32, 3u32), (4, 5), (6, 3)] {
        let p = DeformParams::new(m, n).unwrap();
        let g = PairGeometry::new(1.1, -0.55).unwrap();
        let sp = LaplacePoint::new(Complex64::new(g.z() + 1.3, 0.8), g.z());
        let v = laplace_kernel_general(&p, &g, &sp).unwrap();
        let a = laplace_a_term(&p, &g, &sp).unwrap();
        let b = laplace_b_term(&p, &g, &sp).unwrap();
        let c = laplace_c_term(&p, &g, &sp).unwrap();
        println!(
            "m={m} n={n}: scal {} a+b {} | biv {} -c {}",
            v.scalar,
            a + b,
            v.bivector,
            -c
        );
    }
}
