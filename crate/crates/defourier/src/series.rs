//! Series evaluation of the kernel: the general-c form, its
//! specialization to 1 + c = 1/n with n odd, and the m = 2 limit forms,
//! all with the auxiliary scaling variable t in the Bessel arguments.
//!
//! Truncation is certified before summing: the stop index K is chosen from
//! a provable majorant (first-term Bessel bound times the Gegenbauer
//! endpoint bound C_k^l(1)), and the returned tail bound is the geometric
//! majorant of everything dropped.

use crate::error::{Error, Result};
use crate::params::{
    CertifiedKernelValue, DeformParams, GeneralDeformParams, KernelEvalPoint, KernelValue,
};
use crate::specfun::{bessel_j, bessel_j_order_table, SeriesPolicy};
use crate::specfun::{gamma, ln_gamma};
use num_complex::Complex64;

/// (-i)^n, exact for any non-negative n.
pub(crate) fn neg_i_pow(n: u32) -> Complex64 {
    match n % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    }
}

/// i^n, exact for any non-negative n.
pub(crate) fn i_pow(n: u32) -> Complex64 {
    match n % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    }
}

/// ln of the first-term Bessel majorant min(1, (x/2)^nu / Gamma(nu+1)).
fn ln_bessel_bound(nu: f64, x: f64) -> f64 {
    if x == 0.0 {
        return if nu == 0.0 { 0.0 } else { f64::NEG_INFINITY };
    }
    (nu * (0.5 * x).ln() - ln_gamma(nu + 1.0)).min(0.0)
}

fn base_pow(base: f64, p: f64) -> f64 {
    if p == 0.0 {
        1.0
    } else {
        base.powf(p)
    }
}

// ---------------------------------------------------------------------------
// m = 2
// ---------------------------------------------------------------------------

/// Kernel for m = 2 by the limit-form series with certified truncation.
pub fn series_kernel_m2(
    params: &DeformParams,
    point: &KernelEvalPoint,
    policy: &SeriesPolicy,
) -> Result<KernelValue> {
    Ok(eval_m2(params, point, policy, 0)?.0)
}

/// As `series_kernel_m2`, also reporting the certified tail bound.
pub fn series_kernel_m2_certified(
    params: &DeformParams,
    point: &KernelEvalPoint,
    policy: &SeriesPolicy,
) -> Result<CertifiedKernelValue> {
    let (value, _, err_bound) = eval_m2(params, point, policy, 0)?;
    Ok(CertifiedKernelValue { value, err_bound })
}

pub(crate) fn eval_m2(
    params: &DeformParams,
    point: &KernelEvalPoint,
    policy: &SeriesPolicy,
    min_terms: usize,
) -> Result<(KernelValue, usize, f64)> {
    if params.m() != 2 {
        return Err(Error::Domain(format!(
            "series_kernel_m2 requires m = 2, got m = {}",
            params.m()
        )));
    }
    let n = params.n() as f64;
    let nt = params.n_tilde() as f64;
    let z = point.geometry.z();
    let w = point.geometry.w();
    let theta = point.geometry.theta();
    let t = point.t;
    let x = z * t;
    let sgn = if params.n_tilde() % 2 == 0 { 1.0 } else { -1.0 };
    let step = neg_i_pow(params.n());

    if z == 0.0 {
        // leading order of the lowest surviving Bessel terms
        let scalar = Complex64::from(base_pow(0.5 * t, nt) / gamma(nt + 1.0));
        let mut coef = step * sgn;
        if params.n_tilde() == 0 {
            coef -= step;
        }
        let bivector = coef * (base_pow(0.5 * t, nt + 1.0) / gamma(nt + 2.0));
        return Ok((KernelValue::new(scalar, bivector), 1, 0.0));
    }
    if x == 0.0 {
        // t = 0 with z > 0: only a zero-order Bessel term can survive
        let scalar = if params.n_tilde() == 0 { 1.0 } else { 0.0 };
        return Ok((
            KernelValue::new(Complex64::from(scalar), Complex64::default()),
            1,
            0.0,
        ));
    }

    let ln_z = z.ln();
    let majorant = |k: usize| -> f64 {
        let kf = k as f64;
        let a = ln_bessel_bound(kf * n + nt, x);
        let b = if k >= 1 {
            ln_bessel_bound(kf * n - nt, x)
        } else {
            f64::NEG_INFINITY
        };
        let scal = (a - nt * ln_z).exp() + (b - nt * ln_z).exp();
        let biv = kf * ((a - (nt + 1.0) * ln_z).exp() + (b - (nt + 1.0) * ln_z).exp());
        scal + biv
    };
    let (k_stop, tail_bound) = certified_stop_index(majorant, policy, min_terms, "m=2 kernel series")?;

    // one contiguous order table covers both Bessel streams
    let base = nt; // lowest order used: k = 0 of the first stream
    let span = (k_stop as f64 * n + nt - base) as usize + 1;
    let table = bessel_j_order_table(base, span, x, policy)?;
    let j_at = |order: f64| table[(order - base) as usize];

    let mut phase = Complex64::new(1.0, 0.0);
    let mut scal = Complex64::default();
    let mut biv_inner = Complex64::default();
    let mut u_prev = 0.0; // U_{-1} = 0
    let mut u_cur = 1.0; // U_0
    for k in 0..=k_stop {
        let kf = k as f64;
        let ja = j_at(kf * n + nt);
        let jb = if k >= 1 { j_at(kf * n - nt) } else { 0.0 };
        let ck = (kf * theta).cos();
        scal += phase * (ck * (ja + sgn * jb));
        if k >= 1 {
            // sin(k theta)/sin(theta) = U_{k-1}(w), regular at w = +-1
            biv_inner += phase * (u_prev * (ja - sgn * jb));
        }
        let u_next = 2.0 * w * u_cur - u_prev;
        u_prev = u_cur;
        u_cur = u_next;
        phase *= step;
    }
    let pref_s = base_pow(z, -nt);
    let pref_b = base_pow(z, -(nt + 1.0));
    let value = KernelValue::new(pref_s * scal, -pref_b * biv_inner);
    Ok((value, k_stop + 1, tail_bound))
}

// ---------------------------------------------------------------------------
// m > 2, 1 + c = 1/n
// ---------------------------------------------------------------------------

/// Kernel for m > 2 at 1 + c = 1/n via the specialized Bessel orders
/// nk + n lambda +- n~ (scalar) and nk + n lambda + n~ + 1, + 3n~ + 1
/// (bivector).
pub fn series_kernel_n(
    params: &DeformParams,
    point: &KernelEvalPoint,
    policy: &SeriesPolicy,
) -> Result<KernelValue> {
    Ok(eval_n(params, point, policy, 0)?.0)
}

/// As `series_kernel_n`, also reporting the certified tail bound.
pub fn series_kernel_n_certified(
    params: &DeformParams,
    point: &KernelEvalPoint,
    policy: &SeriesPolicy,
) -> Result<CertifiedKernelValue> {
    let (value, _, err_bound) = eval_n(params, point, policy, 0)?;
    Ok(CertifiedKernelValue { value, err_bound })
}

pub(crate) fn eval_n(
    params: &DeformParams,
    point: &KernelEvalPoint,
    policy: &SeriesPolicy,
    min_terms: usize,
) -> Result<(KernelValue, usize, f64)> {
    if params.m() <= 2 {
        return Err(Error::Domain(
            "series_kernel_n requires m > 2; use series_kernel_m2 for the limit form".into(),
        ));
    }
    let n = params.n() as f64;
    let nt = params.n_tilde() as f64;
    let lam = params.lambda();
    let z = point.geometry.z();
    let w = point.geometry.w();
    let t = point.t;
    let x = z * t;
    let sp = params.scalar_power(); // n lambda + n~
    let bp = params.bivector_power();
    let step = neg_i_pow(params.n());
    let sgn = if params.n_tilde() % 2 == 0 { 1.0 } else { -1.0 }; // i^(n-1)

    if z == 0.0 {
        let scalar = Complex64::from(base_pow(0.5 * t, sp) / gamma(sp + 1.0));
        let mut coef = Complex64::new(0.0, 1.0);
        if params.n_tilde() == 0 {
            coef += step;
        }
        let bivector = -coef * (base_pow(0.5 * t, bp) / gamma(bp + 1.0));
        return Ok((KernelValue::new(scalar, bivector), 1, 0.0));
    }
    if x == 0.0 {
        // every Bessel order is strictly positive for m > 2
        return Ok((KernelValue::default(), 1, 0.0));
    }

    let ln_z = z.ln();
    let majorant = |k: usize| -> f64 {
        let kf = k as f64;
        let c1 = (kf + lam) / (2.0 * lam) + 0.5;
        let c2 = ((kf + lam) / (2.0 * lam) - 0.5).abs();
        // Gegenbauer endpoint bounds via ln Gamma ratios
        let ln_gk = ln_gamma(kf + 2.0 * lam) - ln_gamma(2.0 * lam) - ln_gamma(kf + 1.0);
        let ln_gk1 =
            ln_gamma(kf + 2.0 * (lam + 1.0)) - ln_gamma(2.0 * (lam + 1.0)) - ln_gamma(kf + 1.0);
        let scal = c1 * (ln_bessel_bound(kf * n + sp, x) - sp * ln_z + ln_gk).exp()
            + c2 * (ln_bessel_bound(kf * n + sp - 2.0 * nt, x) - sp * ln_z + ln_gk).exp();
        let biv = (ln_bessel_bound(kf * n + sp + 2.0 * nt + 1.0, x) - bp * ln_z + ln_gk1).exp()
            + (ln_bessel_bound(kf * n + sp + 1.0, x) - bp * ln_z + ln_gk1).exp();
        scal + biv
    };
    let (k_stop, tail_bound) = certified_stop_index(majorant, policy, min_terms, "m>2 kernel series")?;

    let base = sp; // minimal order used over all four streams
    let max_offset = k_stop * params.n() as usize + 2 * params.n_tilde() as usize + 1;
    let table = bessel_j_order_table(base, max_offset + 1, x, policy)?;
    let j_at = |order: f64| table[(order - base) as usize];

    let mut phase = Complex64::new(1.0, 0.0);
    let mut scal = Complex64::default();
    let mut biv_inner = Complex64::default();
    let mut geg = crate::specfun::GegenbauerSeq::new(lam, w);
    let mut geg1 = crate::specfun::GegenbauerSeq::new(lam + 1.0, w);
    let coef_c = step; // (-i)^n
    let coef_d = Complex64::new(0.0, 1.0);
    for k in 0..=k_stop {
        let kf = k as f64;
        let ck = geg.next().unwrap();
        let ck1 = geg1.next().unwrap();
        let c1 = (kf + lam) / (2.0 * lam) + 0.5;
        let c2 = ((kf + lam) / (2.0 * lam) - 0.5) * sgn;
        let ja = j_at(kf * n + sp);
        let jb = if k >= 1 { j_at(kf * n + sp - 2.0 * nt) } else { 0.0 };
        scal += phase * (ck * (c1 * ja + c2 * jb));
        let jc = j_at(kf * n + sp + 2.0 * nt + 1.0);
        let jd = j_at(kf * n + sp + 1.0);
        biv_inner += phase * ck1 * (coef_c * jc + coef_d * jd);
        phase *= step;
    }
    let value = KernelValue::new(
        base_pow(z, -sp) * scal,
        -base_pow(z, -bp) * biv_inner,
    );
    Ok((value, k_stop + 1, tail_bound))
}

// ---------------------------------------------------------------------------
// general c > -1
// ---------------------------------------------------------------------------

/// Kernel series for arbitrary c > -1, m > 2 (the unspecialized route).
///
/// The phase alpha_k is tracked as an accumulated angle rather than a power
/// so large k does not drift.
pub fn series_kernel_general(
    params: &GeneralDeformParams,
    point: &KernelEvalPoint,
    policy: &SeriesPolicy,
) -> Result<KernelValue> {
    Ok(eval_general(params, point, policy, 0)?.0)
}

/// As `series_kernel_general`, also reporting the certified tail bound.
pub fn series_kernel_general_certified(
    params: &GeneralDeformParams,
    point: &KernelEvalPoint,
    policy: &SeriesPolicy,
) -> Result<CertifiedKernelValue> {
    let (value, _, err_bound) = eval_general(params, point, policy, 0)?;
    Ok(CertifiedKernelValue { value, err_bound })
}

pub(crate) fn eval_general(
    params: &GeneralDeformParams,
    point: &KernelEvalPoint,
    policy: &SeriesPolicy,
    min_terms: usize,
) -> Result<(KernelValue, usize, f64)> {
    if params.m() <= 2 {
        return Err(Error::Domain(
            "series_kernel_general requires m > 2 (lambda > 0); use the m = 2 limit form".into(),
        ));
    }
    let lam = params.lambda();
    let mu = params.mu();
    let z = point.geometry.z();
    let w = point.geometry.w();
    let t = point.t;
    let x = z * t;
    let sp = (mu - 2.0) / 2.0;
    let bp = mu / 2.0;
    let angle_step = params.alpha_angle_step();

    if z == 0.0 {
        let scalar = Complex64::from(base_pow(0.5 * t, sp) / gamma(sp + 1.0));
        let mut coef = Complex64::new(0.0, 1.0);
        if params.c() == 0.0 {
            coef += Complex64::from_polar(1.0, angle_step); // alpha_1 = -i at c = 0
        }
        let bivector = -coef * (base_pow(0.5 * t, bp) / gamma(bp + 1.0));
        return Ok((KernelValue::new(scalar, bivector), 1, 0.0));
    }
    if x == 0.0 {
        let scalar = if sp == 0.0 { 1.0 } else { 0.0 };
        return Ok((
            KernelValue::new(Complex64::from(scalar), Complex64::default()),
            1,
            0.0,
        ));
    }

    let ln_z = z.ln();
    let order_a = |k: usize| params.gamma_k(k as i64) / 2.0 - 1.0;
    let order_b = |k: usize| params.gamma_k(k as i64 - 1) / 2.0;
    let majorant = |k: usize| -> f64 {
        let kf = k as f64;
        let c1 = (kf + lam) / (2.0 * lam) + 0.5;
        let c2 = ((kf + lam) / (2.0 * lam) - 0.5).abs();
        let ln_gk = ln_gamma(kf + 2.0 * lam) - ln_gamma(2.0 * lam) - ln_gamma(kf + 1.0);
        let ln_gk1 =
            ln_gamma(kf + 2.0 * (lam + 1.0)) - ln_gamma(2.0 * (lam + 1.0)) - ln_gamma(kf + 1.0);
        let scal = c1 * (ln_bessel_bound(order_a(k), x) - sp * ln_z + ln_gk).exp()
            + c2 * (ln_bessel_bound(order_b(k), x) - sp * ln_z + ln_gk).exp();
        // bivector streams are the k+1 orders attached to C_k^{lambda+1}
        let biv = (ln_bessel_bound(order_a(k + 1), x) - bp * ln_z + ln_gk1).exp()
            + (ln_bessel_bound(order_b(k + 1), x) - bp * ln_z + ln_gk1).exp();
        scal + biv
    };
    let (k_stop, tail_bound) =
        certified_stop_index(majorant, policy, min_terms, "general-c kernel series")?;

    let mut scal = Complex64::default();
    let mut biv_inner = Complex64::default();
    let mut geg = crate::specfun::GegenbauerSeq::new(lam, w);
    let mut geg1 = crate::specfun::GegenbauerSeq::new(lam + 1.0, w);
    let mut angle: f64 = 0.0; // angle of alpha_k
    let i = Complex64::new(0.0, 1.0);
    for k in 0..=k_stop {
        let kf = k as f64;
        let alpha_k = Complex64::from_polar(1.0, angle);
        let alpha_k1 = Complex64::from_polar(1.0, angle + angle_step);
        let alpha_km1 = Complex64::from_polar(1.0, angle - angle_step);
        let ck = geg.next().unwrap();
        let ck1 = geg1.next().unwrap();
        let c1 = (kf + lam) / (2.0 * lam) + 0.5;
        let c2 = (kf + lam) / (2.0 * lam) - 0.5;
        let ja = bessel_j(order_a(k), x, policy)?;
        let jb = if k >= 1 {
            bessel_j(order_b(k), x, policy)?
        } else {
            0.0 // the k = 0 coefficient vanishes; alpha_{-1} = 0 never enters
        };
        scal += ck * (alpha_k * (c1 * ja) - i * alpha_km1 * (c2 * jb));
        // shifted bivector sum: orders at k+1 against C_k^{lambda+1}
        let jc = bessel_j(order_a(k + 1), x, policy)?;
        let jd = bessel_j(order_b(k + 1), x, policy)?;
        biv_inner += ck1 * (alpha_k1 * jc + i * alpha_k * jd);
        angle += angle_step;
        if angle < -std::f64::consts::PI {
            angle += 2.0 * std::f64::consts::PI;
        }
    }
    let value = KernelValue::new(
        base_pow(z, -sp) * scal,
        -base_pow(z, -bp) * biv_inner,
    );
    Ok((value, k_stop + 1, tail_bound))
}

// ---------------------------------------------------------------------------
// shared truncation certificate
// ---------------------------------------------------------------------------

/// Find K such that the majorant tail past K is certified below tail_tol:
/// the observed ratio must be <= 1/2 and non-increasing, making
/// M(K+1)/(1 - rho) a sound geometric bound.
fn certified_stop_index(
    majorant: impl Fn(usize) -> f64,
    policy: &SeriesPolicy,
    min_terms: usize,
    context: &'static str,
) -> Result<(usize, f64)> {
    let mut prev = majorant(0).max(f64::MIN_POSITIVE);
    let mut prev_ratio = f64::INFINITY;
    for k in 1..policy.max_terms {
        let cur = majorant(k);
        if cur == 0.0 {
            return Ok((k.max(min_terms), 0.0));
        }
        let ratio = cur / prev;
        if k > min_terms && ratio <= 0.5 && ratio <= prev_ratio {
            let tail = cur / (1.0 - ratio);
            if tail <= policy.tail_tol {
                return Ok((k - 1, tail));
            }
        }
        prev = cur;
        prev_ratio = ratio;
    }
    Err(Error::NonConvergence {
        context,
        tol: policy.tail_tol,
        achieved: prev,
        terms: policy.max_terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::PairGeometry;

    fn pt(z: f64, w: f64, t: f64) -> KernelEvalPoint {
        KernelEvalPoint::new(PairGeometry::new(z, w).unwrap(), t).unwrap()
    }

    #[test]
    fn m2_zero_z_leading_order() {
        // n = 3, z = 0, t = 1: scalar = t^n~/(2^n~ n~!) = 1/2
        let p = DeformParams::new(2, 3).unwrap();
        let v = series_kernel_m2(&p, &pt(0.0, 0.3, 1.0), &SeriesPolicy::default()).unwrap();
        assert!((v.scalar.re - 0.5).abs() < 1e-15 && v.scalar.im.abs() < 1e-15);
    }

    #[test]
    fn m2_small_z_approaches_leading_order() {
        let p = DeformParams::new(2, 3).unwrap();
        let pol = SeriesPolicy::default();
        let at0 = series_kernel_m2(&p, &pt(0.0, 0.3, 1.0), &pol).unwrap();
        let near = series_kernel_m2(&p, &pt(1e-5, 0.3, 1.0), &pol).unwrap();
        assert!(at0.max_abs_diff(&near) < 1e-4);
    }

    #[test]
    fn m2_bivector_continuous_at_w_one() {
        let p = DeformParams::new(2, 5).unwrap();
        let pol = SeriesPolicy::default();
        let a = series_kernel_m2(&p, &pt(2.0, 0.999999, 1.0), &pol).unwrap();
        let b = series_kernel_m2(&p, &pt(2.0, 1.0, 1.0), &pol).unwrap();
        assert!(
            (a.bivector - b.bivector).norm() < 1e-6,
            "biv jump {} vs {}",
            a.bivector,
            b.bivector
        );
        assert!(b.is_finite());
    }

    #[test]
    fn classical_reduction_m2() {
        // n = 1: kernel must be exp(-i z w) with zero bivector
        let p = DeformParams::classical(2).unwrap();
        let pol = SeriesPolicy::default();
        for &(z, w) in &[(0.5, 0.3), (2.0, -0.8), (6.0, 0.9)] {
            let v = series_kernel_m2(&p, &pt(z, w, 1.0), &pol).unwrap();
            let expect = Complex64::from_polar(1.0, -z * w);
            assert!((v.scalar - expect).norm() < 1e-11, "z={z} w={w}");
            assert!(v.bivector.norm() < 1e-12);
        }
    }

    #[test]
    fn n_specialized_zero_z_leading_order() {
        let p = DeformParams::new(4, 3).unwrap();
        let v = series_kernel_n(&p, &pt(0.0, 0.3, 1.0), &SeriesPolicy::default()).unwrap();
        let sp = p.scalar_power();
        let expect = 0.5f64.powf(sp) / gamma(sp + 1.0);
        assert!((v.scalar.re - expect).abs() < 1e-15);
        let bp = p.bivector_power();
        let expect_b = -Complex64::new(0.0, 1.0) * 0.5f64.powf(bp) / gamma(bp + 1.0);
        assert!((v.bivector - expect_b).norm() < 1e-15);
    }

    /// Brute-force classical plane-wave expansion oracle:
    /// exp(-izw) = 2^l Gamma(l) z^-l sum_k (l+k)(-i)^k J_{l+k}(z) C_k^l(w).
    fn classical_scalar_oracle(m: u32, z: f64, w: f64) -> Complex64 {
        let lam = (m as f64 - 2.0) / 2.0;
        Complex64::from_polar(1.0, -z * w) / (2f64.powf(lam) * gamma(lam + 1.0))
    }

    #[test]
    fn classical_reduction_general_c() {
        let pol = SeriesPolicy::default();
        for &m in &[3u32, 4, 5] {
            let g = GeneralDeformParams::new(m, 0.0).unwrap();
            for &(z, w) in &[(0.5, 0.4), (2.0, 0.5), (4.0, -0.7)] {
                let v = series_kernel_general(&g, &pt(z, w, 1.0), &pol).unwrap();
                let want = classical_scalar_oracle(m, z, w);
                assert!(
                    (v.scalar - want).norm() < 1e-9,
                    "m={m} z={z} w={w}: {} vs {want}",
                    v.scalar
                );
                assert!(v.bivector.norm() < 1e-9, "m={m} z={z} w={w}");
            }
        }
    }

    #[test]
    fn general_c_matches_specialized_series() {
        let pol = SeriesPolicy::default();
        for &(m, n) in &[(4u32, 3u32), (3, 3), (4, 5), (6, 3)] {
            let d = DeformParams::new(m, n).unwrap();
            let g = GeneralDeformParams::new(m, d.c()).unwrap();
            for &(z, w, t) in &[(1.0, 0.2, 1.0), (0.5, -0.4, 1.0), (2.0, 0.7, 0.6)] {
                let a = series_kernel_n(&d, &pt(z, w, t), &pol).unwrap();
                let b = series_kernel_general(&g, &pt(z, w, t), &pol).unwrap();
                assert!(
                    a.max_abs_diff(&b) < 1e-10,
                    "m={m} n={n} z={z} w={w} t={t}: diff {}",
                    a.max_abs_diff(&b)
                );
            }
        }
    }

    #[test]
    fn truncation_certificate_holds() {
        // re-evaluating with double the term budget moves the value by less
        // than the reported tail bound
        let pol = SeriesPolicy::default();
        let p = DeformParams::new(2, 5).unwrap();
        let point = pt(6.0, 0.35, 1.0);
        let (v1, terms, tail) = eval_m2(&p, &point, &pol, 0).unwrap();
        let (v2, _, _) = eval_m2(&p, &point, &pol, 2 * terms).unwrap();
        assert!(
            v1.max_abs_diff(&v2) <= tail.max(1e-15),
            "diff {} > tail {}",
            v1.max_abs_diff(&v2),
            tail
        );

        let p = DeformParams::new(4, 3).unwrap();
        let (v1, terms, tail) = eval_n(&p, &point, &pol, 0).unwrap();
        let (v2, _, _) = eval_n(&p, &point, &pol, 2 * terms).unwrap();
        assert!(v1.max_abs_diff(&v2) <= tail.max(1e-15));
    }

    #[test]
    fn rejects_wrong_dimension() {
        let pol = SeriesPolicy::default();
        let p2 = DeformParams::new(2, 3).unwrap();
        let p4 = DeformParams::new(4, 3).unwrap();
        assert!(series_kernel_n(&p2, &pt(1.0, 0.0, 1.0), &pol).is_err());
        assert!(series_kernel_m2(&p4, &pt(1.0, 0.0, 1.0), &pol).is_err());
        let g2 = GeneralDeformParams::new(2, -0.5).unwrap();
        assert!(series_kernel_general(&g2, &pt(1.0, 0.0, 1.0), &pol).is_err());
    }
}
