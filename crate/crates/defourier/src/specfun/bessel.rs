//! Bessel function of the first kind for real order nu >= 0.
//!
//! Two evaluation paths share one error contract (absolute error below
//! `policy.tail_tol`):
//!
//! * `x <= 30`: the defining power series, accumulated in double-double so
//!   the alternating cancellation (up to ~e^x amplification) cannot eat the
//!   requested digits. The remainder is bounded by the first omitted term
//!   once term magnitudes decrease.
//! * `x > 30`: Miller backward recurrence normalised with the Gegenbauer
//!   sum (x/2)^v = sum_k (v+2k) Gamma(v+k)/k! J_{v+2k}(x), which covers
//!   integer and fractional order classes alike. Two start offsets are
//!   compared so the result is self-validating.

use super::gamma::{gamma, ln_gamma};
use super::SeriesPolicy;
use crate::dd::Dd;
use crate::error::{Error, Result};

/// Crossover between the power-series and backward-recurrence paths.
pub(crate) const LARGE_X_SWITCH: f64 = 30.0;

/// J_nu(x) for nu >= 0, x >= 0, absolute error below `policy.tail_tol`.
pub fn bessel_j(nu: f64, x: f64, policy: &SeriesPolicy) -> Result<f64> {
    if !nu.is_finite() || nu < 0.0 {
        return Err(Error::Domain(format!("bessel_j requires nu >= 0, got {nu}")));
    }
    if !x.is_finite() || x < 0.0 {
        return Err(Error::Domain(format!("bessel_j requires x >= 0, got {x}")));
    }
    if x <= LARGE_X_SWITCH {
        bessel_j_power_series(nu, x, policy)
    } else {
        bessel_j_backward_recurrence(nu, x, policy)
    }
}

/// J_{base+j}(x) for j = 0..count, all orders sharing the fractional class
/// of `base`. One backward sweep serves every order when x is large.
pub fn bessel_j_order_table(base: f64, count: usize, x: f64, policy: &SeriesPolicy) -> Result<Vec<f64>> {
    if !base.is_finite() || base < 0.0 {
        return Err(Error::Domain(format!(
            "bessel_j_order_table requires base >= 0, got {base}"
        )));
    }
    if x <= LARGE_X_SWITCH {
        (0..count)
            .map(|j| bessel_j_power_series(base + j as f64, x, policy))
            .collect()
    } else {
        let offset = base.floor() as usize;
        let nu0 = base - offset as f64;
        let table = miller_sweep(nu0, offset + count, x, policy)?;
        Ok(table[offset..offset + count].to_vec())
    }
}

/// Power-series evaluation, terms and accumulator in double-double.
pub(crate) fn bessel_j_power_series(nu: f64, x: f64, policy: &SeriesPolicy) -> Result<f64> {
    if x == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    let half = 0.5 * x;
    // leading factor (x/2)^nu / Gamma(nu+1); a pure relative scale on the sum
    let t0 = (nu * half.ln() - ln_gamma(nu + 1.0)).exp();
    if t0 == 0.0 {
        return Ok(0.0);
    }
    let q = Dd::from_prod(half, half);
    let mut coeff = Dd::ONE;
    let mut sum = Dd::ONE;
    for k in 1..=policy.max_terms {
        let kf = k as f64;
        let denom = Dd::from_sum(kf, nu).mul_f64(kf);
        coeff = coeff.mul(q).div(denom).neg();
        sum = sum.add(coeff);
        if t0 * coeff.abs_hi() > policy.overflow_guard {
            return Err(Error::NonConvergence {
                context: "bessel_j series overflow guard",
                tol: policy.tail_tol,
                achieved: t0 * coeff.abs_hi(),
                terms: k,
            });
        }
        // next term magnitude; alternating majorant bound once ratios < 1
        let next_ratio = q.hi / ((kf + 1.0) * (kf + 1.0 + nu));
        if next_ratio < 1.0 && t0 * coeff.abs_hi() * next_ratio <= policy.tail_tol {
            return Ok(t0 * sum.to_f64());
        }
    }
    Err(Error::NonConvergence {
        context: "bessel_j series",
        tol: policy.tail_tol,
        achieved: t0 * coeff.abs_hi(),
        terms: policy.max_terms,
    })
}

/// Backward-recurrence evaluation (large x), self-checked with a second
/// start offset.
pub(crate) fn bessel_j_backward_recurrence(nu: f64, x: f64, policy: &SeriesPolicy) -> Result<f64> {
    let offset = nu.floor() as usize;
    let nu0 = nu - offset as f64;
    let table = miller_sweep(nu0, offset + 1, x, policy)?;
    Ok(table[offset])
}

/// Backward recurrence from a high trial order down to nu0 in [0,1),
/// normalised by the Gegenbauer sum. Returns J_{nu0+j}(x) for j <= max_index.
fn miller_sweep(nu0: f64, n_orders: usize, x: f64, policy: &SeriesPolicy) -> Result<Vec<f64>> {
    debug_assert!((0.0..1.0).contains(&nu0));
    let start = start_order(x, n_orders);
    let first = sweep_once(nu0, n_orders, x, start);
    let second = sweep_once(nu0, n_orders, x, start + 24);
    let tol = policy.tail_tol;
    let mut worst = 0.0f64;
    for (a, b) in first.iter().zip(second.iter()) {
        worst = worst.max((a - b).abs());
    }
    if worst > 0.25 * tol {
        // one escalation with a much deeper start
        let third = sweep_once(nu0, n_orders, x, start + 120);
        let mut worst2 = 0.0f64;
        for (a, b) in second.iter().zip(third.iter()) {
            worst2 = worst2.max((a - b).abs());
        }
        if worst2 > 0.25 * tol {
            return Err(Error::NonConvergence {
                context: "bessel_j backward recurrence",
                tol,
                achieved: worst2,
                terms: start + 120,
            });
        }
        return Ok(third);
    }
    Ok(second)
}

fn start_order(x: f64, n_orders: usize) -> usize {
    let from_x = x + 12.0 * x.powf(1.0 / 3.0) + 30.0;
    (from_x.max(n_orders as f64 + 30.0)).ceil() as usize
}

fn sweep_once(nu0: f64, n_orders: usize, x: f64, start: usize) -> Vec<f64> {
    const RESCALE_AT: f64 = 1e250;
    let mut values = vec![0.0f64; start + 2];
    values[start + 1] = 0.0;
    values[start] = 1e-280;
    let inv_x = 1.0 / x;
    for k in (1..=start).rev() {
        let v = 2.0 * (nu0 + k as f64) * inv_x * values[k] - values[k + 1];
        values[k - 1] = v;
        if v.abs() > RESCALE_AT {
            let inv = 1.0 / v.abs();
            for item in values[k - 1..].iter_mut() {
                *item *= inv;
            }
        }
    }
    // normalisation: sum_k c_k J~_{nu0+2k} = (x/2)^{nu0}
    let mut norm = Dd::ZERO;
    let mut c = gamma(nu0 + 1.0);
    norm = norm.add(Dd::from_f64(c * values[0]));
    if start >= 2 {
        c *= nu0 + 2.0; // c_1 = (nu0+2) Gamma(nu0+1)
        norm = norm.add(Dd::from_f64(c * values[2]));
    }
    let mut k = 1usize;
    while 2 * (k + 1) <= start {
        let kf = k as f64;
        c *= (nu0 + 2.0 * kf + 2.0) * (nu0 + kf) / ((nu0 + 2.0 * kf) * (kf + 1.0));
        norm = norm.add(Dd::from_f64(c * values[2 * (k + 1)]));
        k += 1;
    }
    let scale = (0.5 * x).powf(nu0) / norm.to_f64();
    values[..n_orders].iter().map(|v| v * scale).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn policy() -> SeriesPolicy {
        SeriesPolicy::default()
    }

    #[test]
    fn order_zero_at_origin_is_one() {
        assert_eq!(bessel_j(0.0, 0.0, &policy()).unwrap(), 1.0);
        assert_eq!(bessel_j(2.5, 0.0, &policy()).unwrap(), 0.0);
    }

    // half-integer closed form sqrt(2/(pi x)) sin x, evaluated independently
    fn j_half_oracle(x: f64) -> f64 {
        (2.0 / (PI * x)).sqrt() * x.sin()
    }

    #[test]
    fn half_integer_closed_form() {
        let x = PI / 2.0;
        let expect = 2.0 / PI; // sqrt(2/(pi*pi/2)) * 1
        assert!((bessel_j(0.5, x, &policy()).unwrap() - expect).abs() < 1e-14);
        for &x in &[0.3, 1.0, 4.7, 12.0, 25.0] {
            let got = bessel_j(0.5, x, &policy()).unwrap();
            assert!(
                (got - j_half_oracle(x)).abs() < 1e-13,
                "x={x} got={got} want={}",
                j_half_oracle(x)
            );
        }
    }

    #[test]
    fn half_integer_closed_form_large_argument() {
        // exercises the backward-recurrence path against an exact formula
        for &x in &[40.0, 100.0, 280.0] {
            let got = bessel_j(0.5, x, &policy()).unwrap();
            assert!(
                (got - j_half_oracle(x)).abs() < 1e-13,
                "x={x} got={got} want={}",
                j_half_oracle(x)
            );
        }
    }

    /// Brute-force partial sums of the defining series with an interval tail
    /// bound: plain f64, kept independent of the double-double machinery.
    fn brute_force_series(nu: f64, x: f64, n_terms: usize) -> (f64, f64) {
        let half = 0.5 * x;
        let mut term = (nu * half.ln() - ln_gamma(nu + 1.0)).exp();
        let mut sum = term;
        for k in 1..n_terms {
            let kf = k as f64;
            term *= -half * half / (kf * (kf + nu));
            sum += term;
        }
        let kf = n_terms as f64;
        let tail = (term * half * half / (kf * (kf + nu))).abs();
        (sum, tail)
    }

    #[test]
    fn matches_brute_force_series_with_tail_bound() {
        let (brute, tail) = brute_force_series(3.0, 2.0, 40);
        assert!(tail < 1e-12, "tail bound {tail:e} not below 1e-12");
        let got = bessel_j(3.0, 2.0, &policy()).unwrap();
        assert!((got - brute).abs() <= 1e-12 + tail);
    }

    #[test]
    fn paths_agree_in_overlap() {
        for &nu in &[0.0, 0.5, 1.0, 3.25, 7.0] {
            for &x in &[2.0, 9.5, 17.0, 24.0, 29.0] {
                let a = bessel_j_power_series(nu, x, &policy()).unwrap();
                let b = bessel_j_backward_recurrence(nu, x, &policy()).unwrap();
                assert!((a - b).abs() < 1e-12, "nu={nu} x={x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn integer_order_parseval_sum_at_large_x() {
        // J_0^2 + 2 sum_k J_k^2 = 1, independent of the Gegenbauer normalisation
        let table = bessel_j_order_table(0.0, 160, 100.0, &policy()).unwrap();
        let sum = table[0] * table[0]
            + 2.0 * table[1..].iter().map(|j| j * j).sum::<f64>();
        assert!((sum - 1.0).abs() < 1e-12, "parseval sum {sum}");
    }

    #[test]
    fn rejects_negative_argument() {
        assert!(matches!(
            bessel_j(1.0, -0.5, &policy()),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn order_table_matches_single_calls() {
        let t = bessel_j_order_table(1.5, 8, 6.0, &policy()).unwrap();
        for (j, v) in t.iter().enumerate() {
            let single = bessel_j(1.5 + j as f64, 6.0, &policy()).unwrap();
            assert!((v - single).abs() < 1e-14);
        }
        let t = bessel_j_order_table(2.5, 6, 45.0, &policy()).unwrap();
        for (j, v) in t.iter().enumerate() {
            let single = bessel_j(2.5 + j as f64, 45.0, &policy()).unwrap();
            assert!((v - single).abs() < 1e-13);
        }
    }
}
