//! Floating-point location of Bessel zeros, used only to cross-check the exact
//! zeta tables. Intended for `0 <= mu <= 5`.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

use num_traits::{ToPrimitive, Zero};

use crate::algebra::Rational;
use crate::error::{Error, Result};

/// Below this argument `J_mu` is evaluated by its power series, above it by
/// the Hankel expansion.
const SERIES_LIMIT: f64 = 14.0;
const SCAN_STEP: f64 = FRAC_PI_4;
const MAX_BISECTIONS: usize = 200;

fn to_f64_mu(mu: &Rational) -> Result<f64> {
    if mu < &Rational::zero() {
        return Err(Error::BadMu(mu.clone()));
    }
    Ok(mu.to_f64().expect("finite rational"))
}

/// `sum_m (-1)^m (x/2)^(2m) / (m! (mu+1)_m)`, which is `J_mu(x)` divided by
/// the positive factor `(x/2)^mu / Gamma(mu+1)`.
fn power_series(mu: f64, x: f64) -> f64 {
    let q = -(x * x) / 4.0;
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut m = 0.0;
    loop {
        m += 1.0;
        term *= q / (m * (mu + m));
        sum += term;
        if term.abs() < 1e-20 * sum.abs().max(1e-300) {
            return sum;
        }
    }
}

/// `P cos(chi) - Q sin(chi)`, which is `J_mu(x) sqrt(pi x / 2)`.
fn hankel(mu: f64, x: f64) -> f64 {
    let m4 = 4.0 * mu * mu;
    let chi = x - mu * FRAC_PI_2 - FRAC_PI_4;
    let (mut p, mut q) = (0.0, 0.0);
    let mut term = 1.0;
    let mut prev = f64::INFINITY;
    for k in 0..60 {
        if k > 0 {
            let odd = (2 * k - 1) as f64;
            term *= (m4 - odd * odd) / (k as f64 * 8.0 * x);
        }
        if term.abs() > prev {
            break;
        }
        prev = term.abs();
        match k % 4 {
            0 => p += term,
            1 => q += term,
            2 => p -= term,
            _ => q -= term,
        }
        if term == 0.0 || term.abs() < 1e-18 {
            break;
        }
    }
    p * chi.cos() - q * chi.sin()
}

/// A function with the same sign and the same positive zeros as `J_mu`.
pub fn bessel_j_sign_function(mu: &Rational, x: f64) -> Result<f64> {
    let mu = to_f64_mu(mu)?;
    Ok(eval(mu, x))
}

fn eval(mu: f64, x: f64) -> f64 {
    if x <= SERIES_LIMIT {
        power_series(mu, x)
    } else {
        hankel(mu, x)
    }
}

fn bisect(mu: f64, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
    let mut f_lo = eval(mu, lo);
    for _ in 0..MAX_BISECTIONS {
        if hi - lo <= tol {
            return Ok(0.5 * (lo + hi));
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = eval(mu, mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if (f_mid < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Err(Error::NoConvergence { near: 0.5 * (lo + hi) })
}

/// The first `count` positive zeros of `J_mu`.
pub(crate) fn bessel_zeros(mu: &Rational, count: usize, tol: f64) -> Result<Vec<f64>> {
    assert!(tol > 0.0, "tolerance must be positive");
    let mu = to_f64_mu(mu)?;
    let mut zeros = Vec::with_capacity(count);
    let mut x = 0.0;
    let mut f = eval(mu, x);
    while zeros.len() < count {
        let next = x + SCAN_STEP;
        let f_next = eval(mu, next);
        if f_next == 0.0 {
            zeros.push(next);
            x = next + SCAN_STEP * 0.5;
            f = eval(mu, x);
            continue;
        }
        if (f < 0.0) != (f_next < 0.0) {
            zeros.push(bisect(mu, x, next, tol)?);
        }
        x = next;
        f = f_next;
    }
    Ok(zeros)
}

/// `j_{mu,k}`, the `k`-th positive zero of `J_mu`, to within `tol`.
pub fn bessel_zero_numeric(mu: &Rational, k: usize, tol: f64) -> Result<f64> {
    assert!(k >= 1, "zeros are indexed from 1");
    Ok(*bessel_zeros(mu, k, tol)?.last().expect("k >= 1"))
}

/// Estimate of `sum_{k > K} j_{mu,k}^(-2n)` from the McMahon form
/// `j_k ~ beta - (4mu^2 - 1) / (8 beta)`, `beta = (k + mu/2 - 1/4) pi`, summed
/// by the midpoint rule with its first Euler-Maclaurin correction.
pub fn zeta_tail_estimate(mu: f64, n: usize, k: usize) -> f64 {
    let s = 2.0 * n as f64;
    let b0 = (k as f64 + 0.5 + mu / 2.0 - 0.25) * PI;
    let lead = 1.0 / (PI * (s - 1.0) * b0.powf(s - 1.0));
    let mcmahon = s * (4.0 * mu * mu - 1.0) / 8.0 / (PI * (s + 1.0) * b0.powf(s + 1.0));
    let midpoint = -s * PI / (24.0 * b0.powf(s + 1.0));
    lead + mcmahon + midpoint
}

/// `sum_{k=1}^{K} j_{mu,k}^(-2n)` plus [`zeta_tail_estimate`].
pub fn bessel_zeta_numeric(mu: &Rational, n: usize, k: usize) -> Result<f64> {
    assert!(n >= 1 && k >= 1);
    let zeros = bessel_zeros(mu, k, 1e-10)?;
    let s = 2 * n as i32;
    // smallest terms first
    let head: f64 = zeros.iter().rev().map(|j| j.powi(-s)).sum();
    Ok(head + zeta_tail_estimate(to_f64_mu(mu)?, n, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    #[test]
    fn first_zeros() {
        let j11 = bessel_zero_numeric(&rat(1), 1, 1e-12).unwrap();
        assert!((j11 - 3.831_705_970_207_512).abs() < 1e-10);
        let j01 = bessel_zero_numeric(&rat(0), 1, 1e-12).unwrap();
        assert!((j01 - 2.404_825_557_695_773).abs() < 1e-10);
        // J_{1/2} is a multiple of sin(x) / sqrt(x)
        for k in 1..=8 {
            let j = bessel_zero_numeric(&ratio(1, 2), k, 1e-12).unwrap();
            assert!((j - k as f64 * PI).abs() < 1e-10, "k = {k}: {j}");
        }
    }

    #[test]
    fn representations_agree_at_switch() {
        for mu in [0.0, 0.5, 1.0, 2.0, 3.0] {
            for x in [13.0, 14.0, 15.0] {
                let series = power_series(mu, x) * (x / 2.0f64).powf(mu) / gamma(mu + 1.0);
                let d = series - hankel(mu, x) * (2.0 / (PI * x)).sqrt();
                assert!(d.abs() < 1e-9, "mu = {mu}, x = {x}: {d}");
            }
        }
    }

    /// Gamma at integers and half-integers, enough for the test above.
    fn gamma(x: f64) -> f64 {
        if x.fract() == 0.0 {
            (1..x as u64).map(|k| k as f64).product()
        } else {
            let mut g = PI.sqrt();
            let mut y = 0.5;
            while y < x {
                g *= y;
                y += 1.0;
            }
            g
        }
    }

    #[test]
    fn zeta_sums() {
        let z = bessel_zeta_numeric(&rat(1), 1, 200).unwrap();
        assert!((z - 0.125).abs() < 1e-9, "{z}");
        let z = bessel_zeta_numeric(&rat(0), 2, 100).unwrap();
        assert!((z - 1.0 / 32.0).abs() < 1e-10, "{z}");
    }

    #[test]
    fn zeta_sum_uniform_case() {
        let z = bessel_zeta_numeric(&ratio(1, 2), 1, 10_000).unwrap();
        assert!((z - 1.0 / 6.0).abs() < 1e-6, "{z}");
    }

    #[test]
    fn tail_correction_terms_matter() {
        // the correction terms take the K = 200 error well below the leading-term-only error
        let zeros = bessel_zeros(&rat(1), 200, 1e-10).unwrap();
        let head: f64 = zeros.iter().rev().map(|j| j.powi(-2)).sum();
        let b0 = (200.5 + 0.25) * PI;
        let lead_only = head + 1.0 / (PI * b0);
        let full = head + zeta_tail_estimate(1.0, 1, 200);
        assert!((full - 0.125).abs() * 100.0 < (lead_only - 0.125).abs());
    }

    #[test]
    fn errors() {
        assert!(matches!(bessel_zero_numeric(&ratio(-1, 3), 1, 1e-8), Err(Error::BadMu(_))));
        assert!(matches!(
            bessel_zero_numeric(&rat(1), 1, 1e-300),
            Err(Error::NoConvergence { .. })
        ));
    }
}
