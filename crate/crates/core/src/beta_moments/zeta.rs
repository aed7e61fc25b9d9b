use num_traits::{One, Signed, Zero};

use crate::algebra::{big_rat, binomial, factorial, pochhammer, pow2, rat, Rational};
use crate::error::Result;

use super::moments::{moments_to_cumulants, CumulantSeq, MomentSeq};
use super::check_mu;

/// Exact values `zeta_mu(2), zeta_mu(4), ..., zeta_mu(2 n_max)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaTable {
    mu: Rational,
    values: Vec<Rational>,
}

impl ZetaTable {
    pub fn mu(&self) -> &Rational {
        &self.mu
    }

    /// `values[n - 1] = zeta_mu(2n)`.
    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// `zeta_mu(2n)` for `n >= 1`.
    pub fn get(&self, n: usize) -> &Rational {
        assert!(n >= 1, "zeta table is indexed from 1");
        &self.values[n - 1]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Rayleigh recurrence `(n + mu) zeta(2n) = sum_{r=1}^{n-1} zeta(2r) zeta(2n-2r)`
/// from `zeta(2) = 1 / (4(mu+1))`.
pub fn bessel_zeta(mu: &Rational, n_max: usize) -> Result<ZetaTable> {
    check_mu(mu)?;
    let mut values: Vec<Rational> = Vec::with_capacity(n_max);
    if n_max >= 1 {
        values.push(Rational::one() / (rat(4) * (mu + Rational::one())));
    }
    for n in 2..=n_max {
        let mut acc = Rational::zero();
        for r in 1..n {
            acc += &values[r - 1] * &values[n - r - 1];
        }
        values.push(acc / (rat(n as i64) + mu));
    }
    Ok(ZetaTable {
        mu: mu.clone(),
        values,
    })
}

fn cumulant_from_table(z: &ZetaTable, n: usize) -> Rational {
    if n % 2 == 1 {
        return Rational::zero();
    }
    let m = n / 2;
    let v = big_rat(pow2(n + 1) * factorial(n - 1)) * z.get(m);
    if m % 2 == 1 {
        v
    } else {
        -v
    }
}

/// `kappa(n)` of `X_*`: zero for odd `n`, and for `n = 2m`
/// `(-1)^(m+1) 2^(2m+1) (2m-1)! zeta_mu(2m)`.
pub fn cumulant_from_zeta(mu: &Rational, n: usize) -> Result<Rational> {
    assert!(n >= 1, "cumulants are indexed from 1");
    let z = bessel_zeta(mu, n / 2)?;
    Ok(cumulant_from_table(&z, n))
}

/// `kappa(1..=n_max)` of `X_*` from one zeta table.
pub fn cumulant_seq_from_zeta(mu: &Rational, n_max: usize) -> Result<CumulantSeq> {
    let z = bessel_zeta(mu, n_max / 2)?;
    Ok(CumulantSeq::new(
        (1..=n_max).map(|n| cumulant_from_table(&z, n)).collect(),
    ))
}

fn a_closed_from_table(mu: &Rational, z: &ZetaTable, n: usize) -> Rational {
    big_rat(pow2(2 * n + 1) * factorial(n - 1)) * pochhammer(&(mu + Rational::one()), n) * z.get(n)
}

/// `a_n(mu) = 2^(2n+1) (n-1)! (mu+1)_n zeta_mu(2n)`.
pub fn a_mu_closed(mu: &Rational, n: usize) -> Result<Rational> {
    assert!(n >= 1, "sequences are 1-indexed");
    let z = bessel_zeta(mu, n)?;
    Ok(a_closed_from_table(mu, &z, n))
}

/// `a_1(mu)..a_{n_max}(mu)` by the closed form.
pub fn a_mu_closed_table(mu: &Rational, n_max: usize) -> Result<Vec<Rational>> {
    let z = bessel_zeta(mu, n_max)?;
    Ok((1..=n_max).map(|n| a_closed_from_table(mu, &z, n)).collect())
}

/// `a_1(mu)..a_{n_max}(mu)` from the quadratic recurrence
///
/// ```text
/// a_n = 1 / (2 binom(n+mu-1, n-1)) sum_{k=1}^{n-1} binom(n+mu-1, n-k-1) binom(n+mu-1, k-1) a_k a_{n-k}
/// ```
///
/// with a caller-chosen `a_1`. The recurrence is homogeneous of degree two,
/// so changing `a_1` from 2 to `c` multiplies `a_n` by `(c/2)^n`.
pub fn a_mu_recur_table(mu: &Rational, n_max: usize, a1: &Rational) -> Result<Vec<Rational>> {
    check_mu(mu)?;
    let mut a: Vec<Rational> = Vec::with_capacity(n_max);
    if n_max == 0 {
        return Ok(a);
    }
    a.push(a1.clone());
    for n in 2..=n_max {
        let top = rat(n as i64 - 1) + mu;
        let row: Vec<Rational> = (0..n).map(|k| binomial(&top, k)).collect();
        let mut acc = Rational::zero();
        for k in 1..n {
            acc += &row[n - k - 1] * &row[k - 1] * &a[k - 1] * &a[n - k - 1];
        }
        a.push(acc / (rat(2) * &row[n - 1]));
    }
    Ok(a)
}

pub fn a_mu_recur(mu: &Rational, n: usize, a1: &Rational) -> Result<Rational> {
    assert!(n >= 1, "sequences are 1-indexed");
    Ok(a_mu_recur_table(mu, n, a1)?.pop().expect("n >= 1"))
}

/// `a_n(mu) = 2 (-1)^(n+1) kappa(2n) / E[X_*^{2n}]` with the cumulants obtained
/// from the moments by the moment-cumulant convolution, not from zeta.
pub fn a_mu_from_cumulants(mu: &Rational, n_max: usize) -> Result<Vec<Rational>> {
    let m = MomentSeq::symmetric_beta(mu, 2 * n_max)?;
    let k = moments_to_cumulants(&m);
    Ok((1..=n_max)
        .map(|n| {
            let v = rat(2) * k.get(2 * n) / m.get(2 * n);
            if n % 2 == 1 {
                v
            } else {
                -v
            }
        })
        .collect())
}

/// Generalized Lasalle numbers `A_n^mu = (-1)^(n+1) kappa(2n) = 2^(2n+1) (2n-1)! zeta_mu(2n)`;
/// at `mu = 1` these are `A_n`.
pub fn lasalle_generalized(mu: &Rational, n: usize) -> Result<Rational> {
    assert!(n >= 1, "sequences are 1-indexed");
    Ok(cumulant_from_zeta(mu, 2 * n)?.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::error::Error;
    use crate::sequences::{a_table_def, b_table, lasalle_a_table};

    fn r(s: &str) -> Rational {
        crate::algebra::parse_rational(s).unwrap()
    }

    fn rs(v: &[&str]) -> Vec<Rational> {
        v.iter().map(|s| r(s)).collect()
    }

    #[test]
    fn zeta_base_values() {
        assert_eq!(bessel_zeta(&rat(1), 1).unwrap().values(), &[ratio(1, 8)]);
        assert_eq!(*bessel_zeta(&rat(1), 2).unwrap().get(2), ratio(1, 192));
        assert_eq!(*bessel_zeta(&ratio(-1, 2), 1).unwrap().get(1), ratio(1, 2));
        assert!(matches!(bessel_zeta(&rat(-1), 3), Err(Error::BadMu(_))));
        assert!(bessel_zeta(&rat(2), 0).unwrap().is_empty());
    }

    #[test]
    fn zeta_positive_and_decreasing() {
        for mu in [rat(0), ratio(1, 2), rat(1)] {
            let z = bessel_zeta(&mu, 20).unwrap();
            assert!(z.values().iter().all(|v| v.is_positive()));
            assert!(z.values().windows(2).all(|w| w[1] < w[0]), "mu = {mu}");
        }
    }

    #[test]
    fn cumulants() {
        assert_eq!(cumulant_from_zeta(&rat(1), 2).unwrap(), rat(1));
        for mu in [rat(0), ratio(7, 3)] {
            assert!(cumulant_from_zeta(&mu, 3).unwrap().is_zero());
        }
        let big_a = lasalle_a_table(20);
        for n in 1..=20 {
            let k = cumulant_from_zeta(&rat(1), 2 * n).unwrap();
            let signed = if n % 2 == 1 { k } else { -k };
            assert_eq!(signed, big_rat(big_a[n - 1].clone()));
            assert_eq!(lasalle_generalized(&rat(1), n).unwrap(), big_rat(big_a[n - 1].clone()));
        }
    }

    #[test]
    fn convolution_recovers_zeta_cumulants() {
        for mu in [rat(0), ratio(1, 2), rat(1)] {
            let m = MomentSeq::symmetric_beta(&mu, 40).unwrap();
            let k = moments_to_cumulants(&m);
            assert_eq!(k, cumulant_seq_from_zeta(&mu, 40).unwrap(), "mu = {mu}");
        }
    }

    #[test]
    fn closed_form_lists() {
        let a1: Vec<Rational> = a_table_def(7).into_iter().map(big_rat).collect();
        assert_eq!(a_mu_closed_table(&rat(1), 7).unwrap(), a1);
        assert_eq!(
            a_mu_closed_table(&rat(2), 7).unwrap(),
            rs(&["2", "2/3", "8/9", "7/3", "88/9", "1594/27", "1448/3"])
        );
        assert_eq!(
            a_mu_closed_table(&rat(3), 7).unwrap(),
            rs(&["2", "1/2", "1/2", "39/40", "3", "263/20", "309/4"])
        );
        assert_eq!(a_mu_closed(&rat(1), 6).unwrap(), rat(495));
    }

    #[test]
    fn arcsine_case_is_twice_b() {
        let b = b_table(30);
        let a0 = a_mu_closed_table(&rat(0), 30).unwrap();
        for n in 1..=30 {
            assert_eq!(a0[n - 1], rat(2) * big_rat(b[n - 1].clone()));
        }
    }

    #[test]
    fn route_triangle() {
        for mu in [rat(0), ratio(1, 2), rat(1), rat(2), rat(3), ratio(7, 3), ratio(-1, 2)] {
            let closed = a_mu_closed_table(&mu, 25).unwrap();
            assert_eq!(closed, a_mu_recur_table(&mu, 25, &rat(2)).unwrap(), "mu = {mu}");
            assert_eq!(closed, a_mu_from_cumulants(&mu, 25).unwrap(), "mu = {mu}");
        }
        assert_eq!(a_mu_recur(&rat(1), 30, &rat(2)).unwrap(), big_rat(a_table_def(30)[29].clone()));
    }

    #[test]
    fn recurrence_seed_scales_homogeneously() {
        let mu = ratio(5, 2);
        let base = a_mu_recur_table(&mu, 12, &rat(2)).unwrap();
        let c = ratio(7, 3);
        let scaled = a_mu_recur_table(&mu, 12, &c).unwrap();
        let mut f = Rational::one();
        for n in 1..=12 {
            f *= &c / rat(2);
            assert_eq!(scaled[n - 1], &base[n - 1] * &f);
        }
    }

    #[test]
    fn positive_across_mu() {
        for mu in [ratio(-9, 10), ratio(-1, 2), rat(0), ratio(1, 3), rat(5)] {
            assert!(a_mu_closed_table(&mu, 30).unwrap().iter().all(|v| v.is_positive()));
        }
    }

    #[test]
    fn increasing_from_three() {
        // Strict growth holds once n >= 3 and n > (mu + 3) / 2.
        for mu in [rat(0), ratio(1, 2), rat(1), rat(2), rat(3), rat(6)] {
            let a = a_mu_closed_table(&mu, 50).unwrap();
            for n in 3..=50usize {
                if rat(n as i64) > (&mu + rat(3)) / rat(2) {
                    assert!(a[n - 1] > a[n - 2], "mu = {mu}, n = {n}");
                }
            }
        }
    }
}
