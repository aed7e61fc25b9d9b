//! Narayana polynomials `N_r(z) = sum_k N(r, k) z^(k-1)`, their extension
//! `N_n^mu(z) = E[(1 + z + 2 sqrt(z) X)^(n-1)]` over the symmetric beta law,
//! Gegenbauer polynomials, and the identities linking them.
//!
//! Every identity is checked as an exact polynomial equality. Substitutions
//! of `Z = (1+z)/(1-z)` are carried out by multiplying through by the
//! matching power of `1 - z`, so `z = 1` is never evaluated.

use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{big_rat, binom, factorial, pochhammer, pow2, rat, Poly, Rational, Series};
use crate::beta_moments::{bessel_zeta, scaled_even_moment};
use crate::error::Result;
use crate::report::{Check, Report};
use crate::sequences::catalan;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Narayana,
    GenNarayana(Rational),
    Gegenbauer(Rational),
    SPoly,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Narayana => write!(f, "narayana"),
            Family::GenNarayana(mu) => write!(f, "gen-narayana(mu={mu})"),
            Family::Gegenbauer(mu) => write!(f, "gegenbauer(mu={mu})"),
            Family::SPoly => write!(f, "s"),
        }
    }
}

/// A polynomial together with the family and index it belongs to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedPoly {
    pub poly: Poly,
    pub family: Family,
    pub index: usize,
}

impl NamedPoly {
    fn new(poly: Poly, family: Family, index: usize) -> Self {
        NamedPoly { poly, family, index }
    }
}

fn b(n: i64, k: i64) -> Rational {
    big_rat(binom(n, k))
}

/// `1 + z`
fn one_plus_z() -> Poly {
    Poly::from_ints(&[1, 1])
}

/// `1 - z`
fn one_minus_z() -> Poly {
    Poly::from_ints(&[1, -1])
}

/// `z - 1`
fn z_minus_one() -> Poly {
    Poly::from_ints(&[-1, 1])
}

fn z_pow(k: usize) -> Poly {
    Poly::monomial(Rational::one(), k)
}

fn powers(p: &Poly, max: usize) -> Vec<Poly> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(Poly::one());
    for k in 1..=max {
        out.push(&out[k - 1] * p);
    }
    out
}

/// `N_r(z)` from the Narayana numbers.
pub fn narayana_poly(r: usize) -> NamedPoly {
    assert!(r >= 1, "Narayana polynomials start at r = 1");
    let ri = r as i64;
    let coeffs = (1..=ri)
        .map(|k| b(ri, k - 1) * b(ri, k) / rat(ri))
        .collect();
    NamedPoly::new(Poly::new(coeffs), Family::Narayana, r)
}

/// `N_r(z) = sum_m z^m (z+1)^(r-2m-1) binom(r-1, 2m) C_m`.
pub fn narayana_poly_catalan_form(r: usize) -> NamedPoly {
    assert!(r >= 1, "Narayana polynomials start at r = 1");
    let up = powers(&one_plus_z(), r - 1);
    let mut p = Poly::zero();
    for m in 0..=(r - 1) / 2 {
        let c = b(r as i64 - 1, 2 * m as i64) * catalan(m);
        p = p + (&z_pow(m) * &up[r - 1 - 2 * m]).scale(&c);
    }
    NamedPoly::new(p, Family::Narayana, r)
}

fn gen_narayana_from_moments(n: usize, moments: &[Rational], up: &[Poly]) -> Poly {
    let mut p = Poly::zero();
    for m in 0..=(n - 1) / 2 {
        let c = b(n as i64 - 1, 2 * m as i64) * &moments[m];
        p = p + (&z_pow(m) * &up[n - 1 - 2 * m]).scale(&c);
    }
    p
}

/// `N_n^mu(z) = sum_m binom(n-1, 2m) z^m (z+1)^(n-1-2m) E[X_*^(2m)]`, the
/// expansion of `E[(1 + z + 2 sqrt(z) X)^(n-1)]` after odd moments drop out.
pub fn gen_narayana(mu: &Rational, n: usize) -> Result<NamedPoly> {
    assert!(n >= 1, "generalized Narayana polynomials start at n = 1");
    Ok(gen_narayana_table(mu, n)?.pop().expect("n >= 1"))
}

/// `N_1^mu, ..., N_{n_max}^mu`.
pub fn gen_narayana_table(mu: &Rational, n_max: usize) -> Result<Vec<NamedPoly>> {
    let moments: Vec<Rational> = (0..=n_max / 2)
        .map(|m| scaled_even_moment(mu, m))
        .collect::<Result<_>>()?;
    let up = powers(&one_plus_z(), n_max.saturating_sub(1));
    Ok((1..=n_max)
        .map(|n| {
            NamedPoly::new(
                gen_narayana_from_moments(n, &moments, &up),
                Family::GenNarayana(mu.clone()),
                n,
            )
        })
        .collect())
}

/// `C_n^mu(z) = sum_{k <= n/2} (-1)^k / k! (mu)_(n-k) / (n-2k)! (2z)^(n-2k)`.
pub fn gegenbauer(mu: &Rational, n: usize) -> NamedPoly {
    let mut coeffs = vec![Rational::zero(); n + 1];
    for k in 0..=n / 2 {
        let c = pochhammer(mu, n - k) * big_rat(pow2(n - 2 * k))
            / big_rat(factorial(k) * factorial(n - 2 * k));
        coeffs[n - 2 * k] = if k % 2 == 0 { c } else { -c };
    }
    NamedPoly::new(Poly::new(coeffs), Family::Gegenbauer(mu.clone()), n)
}

/// Compares `C_0^mu(x0), ..., C_order^mu(x0)` with the coefficients of
/// `(1 - 2 x0 t + t^2)^(-mu)`, expanded as `exp(-mu log(...))`.
pub fn gegenbauer_generating_check(mu: &Rational, x0: &Rational, order: usize) -> bool {
    let base = Series::new(vec![Rational::one(), -rat(2) * x0, Rational::one()], order);
    let gf = base
        .log()
        .expect("constant term 1")
        .scale(&-mu.clone())
        .exp()
        .expect("constant term 0");
    (0..=order).all(|n| gegenbauer(mu, n).poly.eval(x0) == *gf.coeff(n))
}

/// `(1-z)^n p((1+z)/(1-z))` for `deg p <= n`, as a polynomial.
fn cleared_substitution(p: &Poly, n: usize) -> Poly {
    let up = powers(&one_plus_z(), n);
    let down = powers(&one_minus_z(), n);
    let mut out = Poly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        assert!(k <= n, "degree exceeds the clearing power");
        out = out + (&up[k] * &down[n - k]).scale(c);
    }
    out
}

/// `(2mu+1)_n / n! N_{n+1}^mu(z) = (1-z)^n C_n^(mu+1/2)((1+z)/(1-z))`.
pub fn gegen_narayana_check(mu: &Rational, n: usize) -> Result<bool> {
    let lhs = gen_narayana(mu, n + 1)?.poly.scale(
        &(pochhammer(&(rat(2) * mu + Rational::one()), n)
            / big_rat(factorial(n))),
    );
    let half = Rational::new(1.into(), 2.into());
    let rhs = cleared_substitution(&gegenbauer(&(mu + half), n).poly, n);
    Ok(lhs == rhs)
}

/// The three finite-sum forms of `N_{n+1}(z)`:
///
/// ```text
/// sum_k 1/(k+1) binom(n,k) binom(n+k+2,k) z^k (1-z)^(n-k)
/// 1/(n+1) sum_k binom(n+1,k) binom(2n+2-k,n-k) z^(n-k) (1-z)^k
/// 1/(n+1) sum_k binom(n+1,k+1) binom(n+1,k) z^k
/// ```
///
/// The first is the terminating expansion of
/// `(1-z)^n 2F1(-n, n+3; 2; z/(z-1))`.
pub fn narayana_finite_sums(n: usize) -> [NamedPoly; 3] {
    let ni = n as i64;
    let down = powers(&one_minus_z(), n);
    let mut first = Poly::zero();
    let mut second = Poly::zero();
    let mut third = Poly::zero();
    for k in 0..=n {
        let ki = k as i64;
        let c1 = b(ni, ki) * b(ni + ki + 2, ki) / rat(ki + 1);
        first = first + (&z_pow(k) * &down[n - k]).scale(&c1);
        let c2 = b(ni + 1, ki) * b(2 * ni + 2 - ki, ni - ki) / rat(ni + 1);
        second = second + (&z_pow(n - k) * &down[k]).scale(&c2);
        let c3 = b(ni + 1, ki + 1) * b(ni + 1, ki) / rat(ni + 1);
        third = third + Poly::monomial(c3, k);
    }
    [first, second, third].map(|p| NamedPoly::new(p, Family::Narayana, n + 1))
}

/// `N_{n+1}(z) = 1/(2^(n-1) (n+2)) sum_k (-1)^k binom(n,k) binom(2n+1-2k, n-2k) (1-z)^(2k) (1+z)^(n-2k)`.
pub fn narayana_even_form(n: usize) -> NamedPoly {
    let ni = n as i64;
    let up = powers(&one_plus_z(), n);
    let down = powers(&one_minus_z(), n);
    let mut p = Poly::zero();
    for k in 0..=n / 2 {
        let ki = k as i64;
        let mut c = b(ni, ki) * b(2 * ni + 1 - 2 * ki, ni - 2 * ki);
        if k % 2 == 1 {
            c = -c;
        }
        p = p + (&down[2 * k] * &up[n - 2 * k]).scale(&c);
    }
    // at n = 0 the prefactor is 1 / (2^(-1) * 2) = 1
    let scale = if n == 0 {
        Rational::one()
    } else {
        Rational::one() / (big_rat(pow2(n - 1)) * rat(ni + 2))
    };
    NamedPoly::new(p.scale(&scale), Family::Narayana, n + 1)
}

/// `S_n(z) = z N_n(z)`.
pub fn s_poly(n: usize) -> NamedPoly {
    let p = &z_pow(1) * &narayana_poly(n).poly;
    NamedPoly::new(p, Family::SPoly, n)
}

fn s_closed_sum(n: usize, k_max: usize) -> Poly {
    let ni = n as i64;
    let up = powers(&one_plus_z(), n + 1);
    let down = powers(&z_minus_one(), n + 1);
    let mut p = Poly::zero();
    for k in 0..=k_max {
        let ki = k as i64;
        let mut c = b(2 * ni - 2 * ki, ni - ki) * b(ni + 1 - ki, ki) / rat(ni + 1 - ki);
        if k % 2 == 1 {
            c = -c;
        }
        p = p + (&down[2 * k] * &up[n + 1 - 2 * k]).scale(&c);
    }
    p.scale(&(Rational::one() / big_rat(pow2(n + 1))))
}

/// `S_n(z) = 2^(-(n+1)) sum_{k=0}^{floor((n+1)/2)} (-1)^k / (n+1-k) binom(2n-2k, n-k) binom(n+1-k, k) (z-1)^(2k) (z+1)^(n+1-2k)`,
/// which is `-(1/2) (z-1)^(n+1) C_{n+1}^(-1/2)((z+1)/(z-1))` expanded by the
/// classical Gegenbauer sum.
pub fn s_closed_form(n: usize) -> NamedPoly {
    assert!(n >= 1);
    NamedPoly::new(s_closed_sum(n, n.div_ceil(2)), Family::SPoly, n)
}

/// The same sum stopped at `k = floor(n/2)`. It drops the `(z-1)^(n+1)` term
/// for odd `n` and then differs from `S_n`.
pub fn s_closed_form_truncated(n: usize) -> NamedPoly {
    assert!(n >= 1);
    NamedPoly::new(s_closed_sum(n, n / 2), Family::SPoly, n)
}

/// Checks `(z+1) N_r^mu - N_{r+1}^mu = sum_{m>=1} (-z)^m binom(r-1, 2m-1) A_m^mu N_{r+1-2m}^mu`
/// for `2 <= r <= r_max`, with `A_m^mu = 2^(2m+1) (2m-1)! zeta_mu(2m)`.
pub fn lasalle_recurrence_check(mu: &Rational, r_max: usize) -> Result<Report> {
    let polys: Vec<Poly> = gen_narayana_table(mu, r_max + 1)?
        .into_iter()
        .map(|p| p.poly)
        .collect();
    let zeta = bessel_zeta(mu, r_max / 2)?;
    let big_a: Vec<Rational> = (1..=r_max / 2)
        .map(|m| big_rat(pow2(2 * m + 1) * factorial(2 * m - 1)) * zeta.get(m))
        .collect();
    let n_of = |r: usize| &polys[r - 1];

    let mut report = Report::new(format!("Lasalle recurrence, mu = {mu}"));
    for r in 2..=r_max {
        let lhs = &(&one_plus_z() * n_of(r)) - n_of(r + 1);
        let mut rhs = Poly::zero();
        for m in 1..=r / 2 {
            let mut c = b(r as i64 - 1, 2 * m as i64 - 1) * &big_a[m - 1];
            if m % 2 == 1 {
                c = -c;
            }
            rhs = rhs + (&z_pow(m) * n_of(r + 1 - 2 * m)).scale(&c);
        }
        report.push(Check::new("lasalle-recurrence", r as i64, lhs == rhs));
    }
    Ok(report)
}

/// The defining sum of `N_{n+1}` against its Catalan form, the three finite
/// sums and the even form, for `0 <= n <= n_max`.
pub fn narayana_representations_check(n_max: usize) -> Report {
    let mut report = Report::new("Narayana representations");
    for n in 0..=n_max {
        let reference = narayana_poly(n + 1).poly;
        let ni = n as i64;
        report.push(Check::new(
            "catalan-form",
            ni,
            narayana_poly_catalan_form(n + 1).poly == reference,
        ));
        let [first, second, third] = narayana_finite_sums(n);
        report.push(Check::new("finite-sum-1", ni, first.poly == reference));
        report.push(Check::new("finite-sum-2", ni, second.poly == reference));
        report.push(Check::new("finite-sum-3", ni, third.poly == reference));
        report.push(Check::new("even-form", ni, narayana_even_form(n).poly == reference));
        let pal = reference.is_palindromic()
            && reference.eval(&Rational::one()) == catalan(n + 1)
            && reference.eval(&Rational::zero()).is_one();
        report.push(Check::new("palindromic", ni, pal));
    }
    report
}

/// Closed form and `S_n(z) = z^(n+1) S_n(1/z)` for `1 <= n <= n_max`; the
/// `floor(n/2)` truncation of the closed form is recorded under
/// `s-closed-form-truncated`.
pub fn s_poly_check(n_max: usize) -> Report {
    let mut report = Report::new("S_n polynomials");
    let mut truncated_bad = Vec::new();
    for n in 1..=n_max {
        let s = s_poly(n).poly;
        let ni = n as i64;
        report.push(Check::new("s-closed-form", ni, s_closed_form(n).poly == s));
        report.push(Check::new("s-symmetry", ni, s.reverse(n + 1) == s));
        let truncated = s_closed_form_truncated(n).poly == s;
        if !truncated {
            truncated_bad.push(n);
        }
        report.push(Check::new("s-closed-form-truncated", ni, truncated));
    }
    if !truncated_bad.is_empty() {
        report.note(format!(
            "S_n closed form: the sum needs k up to floor((n+1)/2); stopping at floor(n/2) fails for n = {truncated_bad:?}"
        ));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use crate::sequences::narayana_number;
    use proptest::prelude::*;

    #[test]
    fn small_narayana() {
        assert_eq!(narayana_poly(1).poly, Poly::one());
        assert_eq!(narayana_poly(3).poly, Poly::from_ints(&[1, 3, 1]));
        assert_eq!(narayana_poly(4).poly, Poly::from_ints(&[1, 6, 6, 1]));
        assert_eq!(narayana_poly_catalan_form(1).poly, Poly::one());
        assert_eq!(narayana_poly_catalan_form(3).poly, Poly::from_ints(&[1, 3, 1]));
        for r in 1..=12 {
            for k in 1..=r {
                assert_eq!(narayana_poly(r).poly.coeff(k - 1), narayana_number(r, k).unwrap());
            }
        }
    }

    #[test]
    fn narayana_invariants() {
        for r in 1..=40 {
            let p = narayana_poly(r).poly;
            assert_eq!(p.degree(), Some(r - 1));
            assert!(p.is_palindromic());
            assert!(p.coeffs().iter().all(|c| c.is_integer() && *c > Rational::zero()));
            assert_eq!(p.eval(&rat(1)), catalan(r));
            assert_eq!(p.eval(&rat(0)), rat(1));
        }
    }

    #[test]
    fn generalized() {
        for n in 1..=25 {
            assert_eq!(gen_narayana(&rat(1), n).unwrap().poly, narayana_poly(n).poly);
        }
        for mu in [rat(0), ratio(1, 2), rat(2), ratio(-1, 2), ratio(7, 3)] {
            assert_eq!(gen_narayana(&mu, 1).unwrap().poly, Poly::one());
            for p in gen_narayana_table(&mu, 20).unwrap() {
                assert_eq!(p.poly.degree(), Some(p.index - 1));
                assert!(p.poly.leading_coeff().is_one());
                assert!(p.poly.is_palindromic());
            }
        }
        assert_eq!(gen_narayana(&rat(0), 3).unwrap().poly, Poly::from_ints(&[1, 4, 1]));
        assert!(gen_narayana(&rat(-1), 3).is_err());
    }

    #[test]
    fn gegenbauer_values() {
        let half = ratio(1, 2);
        let three_halves = ratio(3, 2);
        assert_eq!(
            gegenbauer(&three_halves, 2).poly,
            Poly::new(vec![ratio(-3, 2), rat(0), ratio(15, 2)])
        );
        assert_eq!(gegenbauer(&rat(5), 0).poly, Poly::one());
        // Legendre P_2 = (3z^2 - 1)/2
        assert_eq!(gegenbauer(&half, 2).poly, Poly::new(vec![ratio(-1, 2), rat(0), ratio(3, 2)]));
        for mu in [half.clone(), three_halves] {
            for x0 in [rat(0), half.clone()] {
                assert!(gegenbauer_generating_check(&mu, &x0, 10));
            }
        }
        assert!(gegenbauer_generating_check(&ratio(-1, 2), &rat(-1), 8));
    }

    #[test]
    fn gegenbauer_narayana() {
        assert!(gegen_narayana_check(&rat(1), 2).unwrap());
        for mu in [rat(0), ratio(1, 2), rat(1), rat(2), ratio(-1, 2)] {
            for n in 0..=20 {
                assert!(gegen_narayana_check(&mu, n).unwrap(), "mu = {mu}, n = {n}");
            }
        }
        // negative control: a wrong parameter shift breaks it
        let lhs = gen_narayana(&rat(1), 4).unwrap().poly;
        let rhs = cleared_substitution(&gegenbauer(&rat(1), 3).poly, 3);
        assert_ne!(lhs.scale(&(pochhammer(&rat(3), 3) / rat(6))), rhs);
    }

    #[test]
    fn finite_sums_and_even_form() {
        for p in narayana_finite_sums(0) {
            assert_eq!(p.poly, Poly::one());
        }
        assert_eq!(narayana_finite_sums(2)[2].poly, Poly::from_ints(&[1, 3, 1]));
        assert_eq!(narayana_even_form(0).poly, Poly::one());
        assert_eq!(narayana_even_form(1).poly, Poly::from_ints(&[1, 1]));
        let r = narayana_representations_check(30);
        assert!(r.all_hold(), "{:?}", r.failures());
    }

    #[test]
    fn s_polynomials() {
        assert_eq!(s_closed_form(2).poly, Poly::from_ints(&[0, 1, 1]));
        assert_eq!(s_closed_form(1).poly, Poly::from_ints(&[0, 1]));
        assert_eq!(s_closed_form_truncated(1).poly, Poly::new(vec![ratio(1, 4), ratio(1, 2), ratio(1, 4)]));
        let r = s_poly_check(30);
        assert!(r.family_holds("s-closed-form"));
        assert!(r.family_holds("s-symmetry"));
        for c in r.checks.iter().filter(|c| c.family == "s-closed-form-truncated") {
            assert_eq!(c.holds, c.n % 2 == 0, "n = {}", c.n);
        }
        assert_eq!(r.notes.len(), 1);
    }

    #[test]
    fn lasalle_recurrence() {
        // r = 3: (z+1) N_3 - N_4 = -2 A_1 z N_2
        let lhs = &(&one_plus_z() * &narayana_poly(3).poly) - &narayana_poly(4).poly;
        assert_eq!(lhs, (&z_pow(1) * &narayana_poly(2).poly).scale(&rat(-2)));
        let r = lasalle_recurrence_check(&rat(1), 25).unwrap();
        assert_eq!(r.count("lasalle-recurrence"), 24);
        assert!(r.all_hold());
        for mu in [rat(0), ratio(1, 2), rat(2), ratio(-1, 2)] {
            assert!(lasalle_recurrence_check(&mu, 20).unwrap().all_hold(), "mu = {mu}");
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn gegen_narayana_random_mu(p in -9i64..40, q in 1i64..10, n in 0usize..10) {
            let mu = ratio(p, q);
            prop_assume!(mu > rat(-1));
            prop_assert!(gegen_narayana_check(&mu, n).unwrap());
            prop_assert!(lasalle_recurrence_check(&mu, 8).unwrap().all_hold());
        }
    }
}
