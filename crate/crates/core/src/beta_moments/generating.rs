//! Generating-function identities checked coefficient by coefficient on
//! truncated series. Bessel quotients are written in `y = x^2`, where
//! `I_nu(2x) / x^nu = sum_k y^k / (k! Gamma(k + nu + 1))` has rational
//! coefficients after dividing out `Gamma(nu + 1)`.

use num_traits::{One, Zero};

use crate::algebra::{big_rat, factorial, pochhammer, rat, Rational, Series};
use crate::hessenberg::a_via_det_table;
use crate::report::{Check, Report};
use crate::sequences::{a_table_def, b_table};

use super::bernoulli::{a_half_closed, a_neg_half_closed};
use super::zeta::a_mu_closed_table;
use crate::error::Result;

fn fact(n: usize) -> Rational {
    big_rat(factorial(n))
}

fn alt(j: usize) -> Rational {
    if j % 2 == 1 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// One check per coefficient.
fn compare(report: &mut Report, family: &str, lhs: &Series, rhs: &Series) {
    let order = lhs.order().min(rhs.order());
    for k in 0..=order {
        let holds = lhs.coeff(k) == rhs.coeff(k);
        let mut c = Check::new(family, k as i64, holds);
        if !holds {
            c = c.with_detail(format!("lhs = {}, rhs = {}", lhs.coeff(k), rhs.coeff(k)));
        }
        report.push(c);
    }
}

/// A single check recording whether a form that is expected to be wrong
/// matches; `n` is the first coefficient where it differs.
fn compare_as_printed(report: &mut Report, family: &str, lhs: &Series, rhs: &Series) {
    let order = lhs.order().min(rhs.order());
    match (0..=order).find(|&k| lhs.coeff(k) != rhs.coeff(k)) {
        None => report.push(Check::new(family, 0, true)),
        Some(k) => report.push(Check::new(family, k as i64, false).with_detail(format!(
            "coefficient {k}: lhs = {}, rhs = {}",
            lhs.coeff(k),
            rhs.coeff(k)
        ))),
    }
}

/// `sum_j x^j / (j! (j+1)!) * sum_j (-1)^(j-1) a_j x^(j-1) / ((j+1)! (j-1)!) = 2 sum_j x^j / (j! (j+2)!)`.
pub fn verify_product_lemma(order: usize) -> Report {
    let a = a_table_def(order + 1);
    let f = Series::from_fn(order, |j| Rational::one() / (fact(j) * fact(j + 1)));
    let g = Series::from_fn(order, |k| {
        let j = k + 1;
        alt(j) * big_rat(a[j - 1].clone()) / (fact(j + 1) * fact(j - 1))
    });
    let rhs = Series::from_fn(order, |j| rat(2) / (fact(j) * fact(j + 2)));
    let mut report = Report::new("product lemma");
    compare(&mut report, "product-lemma", &(&f * &g), &rhs);
    report
}

/// `sum_k y^k / (k! (mu+1)_(k+shift))`, i.e. `I_(mu+shift)(2x)` over its
/// leading power of `x`, scaled so the constant term is `1 / (mu+1)_shift`.
fn bessel_i_series(mu: &Rational, shift: usize, order: usize) -> Series {
    let base = mu + Rational::one();
    Series::from_fn(order, |k| {
        Rational::one() / (fact(k) * pochhammer(&base, k + shift))
    })
}

/// `I_(mu+1)(2x) / (x I_mu(2x)) = sum_n (-1)^(n-1) a_n(mu) y^(n-1) / (2 (n-1)! (mu+1)_n)`,
/// the Bessel quotient whose coefficients are the generalized sequence.
pub fn verify_bessel_ratio(mu: &Rational, order: usize) -> Result<Report> {
    let a = a_mu_closed_table(mu, order + 1)?;
    let quotient = bessel_i_series(mu, 1, order)
        .div(&bessel_i_series(mu, 0, order))
        .expect("unit constant term");
    let base = mu + Rational::one();
    let rhs = Series::from_fn(order, |k| {
        let n = k + 1;
        alt(n) * &a[n - 1] / (rat(2) * fact(n - 1) * pochhammer(&base, n))
    });
    let mut report = Report::new(format!("bessel quotient, mu = {mu}"));
    compare(&mut report, "bessel-quotient", &quotient, &rhs);
    Ok(report)
}

/// `I_1(2x) / (x I_0(2x)) = sum_j (-1)^(j-1) b_j x^(2j-2) / (j! (j-1)!)`.
pub fn verify_arcsine_quotient(order: usize) -> Report {
    let b = b_table(order + 1);
    let num = Series::from_fn(order, |k| Rational::one() / (fact(k) * fact(k + 1)));
    let den = Series::from_fn(order, |k| Rational::one() / (fact(k) * fact(k)));
    let quotient = num.div(&den).expect("unit constant term");
    let rhs = Series::from_fn(order, |k| {
        let j = k + 1;
        alt(j) * big_rat(b[j - 1].clone()) / (fact(j) * fact(j - 1))
    });
    let mut report = Report::new("arcsine quotient");
    compare(&mut report, "arcsine-quotient", &quotient, &rhs);
    report
}

/// `I_1(u) = (u/2) exp(sum_j (-1)^(j-1) det B_j (u/2)^(2j) / (2 (j+1)! j!^2))`, checked
/// through `log` and through `exp` in `y = (u/2)^2`.
///
/// The variant with prefactor `u` and without the `1/2` inside the sum is
/// evaluated too and recorded under `i1-determinant-as-printed`.
pub fn verify_i1_corollary(order: usize) -> Report {
    let dets: Vec<Rational> = a_via_det_table(order)
        .into_iter()
        .map(|s| s.value * fact(s.index))
        .collect();
    // I_1(u) / (u/2)
    let i1 = Series::from_fn(order, |k| Rational::one() / (fact(k) * fact(k + 1)));
    let exponent = |half: bool| {
        Series::from_fn(order, |j| {
            if j == 0 {
                return Rational::zero();
            }
            let v = alt(j) * &dets[j - 1] / (fact(j + 1) * fact(j) * fact(j));
            if half {
                v / rat(2)
            } else {
                v
            }
        })
    };
    let e = exponent(true);
    let mut report = Report::new("I_1 determinant expansion");
    compare(&mut report, "i1-determinant-log", &i1.log().expect("unit constant"), &e);
    compare(&mut report, "i1-determinant-exp", &i1, &e.exp().expect("zero constant"));

    // I_1(u) / u = (1/2) i1
    let printed = exponent(false).exp().expect("zero constant");
    let half_i1 = i1.scale(&Rational::new(1.into(), 2.into()));
    compare_as_printed(&mut report, "i1-determinant-as-printed", &half_i1, &printed);
    report
}

/// The `mu = 1/2` and `mu = -1/2` quotients in elementary form, in `y = x^2`:
///
/// ```text
/// (x coth x - 1) / x^2 = sum_j (-1)^(j-1) a_j(1/2)  x^(2j-2) / (2 (2j+1) (2j-1)!)
/// tanh x / x           = sum_j (-1)^(j-1) a_j(-1/2) x^(2j-2) / (2 (2j-1)!)
/// ```
///
/// with `a_j(+-1/2)` from the Bernoulli and Euler closed forms. The forms with
/// `x tanh x` and with coefficient `2 a_j` are recorded under the
/// `-as-printed` families.
pub fn verify_half_integer_generating(order: usize) -> Report {
    let mut report = Report::new("half-integer generating functions");
    // cosh x and sinh x / x, in y
    let even = Series::from_fn(order + 1, |k| Rational::one() / fact(2 * k));
    let odd = Series::from_fn(order + 1, |k| Rational::one() / fact(2 * k + 1));

    // x coth x = even / odd; subtract 1 and divide by y
    let x_coth = even.div(&odd).expect("unit constant term");
    let coth_form = (&x_coth - &Series::one(order + 1)).shift_down(1).truncate(order);
    // x tanh x = y * odd / even
    let x_tanh = odd.div(&even).expect("unit constant term").shift_up(1);
    // x tanh x - 1 has constant term -1, so that form is compared after
    // multiplying both sides by y
    let tanh_form = (&x_tanh - &Series::one(order + 1)).truncate(order);
    let tanh_over_x = odd.div(&even).expect("unit constant term").truncate(order);

    let half = |scale_two: bool| {
        Series::from_fn(order, |k| {
            let j = k + 1;
            let c = alt(j) * a_half_closed(j) / (rat(2 * j as i64 + 1) * fact(2 * j - 1));
            if scale_two {
                c * rat(2)
            } else {
                c / rat(2)
            }
        })
    };
    let neg_half = |scale_two: bool| {
        Series::from_fn(order, |k| {
            let j = k + 1;
            let c = alt(j) * a_neg_half_closed(j) / fact(2 * j - 1);
            if scale_two {
                c * rat(2)
            } else {
                c / rat(2)
            }
        })
    };

    compare(&mut report, "coth-half", &coth_form, &half(false));
    compare(&mut report, "tanh-neg-half", &tanh_over_x, &neg_half(false));
    compare_as_printed(&mut report, "tanh-half-as-printed", &tanh_form, &half(true).shift_up(1));
    compare_as_printed(&mut report, "tanh-neg-half-as-printed", &tanh_over_x, &neg_half(true));
    report
}

/// Every identity above at one truncation order, plus the Bessel quotient
/// for `mu` in `{0, 1/2, 1, 2}`.
pub fn verify_series_identities(order: usize) -> Report {
    let mut report = Report::new(format!("series identities through order {order}"));
    report.extend(verify_product_lemma(order));
    report.extend(verify_arcsine_quotient(order));
    report.extend(verify_i1_corollary(order));
    report.extend(verify_half_integer_generating(order));
    for mu in [rat(0), Rational::new(1.into(), 2.into()), rat(1), rat(2)] {
        report.extend(verify_bessel_ratio(&mu, order).expect("mu > -1"));
    }
    report
}
