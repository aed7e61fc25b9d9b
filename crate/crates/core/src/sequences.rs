//! Lasalle's `A_n`, Zeilberger's `a_n = 2 A_n / C_n`, the arcsine analogue
//! `b_n`, and the Catalan/Narayana numbers they are built from.
//!
//! Every sequence is produced by dynamic programming over its own recurrence,
//! with the full history kept, so that the routes can be compared against one
//! another exactly. Indexing is 1-based: `values[0]` holds the `n = 1` term.
//!
//! The quadratic recurrence for `a_n` is seeded with `a_1 = 2`. A seed of 1
//! would give `a_2 = 1/4` and contradict the known values `2, 1, 2, 8, 52, ...`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{big_rat, binom, Rational};
use crate::error::{Error, Result};

/// Which computation produced a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    DefRecurrence,
    QuadraticRecurrence,
    SymmetricRecurrence,
    Determinant,
    ZetaClosedForm,
    BernoulliClosedForm,
    EulerClosedForm,
}

impl Route {
    pub const ALL: [Route; 7] = [
        Route::DefRecurrence,
        Route::QuadraticRecurrence,
        Route::SymmetricRecurrence,
        Route::Determinant,
        Route::ZetaClosedForm,
        Route::BernoulliClosedForm,
        Route::EulerClosedForm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::DefRecurrence => "def",
            Route::QuadraticRecurrence => "quad",
            Route::SymmetricRecurrence => "sym",
            Route::Determinant => "det",
            Route::ZetaClosedForm => "closed",
            Route::BernoulliClosedForm => "bernoulli",
            Route::EulerClosedForm => "euler",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown route {s:?}")))
    }
}

/// A sequence member tagged with the route that computed it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeqValue {
    pub index: usize,
    pub value: Rational,
    pub route: Route,
}

impl SeqValue {
    pub fn new(index: usize, value: Rational, route: Route) -> Self {
        SeqValue { index, value, route }
    }

    fn from_table(values: Vec<BigInt>, route: Route) -> Vec<SeqValue> {
        values
            .into_iter()
            .enumerate()
            .map(|(i, v)| SeqValue::new(i + 1, big_rat(v), route))
            .collect()
    }
}

fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    debug_assert!(r.is_zero(), "inexact division in an integer recurrence");
    q
}

fn odd(k: usize) -> bool {
    k % 2 == 1
}

fn last_value(mut values: Vec<SeqValue>) -> SeqValue {
    values.pop().expect("non-empty table")
}

pub fn catalan_int(n: usize) -> BigInt {
    binom(2 * n as i64, n as i64) / BigInt::from(n + 1)
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> Rational {
    big_rat(catalan_int(n))
}

/// `N(r, k) = binom(r, k-1) binom(r, k) / r` for `1 <= k <= r`.
pub fn narayana_number(r: usize, k: usize) -> Result<Rational> {
    if r == 0 || k == 0 || k > r {
        return Err(Error::OutOfRange {
            index: k as i64,
            lo: 1,
            hi: r as i64,
        });
    }
    let (r, k) = (r as i64, k as i64);
    Ok(Rational::new(binom(r, k - 1) * binom(r, k), BigInt::from(r)))
}

/// `sigma_{n,r} = (2/n) binom(n, r-1) binom(n+1, r+1)`, counting Dyck paths
/// by long interior inclines.
pub fn sigma(n: usize, r: usize) -> Result<Rational> {
    if n == 0 || r == 0 || r > n {
        return Err(Error::OutOfRange {
            index: r as i64,
            lo: 1,
            hi: n as i64,
        });
    }
    let (ni, ri) = (n as i64, r as i64);
    Ok(Rational::new(
        BigInt::from(2) * binom(ni, ri - 1) * binom(ni + 1, ri + 1),
        BigInt::from(n),
    ))
}

fn sigma_int(n: usize, r: usize) -> BigInt {
    let (n, r) = (n as i64, r as i64);
    binom(n - 1, r - 1) * binom(n + 1, r) - binom(n - 1, r - 2) * binom(n + 1, r + 1)
}

/// `A_1..A_{n_max}` from the alternating Catalan convolution.
pub fn lasalle_a_table(n_max: usize) -> Vec<BigInt> {
    let cat: Vec<BigInt> = (0..=n_max).map(catalan_int).collect();
    let mut a: Vec<BigInt> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut acc = cat[n].clone();
        for j in 1..n {
            let term = binom(2 * n as i64 - 1, 2 * j as i64 - 1) * &a[j - 1] * &cat[n - j];
            if odd(j) {
                acc -= term;
            } else {
                acc += term;
            }
        }
        // acc = (-1)^(n-1) A_n
        a.push(if odd(n) { acc } else { -acc });
    }
    a
}

/// `a_1..a_{n_max}` from the signed sigma recurrence.
pub fn a_table_def(n_max: usize) -> Vec<BigInt> {
    let two = BigInt::from(2);
    let mut a: Vec<BigInt> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut sum = BigInt::zero();
        for j in 1..n {
            let term = sigma_int(n, j) * &a[j - 1];
            if odd(j) {
                sum -= term;
            } else {
                sum += term;
            }
        }
        let inner = &two + exact_div(sum, &two);
        a.push(if odd(n) { inner } else { -inner });
    }
    a
}

/// `a_1..a_{n_max}` from `2n a_n = sum binom(n,k-1) binom(n,k+1) a_k a_{n-k}`.
pub fn a_table_quad(n_max: usize) -> Vec<BigInt> {
    let mut a: Vec<BigInt> = Vec::with_capacity(n_max);
    if n_max == 0 {
        return a;
    }
    a.push(BigInt::from(2));
    for n in 2..=n_max {
        let ni = n as i64;
        let mut sum = BigInt::zero();
        for k in 1..n {
            let ki = k as i64;
            sum += binom(ni, ki - 1) * binom(ni, ki + 1) * &a[k - 1] * &a[n - k - 1];
        }
        a.push(exact_div(sum, &BigInt::from(2 * n)));
    }
    a
}

/// `a_1..a_{n_max}` from the symmetric form
/// `4 a_n = sum binom(n-1,k-1) binom(n-1,k) a_k a_{n-k} - sum binom(n-1,k-2) binom(n-1,k+1) a_k a_{n-k}`.
pub fn a_table_sym(n_max: usize) -> Vec<BigInt> {
    let mut a: Vec<BigInt> = Vec::with_capacity(n_max);
    if n_max == 0 {
        return a;
    }
    a.push(BigInt::from(2));
    for n in 2..=n_max {
        let m = n as i64 - 1;
        let mut sum = BigInt::zero();
        for k in 1..n {
            let ki = k as i64;
            let w = binom(m, ki - 1) * binom(m, ki) - binom(m, ki - 2) * binom(m, ki + 1);
            sum += w * &a[k - 1] * &a[n - k - 1];
        }
        a.push(exact_div(sum, &BigInt::from(4)));
    }
    a
}

/// `b_1..b_{n_max}` from `b_n = sum binom(n-1,k) binom(n-1,k-1) b_k b_{n-k}`.
pub fn b_table(n_max: usize) -> Vec<BigInt> {
    let mut b: Vec<BigInt> = Vec::with_capacity(n_max);
    if n_max == 0 {
        return b;
    }
    b.push(BigInt::one());
    for n in 2..=n_max {
        let m = n as i64 - 1;
        let mut sum = BigInt::zero();
        for k in 1..n {
            let ki = k as i64;
            sum += binom(m, ki) * binom(m, ki - 1) * &b[k - 1] * &b[n - k - 1];
        }
        b.push(sum);
    }
    b
}

#[allow(non_snake_case)]
pub fn seq_A_table(n_max: usize) -> Vec<SeqValue> {
    SeqValue::from_table(lasalle_a_table(n_max), Route::DefRecurrence)
}

pub fn seq_a_def_table(n_max: usize) -> Vec<SeqValue> {
    SeqValue::from_table(a_table_def(n_max), Route::DefRecurrence)
}

pub fn seq_a_quad_table(n_max: usize) -> Vec<SeqValue> {
    SeqValue::from_table(a_table_quad(n_max), Route::QuadraticRecurrence)
}

pub fn seq_a_sym_table(n_max: usize) -> Vec<SeqValue> {
    SeqValue::from_table(a_table_sym(n_max), Route::SymmetricRecurrence)
}

pub fn seq_b_table(n_max: usize) -> Vec<SeqValue> {
    SeqValue::from_table(b_table(n_max), Route::QuadraticRecurrence)
}

#[allow(non_snake_case)]
pub fn seq_A(n: usize) -> SeqValue {
    assert!(n >= 1, "sequences are 1-indexed");
    last_value(seq_A_table(n))
}

pub fn seq_a_def(n: usize) -> SeqValue {
    assert!(n >= 1, "sequences are 1-indexed");
    last_value(seq_a_def_table(n))
}

pub fn seq_a_quad(n: usize) -> SeqValue {
    assert!(n >= 1, "sequences are 1-indexed");
    last_value(seq_a_quad_table(n))
}

/// The symmetric recurrence needs two earlier terms; `n = 1` is its seed.
pub fn seq_a_sym(n: usize) -> Result<SeqValue> {
    if n < 2 {
        return Err(Error::UndefinedForN1);
    }
    Ok(last_value(seq_a_sym_table(n)))
}

pub fn seq_b(n: usize) -> SeqValue {
    assert!(n >= 1, "sequences are 1-indexed");
    last_value(seq_b_table(n))
}

/// Checks `b_n = (1/2) sum_{j=1}^{n-1} binom(n-1,j) binom(n,j-1) b_j a_{n-j}`
/// on caller-supplied 1-indexed tables (`b[0] = b_1`).
pub fn mixed_b_a_holds(n: usize, b: &[BigInt], a: &[BigInt]) -> bool {
    assert!(n >= 2 && b.len() >= n && a.len() >= n - 1);
    let ni = n as i64;
    let sum: BigInt = (1..n)
        .map(|j| {
            let ji = j as i64;
            binom(ni - 1, ji) * binom(ni, ji - 1) * &b[j - 1] * &a[n - j - 1]
        })
        .sum();
    sum == BigInt::from(2) * &b[n - 1]
}

/// The mixed `b`/`a` relation with both sequences from their recurrences.
pub fn mixed_b_a_check(n: usize) -> bool {
    mixed_b_a_holds(n, &b_table(n), &a_table_def(n))
}
