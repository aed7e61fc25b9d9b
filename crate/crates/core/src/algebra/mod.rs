//! Exact scalars, dense polynomials and truncated power series.
//!
//! The scalar type is [`num_rational::BigRational`], which is always kept in
//! canonical form (positive denominator, coprime parts). Everything else in
//! the crate is built on top of it.

mod poly;
mod series;

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use poly::Poly;
pub use series::Series;

use crate::error::{Error, Result};

/// Exact arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

/// Integer as an exact rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` as an exact rational. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn big_rat(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// Parses `"p/q"` or a bare integer. Floats are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("expected an exact rational like 3 or -1/2, got {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Factorials shared across threads; grows on demand.
fn factorial_table() -> &'static RwLock<Vec<BigInt>> {
    static TABLE: OnceLock<RwLock<Vec<BigInt>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![BigInt::one()]))
}

pub fn factorial(n: usize) -> BigInt {
    {
        let table = factorial_table().read().expect("factorial cache poisoned");
        if let Some(f) = table.get(n) {
            return f.clone();
        }
    }
    let mut table = factorial_table().write().expect("factorial cache poisoned");
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] * BigInt::from(k);
        table.push(next);
    }
    table[n].clone()
}

/// Integer binomial coefficient; zero outside `0 <= k <= n`.
pub fn binom(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let (n, k) = (n as usize, k as usize);
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Generalized binomial `x (x-1) ... (x-k+1) / k!`.
pub fn binomial(x: &Rational, k: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..k {
        acc *= &term;
        term -= Rational::one();
    }
    acc / big_rat(factorial(k))
}

/// Rising factorial `(x)_n = x (x+1) ... (x+n-1)`.
pub fn pochhammer(x: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

/// `2^e` as a big integer.
pub fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

/// `(-1)^k` as an exact rational.
pub fn sign(k: i64) -> Rational {
    if k.is_even() {
        Rational::one()
    } else {
        -Rational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use num_traits::Signed;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(&rat(5), 2), rat(10));
        assert_eq!(binomial(&ratio(7, 3), 0), rat(1));
        // (7/2)(5/2)/2
        assert_eq!(binomial(&ratio(7, 2), 2), ratio(35, 8));
        assert_eq!(binomial(&rat(3), 5), rat(0));
        assert_eq!(binomial(&rat(-1), 3), rat(-1));
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&rat(3), 2), rat(12));
        assert_eq!(pochhammer(&ratio(-5, 7), 0), rat(1));
        assert_eq!(pochhammer(&rat(2), 3), big_rat(factorial(4)) / big_rat(factorial(1)));
        assert_eq!(pochhammer(&rat(2), 3), rat(24));
        assert_eq!(pochhammer(&ratio(1, 2), 2), ratio(3, 4));
    }

    #[test]
    fn binomial_matches_factorial_oracle() {
        for n in 0..30i64 {
            for k in 0..=n {
                let oracle = factorial(n as usize) / (factorial(k as usize) * factorial((n - k) as usize));
                assert_eq!(binomial(&rat(n), k as usize), big_rat(oracle.clone()));
                assert_eq!(binom(n, k), oracle);
            }
        }
        assert_eq!(binom(4, -1), BigInt::zero());
        assert_eq!(binom(4, 5), BigInt::zero());
    }

    #[test]
    fn parse_rational_accepts_exact_forms_only() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("-1/2").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational("4/6").unwrap(), ratio(2, 3));
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn factorial_cache_is_shared_across_threads() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || factorial(40 + t)))
            .collect();
        for (t, h) in handles.into_iter().enumerate() {
            let f = h.join().unwrap();
            let direct: BigInt = (1..=(40 + t) as u64).map(BigInt::from).product();
            assert_eq!(f, direct);
        }
    }

    proptest! {
        #[test]
        fn canonical_form_is_idempotent(n in -10_000i64..10_000, d in 1i64..10_000) {
            let r = ratio(n, d);
            let again = Rational::new(r.numer().clone(), r.denom().clone());
            prop_assert_eq!(&again, &r);
            prop_assert!(r.denom().is_positive());
            prop_assert!(r.numer().gcd(r.denom()).is_one());
        }

        #[test]
        fn display_round_trips(n in -10_000i64..10_000, d in 1i64..10_000) {
            let r = ratio(n, d);
            prop_assert_eq!(parse_rational(&r.to_string()).unwrap(), r);
        }
    }
}
