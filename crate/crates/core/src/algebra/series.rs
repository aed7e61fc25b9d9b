use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{big_rat, factorial, rat, Rational};
use crate::error::{Error, Result};

/// Power series in `x` known exactly through `x^order`.
///
/// Binary operations on series of different orders truncate to the smaller
/// order, so the result never claims more precision than its inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
    order: usize,
}

impl Series {
    /// Pads with zeros or truncates so that `coeffs.len() == order + 1`.
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        Series { coeffs, order }
    }

    /// Series whose `k`-th coefficient is `f(k)`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rational) -> Self {
        Series {
            coeffs: (0..=order).map(f).collect(),
            order,
        }
    }

    pub fn zero(order: usize) -> Self {
        Series::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Series::new(vec![Rational::one()], order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Series::new(vec![Rational::zero(), Rational::one()], order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Series {
        assert!(order <= self.order, "cannot extend a truncated series");
        Series::new(self.coeffs[..=order].to_vec(), order)
    }

    pub fn scale(&self, c: &Rational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            order: self.order,
        }
    }

    /// Quotient `self / t`; needs an invertible constant term in `t`.
    pub fn div(&self, t: &Series) -> Result<Series> {
        let t0 = t.coeffs[0].clone();
        if t0.is_zero() {
            return Err(Error::DivByNonUnit);
        }
        let order = self.order.min(t.order);
        let mut q: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                acc -= &t.coeffs[k] * &q[n - k];
            }
            q.push(acc / &t0);
        }
        Ok(Series { coeffs: q, order })
    }

    /// `exp(self)`; the constant term must vanish.
    pub fn exp(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpNonzeroConstant);
        }
        // g' = f' g
        let mut g: Vec<Rational> = vec![Rational::one()];
        for n in 1..=self.order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                acc += rat(k as i64) * &self.coeffs[k] * &g[n - k];
            }
            g.push(acc / rat(n as i64));
        }
        Ok(Series {
            coeffs: g,
            order: self.order,
        })
    }

    /// `log(self)`; the constant term must be 1.
    pub fn log(&self) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogNonUnitConstant);
        }
        // f g' = f'
        let mut g: Vec<Rational> = vec![Rational::zero()];
        for n in 1..=self.order {
            let mut acc = rat(n as i64) * &self.coeffs[n];
            for k in 1..n {
                acc -= rat(k as i64) * &g[k] * &self.coeffs[n - k];
            }
            g.push(acc / rat(n as i64));
        }
        Ok(Series {
            coeffs: g,
            order: self.order,
        })
    }

    /// Term-by-term derivative; exact through `x^(order-1)`.
    pub fn derivative(&self) -> Series {
        let order = self.order.saturating_sub(1);
        Series::from_fn(order, |k| {
            self.coeffs
                .get(k + 1)
                .map_or_else(Rational::zero, |c| c * rat(k as i64 + 1))
        })
    }

    /// Antiderivative with zero constant term; exact through `x^(order+1)`.
    pub fn integral(&self) -> Series {
        Series::from_fn(self.order + 1, |k| {
            if k == 0 {
                Rational::zero()
            } else {
                &self.coeffs[k - 1] / rat(k as i64)
            }
        })
    }

    /// Substitutes `x -> x^m`. Exact through `x^(m*order + m - 1)`.
    pub fn stretch(&self, m: usize) -> Series {
        assert!(m >= 1);
        let order = m * self.order + m - 1;
        Series::from_fn(order, |k| {
            if k % m == 0 {
                self.coeffs[k / m].clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Multiplies by `x^m`, keeping the order fixed.
    pub fn shift_up(&self, m: usize) -> Series {
        Series::from_fn(self.order, |k| {
            if k >= m {
                self.coeffs[k - m].clone()
            } else {
                Rational::zero()
            }
        })
    }

    /// Divides by `x^m`; the first `m` coefficients must vanish.
    pub fn shift_down(&self, m: usize) -> Series {
        assert!(
            self.coeffs[..m.min(self.coeffs.len())].iter().all(Zero::is_zero),
            "series not divisible by x^{m}"
        );
        Series::new(self.coeffs[m..].to_vec(), self.order - m)
    }

    /// `exp(x)` through `x^order`.
    pub fn exp_x(order: usize) -> Series {
        Series::from_fn(order, |k| Rational::one() / big_rat(factorial(k)))
    }
}

impl Add for &Series {
    type Output = Series;

    fn add(self, rhs: &Series) -> Series {
        let order = self.order.min(rhs.order);
        Series::from_fn(order, |k| &self.coeffs[k] + &rhs.coeffs[k])
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, rhs: &Series) -> Series {
        let order = self.order.min(rhs.order);
        Series::from_fn(order, |k| &self.coeffs[k] - &rhs.coeffs[k])
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, rhs: &Series) -> Series {
        let order = self.order.min(rhs.order);
        Series::from_fn(order, |n| {
            let mut acc = Rational::zero();
            for k in 0..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &rhs.coeffs[n - k];
                }
            }
            acc
        })
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use proptest::prelude::*;

    #[test]
    fn exp_of_x() {
        let e = Series::x(3).exp().unwrap();
        assert_eq!(e.coeffs(), &[rat(1), rat(1), ratio(1, 2), ratio(1, 6)]);
        assert_eq!(e, Series::exp_x(3));
    }

    #[test]
    fn error_paths() {
        let s = Series::one(4);
        assert_eq!(s.div(&Series::x(4)), Err(Error::DivByNonUnit));
        assert_eq!(s.exp(), Err(Error::ExpNonzeroConstant));
        assert_eq!(Series::x(4).log(), Err(Error::LogNonUnitConstant));
    }

    #[test]
    fn mixed_orders_truncate_down() {
        let a = Series::exp_x(8);
        let b = Series::exp_x(3);
        assert_eq!((&a * &b).order(), 3);
        assert_eq!((&a + &b).order(), 3);
        assert_eq!(a.div(&b).unwrap().order(), 3);
    }

    #[test]
    fn log_of_one_plus_x() {
        let s = Series::new(vec![rat(1), rat(1)], 5).log().unwrap();
        let expect: Vec<_> = (0..=5)
            .map(|k| if k == 0 { rat(0) } else { ratio(if k % 2 == 1 { 1 } else { -1 }, k) })
            .collect();
        assert_eq!(s.coeffs(), expect.as_slice());
    }

    #[test]
    fn calculus_round_trip() {
        let s = Series::exp_x(6);
        assert_eq!(s.integral().derivative(), s);
        assert_eq!(s.derivative(), s.truncate(5));
        assert_eq!(s.stretch(2).coeff(4), &ratio(1, 2));
        assert_eq!(s.shift_up(2).shift_down(2), s.truncate(4));
    }

    fn series_strategy(order: usize, constant: Option<i64>) -> impl Strategy<Value = Series> {
        prop::collection::vec((-9i64..9, 1i64..5), order + 1).prop_map(move |v| {
            let mut c: Vec<Rational> = v.into_iter().map(|(n, d)| ratio(n, d)).collect();
            if let Some(k) = constant {
                c[0] = rat(k);
            }
            Series::new(c, order)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn log_inverts_exp(s in series_strategy(10, Some(0))) {
            prop_assert_eq!(s.exp().unwrap().log().unwrap(), s);
        }

        #[test]
        fn division_inverts_multiplication(s in series_strategy(8, None), t in series_strategy(8, Some(3))) {
            let q = s.div(&t).unwrap();
            prop_assert_eq!(&q * &t, s);
        }
    }
}
