use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{big_rat, binom, factorial, pochhammer, pow2, Rational};
use crate::error::{Error, Result};

use super::check_mu;

/// Moments `E[Y^k]` for `k = 0, 1, ...` of some variable `Y`.
///
/// In this crate `Y` is always the scaled variable `X_* = 2X` when the
/// moments come from the symmetric beta law, but the transforms below work
/// for any sequence with `values[0] = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSeq {
    values: Vec<Rational>,
}

impl MomentSeq {
    pub fn new(values: Vec<Rational>) -> Self {
        assert!(
            values.first().is_some_and(One::is_one),
            "moment sequences start with E[Y^0] = 1"
        );
        MomentSeq { values }
    }

    /// Moments of `X_* = 2X`, `X` symmetric beta with parameter `mu`,
    /// through `E[X_*^max_k]`.
    pub fn symmetric_beta(mu: &Rational, max_k: usize) -> Result<Self> {
        check_mu(mu)?;
        let values = (0..=max_k)
            .map(|k| {
                if k % 2 == 1 {
                    Rational::zero()
                } else {
                    even_moment_unchecked(mu, k / 2)
                }
            })
            .collect();
        Ok(MomentSeq { values })
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, k: usize) -> &Rational {
        &self.values[k]
    }

    /// Highest moment order available.
    pub fn max_order(&self) -> usize {
        self.values.len() - 1
    }

    pub fn is_symmetric(&self) -> bool {
        self.values.iter().skip(1).step_by(2).all(Zero::is_zero)
    }
}

/// Cumulants `kappa(1), kappa(2), ...`; stored from index 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CumulantSeq {
    values: Vec<Rational>,
}

impl CumulantSeq {
    /// `values[0]` is `kappa(1)`.
    pub fn new(values: Vec<Rational>) -> Self {
        CumulantSeq { values }
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// `kappa(n)` for `n >= 1`.
    pub fn get(&self, n: usize) -> &Rational {
        assert!(n >= 1, "cumulants are indexed from 1");
        &self.values[n - 1]
    }

    pub fn max_order(&self) -> usize {
        self.values.len()
    }
}

fn even_moment_unchecked(mu: &Rational, n: usize) -> Rational {
    big_rat(factorial(2 * n) / factorial(n)) / pochhammer(&(mu + Rational::one()), n)
}

/// `E[X_*^{2n}] = (2n)! / (n! (mu+1)_n)` for `X_* = 2X`, `X` symmetric beta.
pub fn scaled_even_moment(mu: &Rational, n: usize) -> Result<Rational> {
    check_mu(mu)?;
    Ok(even_moment_unchecked(mu, n))
}

/// `kappa(n) = m_n - sum_{j=1}^{n-1} binom(n-1, j-1) kappa(j) m_{n-j}`.
pub fn moments_to_cumulants(m: &MomentSeq) -> CumulantSeq {
    let n_max = m.max_order();
    let mut kappa: Vec<Rational> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut acc = m.values[n].clone();
        for j in 1..n {
            if kappa[j - 1].is_zero() || m.values[n - j].is_zero() {
                continue;
            }
            acc -= big_rat(binom(n as i64 - 1, j as i64 - 1)) * &kappa[j - 1] * &m.values[n - j];
        }
        kappa.push(acc);
    }
    CumulantSeq { values: kappa }
}

/// Inverse of [`moments_to_cumulants`].
pub fn cumulants_to_moments(k: &CumulantSeq) -> MomentSeq {
    let n_max = k.max_order();
    let mut m: Vec<Rational> = Vec::with_capacity(n_max + 1);
    m.push(Rational::one());
    for n in 1..=n_max {
        let mut acc = k.values[n - 1].clone();
        for j in 1..n {
            acc += big_rat(binom(n as i64 - 1, j as i64 - 1)) * &k.values[j - 1] * &m[n - j];
        }
        m.push(acc);
    }
    MomentSeq { values: m }
}

/// Calls `f` with the block sizes of every set partition of `{1..n}`,
/// walking restricted growth strings (`rgs[0] = 0`, `rgs[i] <= 1 + max(rgs[..i])`).
fn for_each_set_partition(n: usize, mut f: impl FnMut(&[usize])) {
    if n == 0 {
        f(&[]);
        return;
    }
    let mut rgs = vec![0usize; n];
    let mut sizes = Vec::with_capacity(n);
    loop {
        let blocks = rgs.iter().max().map_or(0, |&b| b + 1);
        sizes.clear();
        sizes.resize(blocks, 0);
        for &b in &rgs {
            sizes[b] += 1;
        }
        f(&sizes);

        let mut i = n;
        loop {
            if i <= 1 {
                return;
            }
            i -= 1;
            let prefix_max = rgs[..i].iter().copied().max().unwrap_or(0);
            if rgs[i] <= prefix_max {
                rgs[i] += 1;
                for r in rgs.iter_mut().skip(i + 1) {
                    *r = 0;
                }
                break;
            }
        }
    }
}

/// Leonov–Shiryaev: `kappa(n) = sum over set partitions V of {1..n} of
/// (-1)^(k-1) (k-1)! prod_i m_{|V_i|}`, by exhaustive enumeration.
pub fn cumulant_partition_oracle(m: &MomentSeq, n: usize) -> Result<Rational> {
    if n > 10 {
        return Err(Error::TooLarge(n));
    }
    assert!(n >= 1 && n <= m.max_order());
    let mut total = Rational::zero();
    for_each_set_partition(n, |sizes| {
        let blocks = sizes.len();
        let mut term: Rational = sizes.iter().map(|&s| m.values[s].clone()).product();
        term *= big_rat(factorial(blocks - 1));
        if blocks % 2 == 0 {
            total -= term;
        } else {
            total += term;
        }
    });
    Ok(total)
}

/// Number of set partitions of an `n`-set, for sanity checks on the oracle.
pub fn bell(n: usize) -> BigInt {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![row.last().unwrap().clone()];
        for v in &row {
            let x = next.last().unwrap() + v;
            next.push(x);
        }
        row = next;
    }
    row[0].clone()
}

/// Converts a cumulant of `X` to the cumulant of `2X`: multiplies by `2^n`.
pub fn scale_cumulant_to_doubled(kappa_x: &Rational, n: usize) -> Rational {
    kappa_x * big_rat(pow2(n))
}

/// Converts a cumulant of `2X` back to the cumulant of `X`.
pub fn scale_cumulant_to_unit(kappa_doubled: &Rational, n: usize) -> Rational {
    kappa_doubled / big_rat(pow2(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};
    use crate::sequences::{catalan, lasalle_a_table};
    use proptest::prelude::*;

    fn catalan_moments(max_k: usize) -> MomentSeq {
        MomentSeq::new(
            (0..=max_k)
                .map(|k| if k % 2 == 1 { rat(0) } else { catalan(k / 2) })
                .collect(),
        )
    }

    #[test]
    fn even_moments() {
        assert_eq!(scaled_even_moment(&rat(1), 3).unwrap(), rat(5));
        assert_eq!(scaled_even_moment(&ratio(1, 2), 2).unwrap(), ratio(16, 5));
        assert_eq!(scaled_even_moment(&ratio(-1, 2), 2).unwrap(), rat(16));
        assert!(matches!(scaled_even_moment(&rat(-1), 1), Err(Error::BadMu(_))));
        assert!(matches!(scaled_even_moment(&rat(-3), 1), Err(Error::BadMu(_))));
        for n in 0..=15 {
            assert_eq!(scaled_even_moment(&rat(1), n).unwrap(), catalan(n));
            assert_eq!(
                scaled_even_moment(&ratio(1, 2), n).unwrap(),
                big_rat(pow2(2 * n)) / rat(2 * n as i64 + 1)
            );
        }
        let m = MomentSeq::symmetric_beta(&rat(1), 12).unwrap();
        assert!(m.is_symmetric());
        assert_eq!(m, catalan_moments(12));
    }

    #[test]
    fn catalan_cumulants_are_lasalle() {
        let k = moments_to_cumulants(&catalan_moments(40));
        let big_a = lasalle_a_table(20);
        for n in 1..=20 {
            let signed = if n % 2 == 1 { k.get(2 * n).clone() } else { -k.get(2 * n).clone() };
            assert_eq!(signed, big_rat(big_a[n - 1].clone()), "n = {n}");
            assert!(k.get(2 * n - 1).is_zero());
        }
    }

    #[test]
    fn partition_oracle() {
        let m = catalan_moments(10);
        let k = moments_to_cumulants(&m);
        for n in 1..=8 {
            assert_eq!(cumulant_partition_oracle(&m, n).unwrap(), *k.get(n));
        }
        let general = MomentSeq::new(vec![rat(1), rat(3), rat(5), rat(-2)]);
        assert_eq!(cumulant_partition_oracle(&general, 1).unwrap(), rat(3));
        assert_eq!(cumulant_partition_oracle(&general, 2).unwrap(), rat(5 - 9));
        assert_eq!(cumulant_partition_oracle(&m, 11), Err(Error::TooLarge(11)));
    }

    #[test]
    fn enumeration_counts_bell_numbers() {
        let bells = [1u64, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in bells.iter().enumerate() {
            let mut count = 0u64;
            for_each_set_partition(n, |sizes| {
                assert_eq!(sizes.iter().sum::<usize>(), n);
                count += 1;
            });
            assert_eq!(count, b);
            assert_eq!(bell(n), BigInt::from(b));
        }
    }

    #[test]
    fn scaling_helpers() {
        let k = ratio(3, 7);
        assert_eq!(scale_cumulant_to_unit(&scale_cumulant_to_doubled(&k, 6), 6), k);
        assert_eq!(scale_cumulant_to_doubled(&rat(1), 4), rat(16));
    }

    fn symmetric_moments() -> impl Strategy<Value = MomentSeq> {
        prop::collection::vec((-20i64..21, 1i64..6), 6).prop_map(|v| {
            let mut values = vec![rat(1)];
            for (p, q) in v {
                values.push(rat(0));
                values.push(ratio(p, q));
            }
            MomentSeq::new(values)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn transforms_are_inverse(m in symmetric_moments()) {
            let k = moments_to_cumulants(&m);
            prop_assert!(k.values().iter().step_by(2).all(Zero::is_zero));
            prop_assert_eq!(cumulants_to_moments(&k), m);
        }

        #[test]
        fn oracle_matches_recursion(m in symmetric_moments(), n in 1usize..=8) {
            prop_assert_eq!(cumulant_partition_oracle(&m, n).unwrap(), moments_to_cumulants(&m).get(n).clone());
        }
    }
}
