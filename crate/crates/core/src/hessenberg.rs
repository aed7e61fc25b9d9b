//! Upper Hessenberg matrices `B_n` and `M_n` and their determinants.
//!
//! `det B_n / n! = a_n` and `det M_n = b_n`. Determinants are evaluated only
//! through the last-row expansion
//!
//! ```text
//! det H_n = sum_{r=1}^{n} (-1)^{n-r} h_{n,r} det H_{r-1} prod_{i=r}^{n-1} h_{i,i+1},   det H_0 = 1
//! ```
//!
//! which stays exact and costs O(n^2) once the superdiagonal products are
//! accumulated as the expansion walks `r` downward.

use num_traits::{One, Zero};

use crate::algebra::{big_rat, binom, factorial, rat, Rational};
use crate::error::{Error, Result};
use crate::sequences::{Route, SeqValue};

/// Dense `n x n` upper Hessenberg matrix, 1-indexed through [`HessMatrix::get`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HessMatrix {
    n: usize,
    entries: Vec<Vec<Rational>>,
    superdiag: Vec<Rational>,
}

impl HessMatrix {
    /// Builds from an entry function `(i, j) -> h_{i,j}` on `1..=n`. Entries
    /// above the first superdiagonal are not queried and are zero.
    pub fn from_fn(n: usize, mut entry: impl FnMut(usize, usize) -> Rational) -> Self {
        let entries: Vec<Vec<Rational>> = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| if j > i + 1 { Rational::zero() } else { entry(i, j) })
                    .collect()
            })
            .collect();
        let superdiag = (1..n).map(|i| entries[i - 1][i].clone()).collect();
        HessMatrix {
            n,
            entries,
            superdiag,
        }
    }

    /// Builds from explicit rows, rejecting anything that is not Hessenberg.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix must be square");
            if let Some(j) = (i + 2..n).find(|&j| !row[j].is_zero()) {
                return Err(Error::NotHessenberg { row: i + 1, col: j + 1 });
            }
        }
        Ok(HessMatrix::from_fn(n, |i, j| rows[i - 1][j - 1].clone()))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    /// `h_{i,i+1}` for `i = 1..n-1`.
    pub fn superdiag(&self) -> &[Rational] {
        &self.superdiag
    }

    /// `det H_0, det H_1, ..., det H_n` for the leading principal submatrices.
    pub fn leading_minors(&self) -> Vec<Rational> {
        let mut dets = Vec::with_capacity(self.n + 1);
        dets.push(Rational::one());
        for k in 1..=self.n {
            let mut acc = Rational::zero();
            let mut prod = Rational::one();
            for r in (1..=k).rev() {
                if r < k {
                    prod *= &self.superdiag[r - 1];
                }
                let term = self.get(k, r) * &dets[r - 1] * &prod;
                if (k - r) % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            dets.push(acc);
        }
        dets
    }
}

/// `det H` via the Hessenberg last-row expansion.
pub fn hessenberg_det(h: &HessMatrix) -> Rational {
    h.leading_minors().pop().expect("minors include det H_0")
}

/// `B_n`: first column `2i`, then `h_{i,j} = binom(i, j-2) binom(i+1, j)`.
#[allow(non_snake_case)]
pub fn build_B(n: usize) -> HessMatrix {
    HessMatrix::from_fn(n, |i, j| {
        let (i, j) = (i as i64, j as i64);
        if j == 1 {
            rat(2 * i)
        } else {
            big_rat(binom(i, j - 2) * binom(i + 1, j))
        }
    })
}

/// `M_n`: first column all ones, then `h_{i,j} = binom(i, j-1) binom(i-1, j-2)`.
#[allow(non_snake_case)]
pub fn build_M(n: usize) -> HessMatrix {
    HessMatrix::from_fn(n, |i, j| {
        let (i, j) = (i as i64, j as i64);
        if j == 1 {
            Rational::one()
        } else {
            big_rat(binom(i, j - 1) * binom(i - 1, j - 2))
        }
    })
}

/// `a_1..a_{n_max}` as `det B_n / n!`, all from one pass over `B_{n_max}`.
pub fn a_via_det_table(n_max: usize) -> Vec<SeqValue> {
    build_B(n_max)
        .leading_minors()
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(n, d)| SeqValue::new(n, d / big_rat(factorial(n)), Route::Determinant))
        .collect()
}

/// `b_1..b_{n_max}` as `det M_n`.
pub fn b_via_det_table(n_max: usize) -> Vec<SeqValue> {
    build_M(n_max)
        .leading_minors()
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(n, d)| SeqValue::new(n, d, Route::Determinant))
        .collect()
}

pub fn a_via_det(n: usize) -> SeqValue {
    assert!(n >= 1);
    let d = hessenberg_det(&build_B(n));
    SeqValue::new(n, d / big_rat(factorial(n)), Route::Determinant)
}

pub fn b_via_det(n: usize) -> SeqValue {
    assert!(n >= 1);
    SeqValue::new(n, hessenberg_det(&build_M(n)), Route::Determinant)
}

/// Checks `(-1)^(n-1) x_n = 2 + sum_{j<n} (-1)^j binom(n-1,j-1) binom(n+1,j+1) x_j / (n-j+1)`
/// on a 1-indexed table, which is what unrolling the expansion on `B_n` gives.
pub fn unrolled_recurrence_holds(n: usize, xs: &[Rational]) -> bool {
    assert!(n >= 1 && xs.len() >= n);
    let ni = n as i64;
    let mut rhs = rat(2);
    for j in 1..n {
        let ji = j as i64;
        let term = big_rat(binom(ni - 1, ji - 1) * binom(ni + 1, ji + 1)) * &xs[j - 1]
            / rat(ni - ji + 1);
        if j % 2 == 0 {
            rhs += term;
        } else {
            rhs -= term;
        }
    }
    let lhs = if n % 2 == 1 { xs[n - 1].clone() } else { -xs[n - 1].clone() };
    lhs == rhs
}
