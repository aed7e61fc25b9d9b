use thiserror::Error;

use crate::algebra::Rational;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series division by a series with zero constant term")]
    DivByNonUnit,
    #[error("exp requires a series with zero constant term")]
    ExpNonzeroConstant,
    #[error("log requires a series with constant term 1")]
    LogNonUnitConstant,
    #[error("index {index} outside {lo}..={hi}")]
    OutOfRange { index: i64, lo: i64, hi: i64 },
    #[error("n = 1 is the seed of this recurrence and is not computed by it")]
    UndefinedForN1,
    #[error("mu must be an exact rational greater than -1, got {0}")]
    BadMu(Rational),
    #[error("n = {0} is too large for exhaustive set-partition enumeration (max 10)")]
    TooLarge(usize),
    #[error("Euler number E_{0} requested at even index")]
    EvenIndex(usize),
    #[error("root bracketing failed to converge near x = {near}")]
    NoConvergence { near: f64 },
    #[error("valuation of zero is undefined")]
    ZeroInput,
    #[error("no candidate initial value gives a p-integral sequence")]
    NoneFound,
    #[error("entry ({row}, {col}) above the superdiagonal is nonzero")]
    NotHessenberg { row: usize, col: usize },
    #[error("{0}")]
    Parse(String),
}
