//! Symmetric beta moments and cumulants, the Bessel zeta values
//! `zeta_mu(2n)`, Bernoulli and Euler numbers, and the generalized sequence
//! `a_n(mu)`.
//!
//! Moments and cumulants are always those of the doubled variable
//! `X_* = 2X`, where `X` has density proportional to `(1 - x^2)^(mu - 1/2)`
//! on `[-1, 1]`. With that scaling
//!
//! ```text
//! E[X_*^{2n}] = (2n)! / (n! (mu+1)_n)
//! kappa(2n)   = (-1)^(n+1) 2^(2n+1) (2n-1)! zeta_mu(2n)
//! a_n(mu)     = 2 (-1)^(n+1) kappa(2n) / E[X_*^{2n}]
//! ```
//!
//! Use [`scale_cumulant_to_unit`] for cumulants of `X` itself.

mod bernoulli;
mod bessel;
mod generating;
mod moments;
mod zeta;

pub use bernoulli::{
    a_half_closed, a_neg_half_closed, bernoulli, bernoulli_table, euler_odd,
    verify_bernoulli_euler_identities,
};
pub use bessel::{bessel_j_sign_function, bessel_zero_numeric, bessel_zeta_numeric, zeta_tail_estimate};
pub use generating::{
    verify_arcsine_quotient, verify_bessel_ratio, verify_half_integer_generating, verify_i1_corollary,
    verify_product_lemma, verify_series_identities,
};
pub use moments::{
    bell, cumulant_partition_oracle, cumulants_to_moments, moments_to_cumulants,
    scale_cumulant_to_doubled, scale_cumulant_to_unit, scaled_even_moment, CumulantSeq, MomentSeq,
};
pub use zeta::{
    a_mu_closed, a_mu_closed_table, a_mu_from_cumulants, a_mu_recur, a_mu_recur_table,
    bessel_zeta, cumulant_from_zeta, cumulant_seq_from_zeta, lasalle_generalized, ZetaTable,
};

use num_traits::One;

use crate::algebra::Rational;
use crate::error::{Error, Result};

pub(crate) fn check_mu(mu: &Rational) -> Result<()> {
    if *mu > -Rational::one() {
        Ok(())
    } else {
        Err(Error::BadMu(mu.clone()))
    }
}
