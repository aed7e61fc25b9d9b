//! Moments of the scaled symmetric beta law, their cumulants, and the
//! zeta values the even cumulants are proportional to.

use narayana_lab::algebra::parse_rational;
use narayana_lab::beta_moments::{
    a_mu_closed_table, bessel_zeta, cumulant_partition_oracle, moments_to_cumulants, MomentSeq,
};

fn main() {
    for mu in ["1", "1/2", "0", "-1/2", "3"] {
        let mu = parse_rational(mu).unwrap();
        let m = MomentSeq::symmetric_beta(&mu, 12).unwrap();
        let k = moments_to_cumulants(&m);
        let z = bessel_zeta(&mu, 6).unwrap();
        println!("mu = {mu}");
        println!("  E[X*^2n]   {}", join((1..=6).map(|n| m.get(2 * n).to_string())));
        println!("  kappa(2n)  {}", join((1..=6).map(|n| k.get(2 * n).to_string())));
        println!("  zeta(2n)   {}", join(z.values().iter().map(ToString::to_string)));
        println!("  a_n(mu)    {}", join(a_mu_closed_table(&mu, 6).unwrap().iter().map(ToString::to_string)));
        let oracle = cumulant_partition_oracle(&m, 6).unwrap();
        println!("  kappa(6) by set partitions: {oracle}");
    }
}

fn join(it: impl Iterator<Item = String>) -> String {
    it.collect::<Vec<_>>().join(", ")
}
