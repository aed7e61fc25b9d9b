//! Bessel zeros by bisection and the numeric zeta sum set against the exact
//! recurrence.

use narayana_lab::algebra::parse_rational;
use narayana_lab::beta_moments::{bessel_zero_numeric, bessel_zeta, bessel_zeta_numeric};
use num_traits::ToPrimitive;

fn main() {
    for mu in ["0", "1/2", "1", "2"] {
        let mu = parse_rational(mu).unwrap();
        let zeros: Vec<String> = (1..=4)
            .map(|k| format!("{:.10}", bessel_zero_numeric(&mu, k, 1e-12).unwrap()))
            .collect();
        println!("mu = {mu}: first zeros {}", zeros.join(", "));
        let exact = bessel_zeta(&mu, 3).unwrap();
        for n in 1..=3 {
            let x = exact.get(n).to_f64().unwrap();
            let y = bessel_zeta_numeric(&mu, n, 200).unwrap();
            println!("  zeta({}) exact {} = {x:.15e}, 200 zeros + tail {y:.15e}, rel err {:.1e}", 2 * n, exact.get(n), ((y - x) / x).abs());
        }
    }
}
