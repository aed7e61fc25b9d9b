//! Generating-function identities checked coefficient by coefficient.

use narayana_lab::beta_moments::verify_series_identities;
use std::collections::BTreeMap;

fn main() {
    let report = verify_series_identities(15);
    let mut families: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    for c in &report.checks {
        let e = families.entry(&c.family).or_default();
        e.0 += 1;
        e.1 += usize::from(c.holds);
    }
    for (family, (total, held)) in families {
        println!("{family:>28}: {held}/{total}");
    }
    for c in report.failures() {
        println!("{} at {}: {}", c.family, c.n, c.detail.as_deref().unwrap_or(""));
    }
}
