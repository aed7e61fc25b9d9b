//! 2- and 3-adic valuations of a_n, with the experimental claims tabulated.

use narayana_lab::arith::{nu2_pattern_report, nu3_fact_report, parity_theorems_check, ClaimStatus};

fn main() {
    println!("parity theorems to 256: {}", parity_theorems_check(256).all_hold());
    let nu2 = nu2_pattern_report(64);
    for e in nu2.entries.iter().take(16) {
        println!("n = {:>2} ({:>5b})  nu_2 = {}  {}", e.n, e.n, e.nu, e.pattern_class.as_deref().unwrap_or(""));
    }
    for r in nu2.claims.iter().filter(|r| r.status == ClaimStatus::Disagrees) {
        println!("disagrees at n = {}: predicted {}, actual {}", r.n, r.predicted, r.actual);
    }
    let nu3 = nu3_fact_report(200);
    for note in nu2.notes.iter().chain(&nu3.notes) {
        println!("{note}");
    }
}
