use narayana_lab::algebra::rat;
use narayana_lab::arith::{p_integrality_search, P_INTEGRALITY_TABLE};

fn main() {
    for (mu, a1, p) in P_INTEGRALITY_TABLE {
        let r = p_integrality_search(&rat(mu), 12, &[rat(a1)]).unwrap();
        println!("mu = {mu}, a_1 = {a1:>3}: p = {:?} (table {p}), denominators {:?}", r.p, r.witness_denominators);
    }
    // smallest integer seed for mu = 3
    let candidates: Vec<_> = (1..=100).map(rat).collect();
    let r = p_integrality_search(&rat(3), 12, &candidates).unwrap();
    println!("mu = 3: first seed in 1..=100 is {} with p = {:?}", r.a1, r.p);
}
