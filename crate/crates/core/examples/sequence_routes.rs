//! Computes a_n by every route and prints them side by side.

use narayana_lab::algebra::{big_rat, rat};
use narayana_lab::beta_moments::a_mu_closed_table;
use narayana_lab::hessenberg::a_via_det_table;
use narayana_lab::sequences::{a_table_def, a_table_quad, a_table_sym, b_table, lasalle_a_table};

fn main() {
    let n = 12;
    let def = a_table_def(n);
    let quad = a_table_quad(n);
    let sym = a_table_sym(n);
    let det = a_via_det_table(n);
    let closed = a_mu_closed_table(&rat(1), n).unwrap();

    println!("{:>3} {:>22} {:>6}", "n", "a_n", "agree");
    for i in 0..n {
        let v = &def[i];
        let exact = big_rat(v.clone());
        let agree = quad[i] == *v && sym[i] == *v && det[i].value == exact && closed[i] == exact;
        println!("{:>3} {:>22} {:>6}", i + 1, v, agree);
    }
    println!("A_n: {:?}", lasalle_a_table(8).iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("b_n: {:?}", b_table(8).iter().map(ToString::to_string).collect::<Vec<_>>());
}
