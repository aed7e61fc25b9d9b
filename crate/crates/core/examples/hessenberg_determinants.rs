use narayana_lab::algebra::{big_rat, factorial};
use narayana_lab::hessenberg::{build_B, hessenberg_det};
use narayana_lab::sequences::a_table_def;

fn main() {
    let b4 = build_B(4);
    for row in b4.rows() {
        println!("{}", row.iter().map(|x| format!("{x:>6}")).collect::<String>());
    }
    let a = a_table_def(10);
    for n in 1..=10 {
        let det = hessenberg_det(&build_B(n));
        let ratio = &det / big_rat(factorial(n));
        println!("n = {n:>2}  det B_n = {det:>20}  det / n! = {ratio:>8}  a_n = {}", a[n - 1]);
    }
}
