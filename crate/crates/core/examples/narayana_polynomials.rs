use narayana_lab::algebra::{rat, ratio};
use narayana_lab::narayana_poly::{
    gegen_narayana_check, gen_narayana, lasalle_recurrence_check, narayana_poly,
    narayana_representations_check, s_closed_form, s_poly, s_poly_check,
};

fn main() {
    for r in 1..=6 {
        println!("N_{r}(z)      = {}", narayana_poly(r).poly);
    }
    println!("N_5^(1/2)(z) = {}", gen_narayana(&ratio(1, 2), 5).unwrap().poly);
    println!("S_4(z)       = {}", s_poly(4).poly);
    println!("closed form  = {}", s_closed_form(4).poly);
    for mu in [rat(0), ratio(1, 2), rat(1), rat(2)] {
        let ok = (1..=12).all(|n| gegen_narayana_check(&mu, n).unwrap());
        let rec = lasalle_recurrence_check(&mu, 12).unwrap().all_hold();
        println!("mu = {mu}: Gegenbauer form {ok}, recurrence {rec}");
    }
    println!("representations agree: {}", narayana_representations_check(20).all_hold());
    let s = s_poly_check(12);
    println!("S_n closed form: {}, symmetry: {}", s.family_holds("s-closed-form"), s.family_holds("s-symmetry"));
}
