use narayana_lab::beta_moments::{
    a_half_closed, a_neg_half_closed, bernoulli, euler_odd, verify_bernoulli_euler_identities,
};

fn main() {
    for n in 1..=6 {
        println!(
            "n = {n}: B_2n = {:>10}  E_(2n-1) = {:>8}  a_n(1/2) = {:>12}  a_n(-1/2) = {:>10}",
            bernoulli(2 * n),
            euler_odd(2 * n - 1).unwrap(),
            a_half_closed(n),
            a_neg_half_closed(n)
        );
    }
    let report = verify_bernoulli_euler_identities(15);
    for family in ["bernoulli-quadratic", "bernoulli-linear", "euler-quadratic", "euler-linear", "euler-linear-negated"] {
        println!("{family:>22}: {}", if report.family_holds(family) { "holds" } else { "fails" });
    }
    for note in &report.notes {
        println!("note: {note}");
    }
}
