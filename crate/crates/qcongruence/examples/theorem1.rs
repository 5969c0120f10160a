//! The central q-trinomial divisibility: ((n 0))_q ≡ R_n(q) mod Phi_n(q)²,
//! where R_n is a signed monomial (or a two-term binomial when 3 | n)
//! selected by n mod 3.
//!
//! ```bash
//! cargo run --example theorem1 [max_n]
//! ```

use qcongruence::qseries::q_trinomial;
use qcongruence::statements::{check_theorem1, r_n};

fn main() {
    let max_n: i64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_n must be an integer"))
        .unwrap_or(24);

    println!("((n 0))_q ≡ R_n(q)  (mod Phi_n(q)^2)\n");
    for n in 1..=max_n {
        let rn = r_n(n).unwrap();
        let rep = check_theorem1(n).unwrap();
        println!(
            "n={n:3}  branch {:5}  m={:2}  R_n = {:24}  {}",
            rn.branch.as_str(),
            rn.m,
            rn.value.to_string(),
            if rep.holds { "ok" } else { "FAIL" }
        );
        assert!(rep.holds);
    }

    // the first two cases are exact squares of cyclotomic polynomials
    let diff2 = &q_trinomial(2, 0) - &r_n(2).unwrap().value;
    let diff3 = &q_trinomial(3, 0) - &r_n(3).unwrap().value;
    println!("\n((2 0))_q - R_2 = {diff2} = Phi_2^2");
    println!("((3 0))_q - R_3 = {diff3} = Phi_3^2");
}
