//! Tour of the basic constructors: q-integers, Gaussian binomials,
//! cyclotomic polynomials, trinomial coefficients and their q-analogues.
//!
//! ```bash
//! cargo run --example qseries_basics
//! ```

use qcongruence::qseries::{
    cyclotomic, gauss_binom, q_int, q_trinomial, trinomial, TrinomialMethod,
};
use qcongruence::IntPoly;

fn main() {
    println!("q-integers [n]_q = 1 + q + ... + q^(n-1):");
    for n in [1, 2, 3, 5] {
        println!("  [{n}]_q = {}", q_int(n).unwrap());
    }

    println!("\nGaussian binomials [n k]_q, with [n k] = [n n-k]:");
    for (n, k) in [(2, 1), (4, 2), (5, 2), (6, 3)] {
        println!("  [{n} {k}] = {}", gauss_binom(n, k));
    }
    println!(
        "  [4 2] at q=1 is C(4,2) = {}",
        gauss_binom(4, 2).eval_at_one()
    );

    println!("\ncyclotomic polynomials (prod over d|n of Phi_d = q^n - 1):");
    for n in [1, 2, 3, 6, 12, 105] {
        let phi = cyclotomic(n);
        println!("  Phi_{n} has degree {}", phi.degree().unwrap());
        if n <= 12 {
            println!("    = {phi}");
        }
    }
    let mut prod = IntPoly::one();
    for d in [1u64, 2, 3, 4, 6, 12] {
        prod = &prod * &cyclotomic(d);
    }
    println!("  Phi_1*Phi_2*Phi_3*Phi_4*Phi_6*Phi_12 = {prod}");

    println!("\ntrinomial coefficients, three routes to the same integer:");
    for (n, j) in [(2, 0), (4, 0), (4, 2), (7, 3)] {
        let e = trinomial(n, j, TrinomialMethod::Expand);
        let s1 = trinomial(n, j, TrinomialMethod::Sum1);
        let s2 = trinomial(n, j, TrinomialMethod::Sum2);
        assert_eq!(e, s1);
        assert_eq!(e, s2);
        println!("  (({n} {j})) = {e}  (expand = sum1 = sum2)");
    }

    println!("\nq-trinomials ((n j))_q, recovering the integers at q = 1:");
    for (n, j) in [(2, 0), (4, 0), (4, 1)] {
        let p = q_trinomial(n, j);
        println!("  (({n} {j}))_q = {p}");
        assert_eq!(p.eval_at_one(), trinomial(n, j, TrinomialMethod::Expand));
    }
}
