//! The supporting results: the exact closed form of the alternating
//! q-binomial sum (an identity in ℚ(q), stronger than any congruence),
//! the odd-central q-binomial congruence mod Phi_n, and the central
//! q-binomial sum congruence with its Laurent terms.
//!
//! ```bash
//! cargo run --example lemma_chain [max_n]
//! ```

use qcongruence::statements::{check_lemma_b1, check_lemma_b2, check_prop_a1};

fn main() {
    let max_n: i64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_n must be an integer"))
        .unwrap_or(30);

    println!("(1-q^n) Σ_k (-1)^k q^(k(k-1)/2) [n-k k]/(1-q^(n-k)) = R_n(q), exactly:");
    for n in 1..=max_n {
        let rep = check_lemma_b1(n).unwrap();
        assert!(rep.holds, "n={n}");
    }
    println!("  exact for every n in 1..={max_n}");

    println!("\n[2k-1 k] ≡ (-1)^k q^(k(3k-1)/2) [n-k k]  (mod Phi_n), k = 1..n-1:");
    let mut checked = 0;
    for n in 2..=max_n {
        for k in 1..n {
            assert!(check_lemma_b2(n, k).unwrap().holds, "n={n} k={k}");
            checked += 1;
        }
    }
    println!("  holds for all {checked} pairs with n <= {max_n}");

    println!("\nΣ_k q^(-k(k-1))/[2k]_q [2k k] ≡ (1-q)(1-R_n)/(1-q^n)  (mod Phi_n):");
    for n in 1..=max_n {
        let rep = check_prop_a1(n).unwrap();
        assert!(rep.holds, "n={n}");
        if n <= 4 {
            println!("  n={n}: ok ({})", rep.reason);
        }
    }
    println!("  holds for every n in 1..={max_n}, Laurent terms included");
}
