//! The three intermediate congruences that carry the central-column
//! theorem: the column congruence for [2n k] mod Phi_n², the reflection
//! congruence for [2n-k n+k] mod Phi_n, and [2n n] ≡ 2 - n(1-q^n) mod
//! Phi_n².
//!
//! ```bash
//! cargo run --example proof_steps [max_n]
//! ```

use qcongruence::statements::{check_step_c1, check_step_c2, check_step_c5};

fn main() {
    let max_n: i64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("max_n must be an integer"))
        .unwrap_or(24);

    let mut pairs = 0;
    for n in 2..=max_n {
        for k in 1..=n / 2 {
            assert!(check_step_c1(n, k).unwrap().holds, "c1 n={n} k={k}");
            assert!(check_step_c2(n, k).unwrap().holds, "c2 n={n} k={k}");
            pairs += 1;
        }
    }
    println!("[2n k] ≡ 2(-1)^(k-1)(1-q^n) q^(-k(k-1)/2)/(1-q^k)  (mod Phi_n^2)");
    println!("[2n-k n+k] ≡ (-1)^k q^(-k(3k-1)/2)/2 [2n n][2k-1 k]  (mod Phi_n)");
    println!("  both hold for all {pairs} pairs (n <= {max_n}, 1 <= k <= n/2)\n");

    for n in 1..=max_n {
        let rep = check_step_c5(n).unwrap();
        assert!(rep.holds, "c5 n={n}");
    }
    println!("[2n n] ≡ 2 - n(1-q^n)  (mod Phi_n^2) for n <= {max_n}");

    // the n=2 instance, spelled out
    let rep = check_step_c5(2).unwrap();
    println!("\nn=2: [4 2] - (2 - 2(1-q^2)) is divisible by Phi_2^2: {}", rep.holds);
}
