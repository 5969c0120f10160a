//! The integer-side classics: the mod-p² and mod-p³ central binomial
//! congruences and the Euler-number congruence for the inverse-weighted
//! central binomial sum, plus the q = 1 bridge from the q-analogue back to
//! the integers.
//!
//! ```bash
//! cargo run --example classical_integer_congruences
//! ```

use num_bigint::BigInt;
use qcongruence::qseries::{binomial, euler_number, gauss_binom};
use qcongruence::statements::{check_babbage, check_sun_new6, check_wolstenholme};

fn main() {
    let primes = [3i64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

    println!("C(2p-1, p-1) ≡ 1 (mod p^2), odd primes:");
    for &p in &primes {
        assert!(check_babbage(p).unwrap().holds, "p={p}");
    }
    println!("  ok for {primes:?}");
    println!("  p=3 instance: C(5,2) = {} ≡ 1 (mod 9)", binomial(5, 2));

    println!("\nC(2p-1, p-1) ≡ 1 (mod p^3), primes p >= 5:");
    for &p in &primes[1..] {
        assert!(check_wolstenholme(p).unwrap().holds, "p={p}");
    }
    println!("  ok for {:?}", &primes[1..]);
    println!("  p=5 instance: C(9,4) = {} ≡ 1 (mod 125)", binomial(9, 4));
    println!("  p=3 is rejected: {:?}", check_wolstenholme(3).is_err());

    println!("\nΣ C(2k,k)/k ≡ (-1)^((p+1)/2)·(8p/3)·E_(p-3) (mod p^2), p >= 5:");
    for &p in &primes[1..] {
        assert!(check_sun_new6(p).unwrap().holds, "p={p}");
    }
    println!("  ok for {:?}", &primes[1..]);
    println!("  Euler numbers used: E_2 = {}, E_4 = {}, E_8 = {}",
        euler_number(2), euler_number(4), euler_number(8));
    println!("  p=5 worked instance: LHS = 2 + 3 = 5, RHS = -40/3 ≡ 680 ≡ 5 (mod 25)");

    // q = 1 bridge: specializing the q-analogue recovers the integer one
    println!("\nq = 1 bridge for the odd-prime q-analogue:");
    for &p in &primes {
        let lhs = gauss_binom(2 * p as u64 - 1, p - 1).eval_at_one();
        let diff = lhs - BigInt::from(1);
        assert!((&diff % BigInt::from(p * p)).eq(&BigInt::from(0)), "p={p}");
    }
    println!("  [2p-1 p-1] at q=1, minus 1, is divisible by p^2 for {primes:?}");
}
