//! The q-analogues of the classical central-binomial congruences: the
//! odd-prime congruence mod [p]_q², its mod-Phi_n³ extension for [2n n],
//! and the general Wolstenholme–Ljunggren q-analogue for [an bn].
//!
//! ```bash
//! cargo run --example straub_family
//! ```

use qcongruence::congruence::{congruent, Modulus};
use qcongruence::qseries::gauss_binom;
use qcongruence::statements::{check_andrews_new4, check_straub_a3, check_straub_new5};
use qcongruence::{IntPoly, RatFun};

fn main() {
    println!("[2p-1 p-1] ≡ q^(p(p-1)/2)  (mod [p]_q^2) for odd primes:");
    for p in [3, 5, 7, 11, 13, 17, 19, 23] {
        let rep = check_andrews_new4(p).unwrap();
        println!("  p={p:2}: {}", if rep.holds { "ok" } else { "FAIL" });
        assert!(rep.holds);
    }
    println!("  composite input is rejected: {:?}", check_andrews_new4(9).is_err());

    println!("\n[2n n] ≡ 1 + q^(n^2) - (n^2-1)/12·(q^n-1)^2  (mod Phi_n^3):");
    for n in 1..=30 {
        assert!(check_straub_a3(n).unwrap().holds, "n={n}");
    }
    println!("  holds for n = 1..=30 (the rational constant rides along exactly)");

    println!("\n[an bn] ≡ [a b]_(q^(n^2)) - (a-b)b C(a,b) (n^2-1)/24·(q^n-1)^2  (mod Phi_n^3):");
    for (a, b) in [(2, 1), (3, 1), (3, 2), (4, 2)] {
        for n in 1..=15 {
            assert!(check_straub_new5(n, a, b).unwrap().holds, "n={n} a={a} b={b}");
        }
        println!("  (a,b) = ({a},{b}): holds for n = 1..=15");
    }

    // the first consequence used on the way to the central-column theorem:
    // mod Phi_n^2 the correction vanishes and q^(n^2) survives
    println!("\n[2n n] ≡ 1 + q^(n^2)  (mod Phi_n^2):");
    for n in 1..=20u64 {
        let m = Modulus::cyclotomic(n, 2).unwrap();
        let rhs = &IntPoly::one() + &IntPoly::monomial(1, (n * n) as usize);
        let res = congruent(
            &RatFun::from(gauss_binom(2 * n, n as i64)),
            &RatFun::from(rhs),
            &m,
        );
        assert!(res.holds, "n={n}");
    }
    println!("  holds for n = 1..=20");
}
