//! The congruence semantics: reduction modulo Phi_n(q)^k, divisibility
//! verdicts for rational functions, Laurent terms, and how ill-posed
//! denominators are reported instead of crashing.
//!
//! ```bash
//! cargo run --example congruence_basics
//! ```

use qcongruence::congruence::{congruent, reduce_mod, Modulus};
use qcongruence::qseries::gauss_binom;
use qcongruence::{IntPoly, RatFun};

fn main() {
    // q^n ≡ 1 (mod Phi_n): the workhorse fact behind everything else
    let m = Modulus::cyclotomic(7, 1).unwrap();
    let q7 = IntPoly::monomial(1, 7);
    println!("q^7 mod Phi_7 = {}", reduce_mod(&q7, &m));

    // [5 2] ≡ q^3 (mod [3]_q^2), the odd-prime q-analogue at p = 3
    let m = Modulus::q_int_power(3, 2).unwrap();
    let res = congruent(
        &RatFun::from(gauss_binom(5, 2)),
        &RatFun::from(IntPoly::monomial(1, 3)),
        &m,
    );
    println!("[5 2] ≡ q^3 mod [3]_q^2: holds = {}", res.holds);

    // a failing congruence carries its residual
    let m = Modulus::cyclotomic(4, 1).unwrap();
    let res = congruent(
        &RatFun::from(IntPoly::monomial(1, 2)),
        &RatFun::one(),
        &m,
    );
    println!(
        "q^2 ≡ 1 mod Phi_4: holds = {}, reason = {}, residual = {}",
        res.holds,
        res.reason.as_str(),
        res.residual
    );

    // Laurent terms: q^(-2)·q^3 = q lives in Q(q), not Z[q]
    let q = RatFun::from(IntPoly::q());
    let laurent = &q.pow(-2).unwrap() * &q.pow(3).unwrap();
    println!("q^(-2) * q^3 = {laurent}");

    // a denominator sharing a factor with the base is an ill-posed
    // congruence; the verdict says so and shows the common factor
    let m = Modulus::cyclotomic(4, 1).unwrap();
    let bad = RatFun::new(IntPoly::one(), IntPoly::one_minus_q(4)).unwrap();
    let res = congruent(&bad, &RatFun::one(), &m);
    println!(
        "1/(1-q^4) ≡ 1 mod Phi_4: holds = {}, reason = {}, common factor = {}",
        res.holds,
        res.reason.as_str(),
        res.residual
    );

    // JSON rendering of a verdict
    println!("as JSON: {}", serde_json::to_string(&res).unwrap());
}
