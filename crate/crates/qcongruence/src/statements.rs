//! Named verification checks: the two q-trinomial divisibility theorems,
//! their supporting lemmas and proof steps, the q-analogues of the classical
//! binomial congruences, and the integer-side classics themselves. Each check
//! runs at one parameter point and returns a machine-readable report.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::congruence::{congruent, reduce_mod, CongruenceResult, Modulus};
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::qseries::{binomial, euler_number, gauss_binom, q_trinomial};
use crate::ratfun::RatFun;

/// Identifiers for the named statements, one per check operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StatementId {
    Theorem1,
    Theorem2,
    LemmaB1,
    LemmaB2,
    PropA1,
    AndrewsNew4,
    StraubA3,
    StraubNew5,
    StepC1,
    StepC2,
    StepC5,
    BabbageNew3,
    Wolstenholme,
    SunNew6,
}

impl StatementId {
    pub fn all() -> &'static [StatementId] {
        use StatementId::*;
        &[
            Theorem1,
            Theorem2,
            LemmaB1,
            LemmaB2,
            PropA1,
            AndrewsNew4,
            StraubA3,
            StraubNew5,
            StepC1,
            StepC2,
            StepC5,
            BabbageNew3,
            Wolstenholme,
            SunNew6,
        ]
    }

    pub fn as_str(self) -> &'static str {
        use StatementId::*;
        match self {
            Theorem1 => "theorem1",
            Theorem2 => "theorem2",
            LemmaB1 => "lemma_b1",
            LemmaB2 => "lemma_b2",
            PropA1 => "prop_a1",
            AndrewsNew4 => "andrews_new4",
            StraubA3 => "straub_a3",
            StraubNew5 => "straub_new5",
            StepC1 => "step_c1",
            StepC2 => "step_c2",
            StepC5 => "step_c5",
            BabbageNew3 => "babbage_new3",
            Wolstenholme => "wolstenholme",
            SunNew6 => "sun_new6",
        }
    }
}

impl fmt::Display for StatementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for StatementId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StatementId::all()
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::invalid(format!("unknown statement id `{s}`")))
    }
}

/// Which of the three cases of the closed form applies, by n mod 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RnBranch {
    ThreeM,
    ThreeMPlusOne,
    ThreeMMinusOne,
}

impl RnBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            RnBranch::ThreeM => "3m",
            RnBranch::ThreeMPlusOne => "3m+1",
            RnBranch::ThreeMMinusOne => "3m-1",
        }
    }
}

/// The closed-form value R_n(q): a signed monomial, or a signed binomial
/// (1 + q^m)·q^e when 3 divides n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RnFormula {
    pub n: u64,
    pub m: u64,
    pub branch: RnBranch,
    pub value: IntPoly,
}

/// Resolves n >= 1 into its unique branch n = 3m / 3m+1 / 3m-1 and builds
/// the corresponding value (-1)^m·q^(m(3m∓1)/2), doubled by (1 + q^m) on the
/// 3m branch.
pub fn r_n(n: i64) -> Result<RnFormula> {
    if n < 1 {
        return Err(Error::invalid(format!("r_n requires n >= 1, got {n}")));
    }
    let n = n as u64;
    let (m, branch) = match n % 3 {
        0 => (n / 3, RnBranch::ThreeM),
        1 => ((n - 1) / 3, RnBranch::ThreeMPlusOne),
        _ => ((n + 1) / 3, RnBranch::ThreeMMinusOne),
    };
    let exp = match branch {
        RnBranch::ThreeMPlusOne => (m * (3 * m + 1) / 2) as usize,
        _ => (m * (3 * m - 1) / 2) as usize,
    };
    let mut value = match branch {
        RnBranch::ThreeM => {
            &IntPoly::monomial(1, exp) + &IntPoly::monomial(1, exp + m as usize)
        }
        _ => IntPoly::monomial(1, exp),
    };
    if m % 2 == 1 {
        value = -value;
    }
    Ok(RnFormula {
        n,
        m,
        branch,
        value,
    })
}

/// Machine-readable verdict for one statement at one parameter point.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub statement: String,
    pub params: BTreeMap<String, i64>,
    pub holds: bool,
    pub reason: String,
    /// Degree of the nonzero residual; None when the residual is zero or the
    /// check has no polynomial residual.
    pub residual_degree: Option<i64>,
    /// Canonical text of the nonzero residual, for verbose output.
    pub residual: Option<String>,
    pub elapsed: Duration,
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let n = if self.residual.is_some() { 7 } else { 6 };
        let mut s = serializer.serialize_struct("VerificationReport", n)?;
        s.serialize_field("statement", &self.statement)?;
        s.serialize_field("params", &self.params)?;
        s.serialize_field("holds", &self.holds)?;
        s.serialize_field("reason", &self.reason)?;
        s.serialize_field("residual_degree", &self.residual_degree)?;
        s.serialize_field("elapsed_ms", &(self.elapsed.as_secs_f64() * 1e3))?;
        if let Some(r) = &self.residual {
            s.serialize_field("residual", r)?;
        }
        s.end()
    }
}

impl VerificationReport {
    /// One human-readable result line.
    pub fn human_line(&self, verbose: bool) -> String {
        let mut line = self.statement.clone();
        for key in ["n", "k", "p", "a", "b"] {
            if let Some(v) = self.params.get(key) {
                line.push_str(&format!(" {key}={v}"));
            }
        }
        line.push_str(if self.holds { ": ok (" } else { ": FAIL (" });
        line.push_str(&self.reason);
        if let Some(d) = self.residual_degree {
            line.push_str(&format!(", residual degree {d}"));
        }
        line.push_str(&format!(") {:.1}ms", self.elapsed.as_secs_f64() * 1e3));
        if verbose {
            if let Some(r) = &self.residual {
                line.push_str(&format!("\n  residual: {r}"));
            }
        }
        line
    }
}

fn params_map(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn finish(
    statement: &str,
    params: &[(&str, i64)],
    holds: bool,
    reason: String,
    residual: Option<IntPoly>,
    start: Instant,
) -> VerificationReport {
    let residual = residual.filter(|r| !r.is_zero());
    VerificationReport {
        statement: statement.to_string(),
        params: params_map(params),
        holds,
        reason,
        residual_degree: residual.as_ref().map(|r| r.degree().unwrap() as i64),
        residual: residual.map(|r| r.to_string()),
        elapsed: start.elapsed(),
    }
}

pub(crate) fn finish_congruence(
    statement: &str,
    params: &[(&str, i64)],
    res: CongruenceResult,
    start: Instant,
) -> VerificationReport {
    finish(
        statement,
        params,
        res.holds,
        res.reason.as_str().to_string(),
        Some(res.residual),
        start,
    )
}

fn require_min(name: &str, value: i64, min: i64) -> Result<u64> {
    if value < min {
        return Err(Error::invalid(format!(
            "{name} must be >= {min}, got {value}"
        )));
    }
    Ok(value as u64)
}

fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn require_odd_prime(p: i64) -> Result<u64> {
    if p < 3 || p % 2 == 0 || !is_prime(p) {
        return Err(Error::invalid(format!("p must be an odd prime, got {p}")));
    }
    Ok(p as u64)
}

fn require_prime_ge5(p: i64) -> Result<u64> {
    if p < 5 || !is_prime(p) {
        return Err(Error::invalid(format!("p must be a prime >= 5, got {p}")));
    }
    Ok(p as u64)
}

// [2k-1 k], memoized: it appears in the odd-prime q-analogue, in the k-sweeps
// of both proof-step congruences, and (via the symmetry [2k-1 k-1] = [2k-1 k])
// in the central q-binomial sum, across many different n.
static ODD_CENTRAL: OnceLock<RwLock<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();

fn odd_central(k: u64) -> Arc<IntPoly> {
    let memo = ODD_CENTRAL.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = memo.read().unwrap().get(&k) {
        return p.clone();
    }
    let arc = Arc::new(gauss_binom(2 * k - 1, k as i64));
    memo.write()
        .unwrap()
        .entry(k)
        .or_insert_with(|| arc.clone())
        .clone()
}

/// ((n 0))_q ≡ R_n(q) mod Φ_n(q)².
pub fn check_theorem1(n: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let n_u = require_min("n", n, 1)?;
    let lhs = RatFun::from(q_trinomial(n_u, 0));
    let rhs = RatFun::from(r_n(n)?.value);
    let m = Modulus::cyclotomic(n_u, 2)?;
    Ok(finish_congruence(
        "theorem1",
        &[("n", n)],
        congruent(&lhs, &rhs, &m),
        start,
    ))
}

/// ((2n n))_q ≡ 2·R_n(q) − n(1 − q^n) mod Φ_n(q)².
pub fn check_theorem2(n: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let n_u = require_min("n", n, 1)?;
    let lhs = RatFun::from(q_trinomial(2 * n_u, n));
    let rhs = RatFun::from(theorem2_rhs(n)?);
    let m = Modulus::cyclotomic(n_u, 2)?;
    Ok(finish_congruence(
        "theorem2",
        &[("n", n)],
        congruent(&lhs, &rhs, &m),
        start,
    ))
}

/// The consolidated right side 2·R_n(q) − n(1 − q^n).
pub fn theorem2_rhs(n: i64) -> Result<IntPoly> {
    let n_u = require_min("n", n, 1)?;
    let rn = r_n(n)?;
    Ok(&rn.value.scale(&BigInt::from(2))
        - &IntPoly::one_minus_q(n_u as usize).scale(&BigInt::from(n)))
}

/// The equivalent three-case display, built case by case so the identity
/// with [`theorem2_rhs`] can be tested rather than assumed.
pub fn theorem2_case_rhs(n: i64) -> Result<IntPoly> {
    let rn = r_n(n)?;
    let m = rn.m as usize;
    let sign = |p: IntPoly| if rn.m % 2 == 1 { -p } else { p };
    let two = BigInt::from(2);
    Ok(match rn.branch {
        RnBranch::ThreeM => {
            // 2(-1)^m (1+q^m) q^{m(3m-1)/2} - 3m(1 - q^{3m})
            let e = m * (3 * m - 1) / 2;
            let head = sign((&IntPoly::one() + &IntPoly::monomial(1, m)).shift(e).scale(&two));
            &head - &IntPoly::one_minus_q(3 * m).scale(&BigInt::from(3 * rn.m))
        }
        RnBranch::ThreeMPlusOne => {
            let e = m * (3 * m + 1) / 2;
            let head = sign(IntPoly::monomial(2, e));
            &head - &IntPoly::one_minus_q(3 * m + 1).scale(&BigInt::from(3 * rn.m + 1))
        }
        RnBranch::ThreeMMinusOne => {
            let e = m * (3 * m - 1) / 2;
            let head = sign(IntPoly::monomial(2, e));
            &head - &IntPoly::one_minus_q(3 * m - 1).scale(&BigInt::from(3 * rn.m - 1))
        }
    })
}

/// The finite sum (1-q^n)·Σ_k (-1)^k q^{k(k-1)/2} [n-k k]/(1-q^{n-k}) equals
/// R_n(q) exactly in ℚ(q), not merely modulo anything.
///
/// Each summand is itself a polynomial (a q-analogue of n/(n-k)·C(n-k,k)),
/// and consecutive summands differ by the sparse ratio
/// -q^{k-1}(1-q^{n-2k+2})(1-q^{n-2k+1}) / ((1-q^k)(1-q^{n-k})), so the sum
/// is accumulated by sparse multiplies and exact sparse divisions.
pub fn check_lemma_b1(n: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let n_u = require_min("n", n, 1)? as usize;
    let mut term = IntPoly::one();
    let mut sum = term.clone();
    for k in 1..=(n_u / 2) {
        let a = n_u - 2 * k + 2;
        let u = -(&IntPoly::one_minus_q(a) * &IntPoly::one_minus_q(a - 1)).shift(k - 1);
        let v = &IntPoly::one_minus_q(k) * &IntPoly::one_minus_q(n_u - k);
        term = (&term * &u).exact_div(&v)?;
        sum += &term;
    }
    let diff = &sum - &r_n(n)?.value;
    let holds = diff.is_zero();
    Ok(finish(
        "lemma_b1",
        &[("n", n)],
        holds,
        if holds { "exact_identity" } else { "nonzero_difference" }.to_string(),
        Some(diff),
        start,
    ))
}

/// [2k-1 k] ≡ (-1)^k q^{k(3k-1)/2} [n-k k] mod Φ_n(q), for 1 <= k <= n-1.
pub fn check_lemma_b2(n: i64, k: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let n_u = require_min("n", n, 2)?;
    if k < 1 || k >= n {
        return Err(Error::invalid(format!(
            "lemma_b2 requires 1 <= k <= n-1, got k={k}, n={n}"
        )));
    }
    let k_u = k as u64;
    let lhs = RatFun::from(odd_central(k_u).as_ref().clone());
    let mut rhs = gauss_binom(n_u - k_u, k).shift((k_u * (3 * k_u - 1) / 2) as usize);
    if k % 2 == 1 {
        rhs = -rhs;
    }
    let m = Modulus::cyclotomic(n_u, 1)?;
    Ok(finish_congruence(
        "lemma_b2",
        &[("n", n), ("k", k)],
        congruent(&lhs, &RatFun::from(rhs), &m),
        start,
    ))
}

/// Σ_{k=1}^{⌊n/2⌋} q^{-k(k-1)}/[2k]_q·[2k k] ≡ (1-q)(1-R_n)/(1-q^n)
/// mod Φ_n(q), Laurent terms included.
///
/// Each summand collapses to (1-q)·[2k-1 k-1] / (q^{k(k-1)}(1-q^k)), whose
/// denominator is coprime with Φ_n since k <= n/2 < n, so the sum accumulates
/// as a numerator/denominator pair reduced mod Φ_n at every step. On the
/// right, one factor of Φ_n cancels between 1-R_n and 1-q^n; both exact
/// divisions are performed rather than assumed.
pub fn check_prop_a1(n: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let n_u = require_min("n", n, 1)?;
    let phi = crate::qseries::cyclotomic(n_u);
    let m1 = Modulus::cyclotomic(n_u, 1)?;
    let one_minus_q1 = IntPoly::one_minus_q(1);

    let mut num = IntPoly::zero();
    let mut den = IntPoly::one();
    for k in 1..=(n_u / 2) {
        let term_num = reduce_mod(&(&one_minus_q1 * &odd_central(k)), &m1);
        let term_den = reduce_mod(
            &IntPoly::one_minus_q(k as usize).shift((k * (k - 1)) as usize),
            &m1,
        );
        num = reduce_mod(&(&(&num * &term_den) + &(&term_num * &den)), &m1);
        den = reduce_mod(&(&den * &term_den), &m1);
    }

    let rhs_num = (&IntPoly::one() - &r_n(n)?.value).exact_div(&phi)?;
    let rhs_den = IntPoly::one_minus_q(n_u as usize).exact_div(&phi)?;
    let rhs_num = reduce_mod(&(&one_minus_q1 * &rhs_num), &m1);
    let rhs_den = reduce_mod(&rhs_den, &m1);

    for d in [&den, &rhs_den] {
        let g = IntPoly::gcd(d, &phi)?;
        if g.degree() != Some(0) {
            return Ok(finish(
                "prop_a1",
                &[("n", n)],
                false,
                "denominator_not_coprime".to_string(),
                Some(g),
                start,
            ));
        }
    }

    let residual = reduce_mod(&(&(&num * &rhs_den) - &(&rhs_num * &den)), &m1);
    let holds = residual.is_zero();
    Ok(finish(
        "prop_a1",
        &[("n", n)],
        holds,
        if holds { "divisible" } else { "nonzero_remainder" }.to_string(),
        Some(residual),
        start,
    ))
}

/// [2p-1 p-1] ≡ q^{p(p-1)/2} mod [p]_q², the q-analogue of the classical
/// mod-p² central binomial congruence, for odd primes p.
pub fn check_andrews_new4(p: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let p_u = require_odd_prime(p)?;
    // [2p-1 p-1] = [2p-1 p] by symmetry
    let lhs = RatFun::from(odd_central(p_u).as_ref().clone());
    let rhs = RatFun::from(IntPoly::monomial(1, (p_u * (p_u - 1) / 2) as usize));
    let m = Modulus::q_int_power(p, 2)?;
    Ok(finish_congruence(
        "andrews_new4",
        &[("p", p)],
        congruent(&lhs, &rhs, &m),
        start,
    ))
}

/// [2n n] ≡ 1 + q^{n²} − (n²-1)/12·(q^n-1)² mod Φ_n(q)³.
pub fn check_straub_a3(n: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let n_u = require_min("n", n, 1)?;
    let n2 = n_u
        .checked_mul(n_u)
        .ok_or_else(|| Error::invalid("n too large"))?;
    let lhs = RatFun::from(gauss_binom(2 * n_u, n));
    let head = &IntPoly::one() + &IntPoly::monomial(1, n2 as usize);
    let corr = IntPoly::one_minus_q(n_u as usize)
        .pow(2)
        .scale(&BigInt::from(n2 - 1));
    let rhs = RatFun::new(&head.scale(&BigInt::from(12)) - &corr, IntPoly::constant(12))?;
    let m = Modulus::cyclotomic(n_u, 3)?;
    Ok(finish_congruence(
        "straub_a3",
        &[("n", n)],
        congruent(&lhs, &rhs, &m),
        start,
    ))
}

/// [an bn] ≡ [a b]_{q^{n²}} − (a-b)·b·C(a,b)·(n²-1)/24·(q^n-1)² mod Φ_n(q)³.
pub fn check_straub_new5(n: i64, a: i64, b: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let n_u = require_min("n", n, 1)?;
    if b < 0 || a < b {
        return Err(Error::invalid(format!(
            "straub_new5 requires 0 <= b <= a, got a={a}, b={b}"
        )));
    }
    let an = (a as u64)
        .checked_mul(n_u)
        .ok_or_else(|| Error::invalid("a*n too large"))?;
    let n2 = n_u
        .checked_mul(n_u)
        .ok_or_else(|| Error::invalid("n too large"))?;
    let lhs = RatFun::from(gauss_binom(an, b * n));
    let sub = gauss_binom(a as u64, b).substitute_monomial(n2 as usize);
    let coeff = BigInt::from((a - b) * b) * binomial(a as u64, b) * BigInt::from(n2 - 1);
    let corr = IntPoly::one_minus_q(n_u as usize).pow(2).scale(&coeff);
    let rhs = RatFun::new(&sub.scale(&BigInt::from(24)) - &corr, IntPoly::constant(24))?;
    let m = Modulus::cyclotomic(n_u, 3)?;
    Ok(finish_congruence(
        "straub_new5",
        &[("n", n), ("a", a), ("b", b)],
        congruent(&lhs, &rhs, &m),
        start,
    ))
}

fn require_k_range(n: i64, k: i64) -> Result<u64> {
    if k < 1 || k > n / 2 {
        return Err(Error::invalid(format!(
            "k must satisfy 1 <= k <= n/2, got k={k}, n={n}"
        )));
    }
    Ok(k as u64)
}

/// [2n k] ≡ 2(-1)^{k-1}(1-q^n)·q^{-k(k-1)/2}/(1-q^k) mod Φ_n(q)².
pub fn check_step_c1(n: i64, k: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let n_u = require_min("n", n, 2)?;
    let k_u = require_k_range(n, k)?;
    let lhs = RatFun::from(gauss_binom(2 * n_u, k));
    let mut num = IntPoly::one_minus_q(n_u as usize).scale(&BigInt::from(2));
    if k % 2 == 0 {
        num = -num;
    }
    let den = IntPoly::one_minus_q(k_u as usize).shift((k_u * (k_u - 1) / 2) as usize);
    let rhs = RatFun::new(num, den)?;
    let m = Modulus::cyclotomic(n_u, 2)?;
    Ok(finish_congruence(
        "step_c1",
        &[("n", n), ("k", k)],
        congruent(&lhs, &rhs, &m),
        start,
    ))
}

/// [2n-k n+k] ≡ (-1)^k q^{-k(3k-1)/2}/2·[2n n][2k-1 k] mod Φ_n(q).
///
/// Everything is reduced mod Φ_n before the product on the right is formed;
/// the verdict is the cross-multiplied test
/// 2 q^{k(3k-1)/2} [2n-k n+k] − (-1)^k [2n n][2k-1 k] ≡ 0, whose denominator
/// 2 q^e is coprime with every Φ_n.
pub fn check_step_c2(n: i64, k: i64) -> Result<VerificationReport> {
    let n_u = require_min("n", n, 2)?;
    let k_u = require_k_range(n, k)?;
    let m1 = Modulus::cyclotomic(n_u, 1)?;
    let central = reduce_mod(&gauss_binom(2 * n_u, n), &m1);
    let lhs = gauss_binom(2 * n_u - k_u, n + k);
    step_c2_inner(n, k, &lhs, &central, &m1)
}

// The k-sweep walks the left side along k with the sparse ratio
// (1-q^{n-2k+2})(1-q^{n-2k+1}) / ((1-q^{n+k})(1-q^{2n-k+1})) instead of
// rebuilding each [2n-k n+k] from its product formula.
fn step_c2_sweep(n: i64) -> Result<Vec<VerificationReport>> {
    let n_u = n as u64;
    let m1 = Modulus::cyclotomic(n_u, 1)?;
    let mut term = gauss_binom(2 * n_u, n);
    let central = reduce_mod(&term, &m1);
    let n_us = n as usize;
    let mut out = Vec::with_capacity((n / 2) as usize);
    for k in 1..=n / 2 {
        let k_us = k as usize;
        let a = n_us - 2 * k_us + 2;
        let u = &IntPoly::one_minus_q(a) * &IntPoly::one_minus_q(a - 1);
        let v = &IntPoly::one_minus_q(n_us + k_us) * &IntPoly::one_minus_q(2 * n_us - k_us + 1);
        term = (&term * &u).exact_div(&v)?;
        out.push(step_c2_inner(n, k, &term, &central, &m1)?);
    }
    Ok(out)
}

fn step_c2_inner(
    n: i64,
    k: i64,
    lhs: &IntPoly,
    central_reduced: &IntPoly,
    m1: &Modulus,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let k_u = k as u64;
    let scaled = reduce_mod(
        &lhs.shift((k_u * (3 * k_u - 1) / 2) as usize).scale(&BigInt::from(2)),
        m1,
    );
    let mut prod = reduce_mod(
        &(central_reduced * &reduce_mod(&odd_central(k_u), m1)),
        m1,
    );
    if k % 2 == 1 {
        prod = -prod;
    }
    let residual = reduce_mod(&(&scaled - &prod), m1);
    let holds = residual.is_zero();
    Ok(finish(
        "step_c2",
        &[("n", n), ("k", k)],
        holds,
        if holds { "divisible" } else { "nonzero_remainder" }.to_string(),
        Some(residual),
        start,
    ))
}

/// [2n n] ≡ 2 − n(1 − q^n) mod Φ_n(q)².
pub fn check_step_c5(n: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let n_u = require_min("n", n, 1)?;
    let lhs = RatFun::from(gauss_binom(2 * n_u, n));
    let rhs = RatFun::from(
        &IntPoly::constant(2) - &IntPoly::one_minus_q(n_u as usize).scale(&BigInt::from(n)),
    );
    let m = Modulus::cyclotomic(n_u, 2)?;
    Ok(finish_congruence(
        "step_c5",
        &[("n", n)],
        congruent(&lhs, &rhs, &m),
        start,
    ))
}

fn integer_congruence_report(
    statement: &str,
    p: i64,
    lhs: BigInt,
    rhs: BigInt,
    modulus: BigInt,
    start: Instant,
) -> VerificationReport {
    let residual = (lhs - rhs).mod_floor(&modulus);
    let holds = residual.is_zero();
    finish(
        statement,
        &[("p", p)],
        holds,
        if holds { "divisible" } else { "nonzero_remainder" }.to_string(),
        Some(IntPoly::new(vec![residual])),
        start,
    )
}

/// C(2p-1, p-1) ≡ 1 mod p² for odd primes p.
pub fn check_babbage(p: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let p_u = require_odd_prime(p)?;
    let lhs = binomial(2 * p_u - 1, p - 1);
    let modulus = BigInt::from(p).pow(2);
    Ok(integer_congruence_report(
        "babbage_new3",
        p,
        lhs,
        BigInt::one(),
        modulus,
        start,
    ))
}

/// C(2p-1, p-1) ≡ 1 mod p³ for primes p >= 5.
pub fn check_wolstenholme(p: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let p_u = require_prime_ge5(p)?;
    let lhs = binomial(2 * p_u - 1, p - 1);
    let modulus = BigInt::from(p).pow(3);
    Ok(integer_congruence_report(
        "wolstenholme",
        p,
        lhs,
        BigInt::one(),
        modulus,
        start,
    ))
}

fn mod_inverse(a: &BigInt, modulus: &BigInt) -> BigInt {
    let e = a.extended_gcd(modulus);
    assert!(e.gcd.is_one(), "{a} is not invertible mod {modulus}");
    e.x.mod_floor(modulus)
}

/// Σ_{k=1}^{(p-1)/2} C(2k,k)/k ≡ (-1)^{(p+1)/2}·(8p/3)·E_{p-3} mod p²
/// for primes p >= 5, with exact Euler numbers and inverses taken mod p².
pub fn check_sun_new6(p: i64) -> Result<VerificationReport> {
    let start = Instant::now();
    let p_u = require_prime_ge5(p)?;
    let pp = BigInt::from(p).pow(2);
    let mut lhs = BigInt::zero();
    for k in 1..=(p_u - 1) / 2 {
        lhs += binomial(2 * k, k as i64) * mod_inverse(&BigInt::from(k), &pp);
        lhs = lhs.mod_floor(&pp);
    }
    let e = euler_number(p_u - 3).mod_floor(&pp);
    let mut rhs = (BigInt::from(8 * p) * mod_inverse(&BigInt::from(3), &pp)).mod_floor(&pp);
    rhs = (rhs * e).mod_floor(&pp);
    if (p + 1) / 2 % 2 == 1 {
        rhs = (-rhs).mod_floor(&pp);
    }
    Ok(integer_congruence_report(
        "sun_new6", p, lhs, rhs, pp, start,
    ))
}

/// Extra parameters consumed by statements that declare them; today that is
/// only the pair (a, b) of the Wolstenholme–Ljunggren q-analogue.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteParams {
    pub a: i64,
    pub b: i64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams { a: 2, b: 1 }
    }
}

enum Job {
    Theorem1(i64),
    Theorem2(i64),
    LemmaB1(i64),
    LemmaB2Sweep(i64),
    PropA1(i64),
    AndrewsNew4(i64),
    StraubA3(i64),
    StraubNew5(i64, i64, i64),
    StepC1Sweep(i64),
    StepC2Sweep(i64),
    StepC5(i64),
    Babbage(i64),
    Wolstenholme(i64),
    SunNew6(i64),
}

fn run_job(job: &Job) -> Result<Vec<VerificationReport>> {
    Ok(match *job {
        Job::Theorem1(n) => vec![check_theorem1(n)?],
        Job::Theorem2(n) => vec![check_theorem2(n)?],
        Job::LemmaB1(n) => vec![check_lemma_b1(n)?],
        Job::LemmaB2Sweep(n) => (1..n)
            .map(|k| check_lemma_b2(n, k))
            .collect::<Result<_>>()?,
        Job::PropA1(n) => vec![check_prop_a1(n)?],
        Job::AndrewsNew4(p) => vec![check_andrews_new4(p)?],
        Job::StraubA3(n) => vec![check_straub_a3(n)?],
        Job::StraubNew5(n, a, b) => vec![check_straub_new5(n, a, b)?],
        Job::StepC1Sweep(n) => (1..=n / 2)
            .map(|k| check_step_c1(n, k))
            .collect::<Result<_>>()?,
        Job::StepC2Sweep(n) => step_c2_sweep(n)?,
        Job::StepC5(n) => vec![check_step_c5(n)?],
        Job::Babbage(p) => vec![check_babbage(p)?],
        Job::Wolstenholme(p) => vec![check_wolstenholme(p)?],
        Job::SunNew6(p) => vec![check_sun_new6(p)?],
    })
}

/// Runs the named statements over an inclusive range of n (or p), one report
/// per parameter tuple. Parameter tuples that a statement does not define
/// (composite p for the prime-only statements, n = 1 for the per-k sweeps)
/// are skipped, not failed. Reports come back sorted by (statement, n, k);
/// range points are verified in parallel.
pub fn run_suite(
    ids: &[StatementId],
    range: RangeInclusive<i64>,
    params: SuiteParams,
) -> Result<Vec<VerificationReport>> {
    if range.is_empty() {
        return Err(Error::invalid("empty parameter range"));
    }
    let (lo, hi) = (*range.start(), *range.end());
    let mut ids: Vec<StatementId> = ids.to_vec();
    ids.sort_unstable();
    ids.dedup();

    let mut jobs = Vec::new();
    for id in &ids {
        let from_1 = lo.max(1)..=hi;
        let from_2 = lo.max(2)..=hi;
        match id {
            StatementId::Theorem1 => jobs.extend(from_1.map(Job::Theorem1)),
            StatementId::Theorem2 => jobs.extend(from_1.map(Job::Theorem2)),
            StatementId::LemmaB1 => jobs.extend(from_1.map(Job::LemmaB1)),
            StatementId::LemmaB2 => jobs.extend(from_2.map(Job::LemmaB2Sweep)),
            StatementId::PropA1 => jobs.extend(from_1.map(Job::PropA1)),
            StatementId::AndrewsNew4 => {
                jobs.extend(from_1.filter(|&p| p > 2 && is_prime(p)).map(Job::AndrewsNew4))
            }
            StatementId::StraubA3 => jobs.extend(from_1.map(Job::StraubA3)),
            StatementId::StraubNew5 => {
                jobs.extend(from_1.map(|n| Job::StraubNew5(n, params.a, params.b)))
            }
            StatementId::StepC1 => jobs.extend(from_2.map(Job::StepC1Sweep)),
            StatementId::StepC2 => jobs.extend(from_2.map(Job::StepC2Sweep)),
            StatementId::StepC5 => jobs.extend(from_1.map(Job::StepC5)),
            StatementId::BabbageNew3 => {
                jobs.extend(from_1.filter(|&p| p > 2 && is_prime(p)).map(Job::Babbage))
            }
            StatementId::Wolstenholme => {
                jobs.extend(from_1.filter(|&p| p >= 5 && is_prime(p)).map(Job::Wolstenholme))
            }
            StatementId::SunNew6 => {
                jobs.extend(from_1.filter(|&p| p >= 5 && is_prime(p)).map(Job::SunNew6))
            }
        }
    }

    let nested: Result<Vec<Vec<VerificationReport>>> =
        jobs.par_iter().map(run_job).collect();
    Ok(nested?.into_iter().flatten().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::cyclotomic;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs)
    }

    #[test]
    fn r_n_branches() {
        let r = r_n(1).unwrap();
        assert_eq!(
            (r.branch, r.m, r.value.clone()),
            (RnBranch::ThreeMPlusOne, 0, IntPoly::one())
        );
        let r = r_n(2).unwrap();
        assert_eq!(
            (r.branch, r.m, r.value.clone()),
            (RnBranch::ThreeMMinusOne, 1, p(&[0, -1]))
        );
        let r = r_n(3).unwrap();
        assert_eq!(
            (r.branch, r.m, r.value.clone()),
            (RnBranch::ThreeM, 1, p(&[0, -1, -1]))
        );
        assert_eq!(r_n(4).unwrap().value, p(&[0, 0, -1]));
        assert_eq!(r_n(5).unwrap().value, IntPoly::monomial(1, 5));
        // n=6: (1+q^2)q^5
        assert_eq!(r_n(6).unwrap().value, &IntPoly::monomial(1, 5) + &IntPoly::monomial(1, 7));
        assert!(r_n(0).is_err());
    }

    #[test]
    fn theorem1_small() {
        // ((2 0))_q - R_2 = 1+2q+q^2 = Φ_2², exact quotient 1
        let diff = &q_trinomial(2, 0) - &r_n(2).unwrap().value;
        assert_eq!(diff, cyclotomic(2).pow(2));
        // ((3 0))_q - R_3 = 1+2q+3q^2+2q^3+q^4 = Φ_3²
        let diff = &q_trinomial(3, 0) - &r_n(3).unwrap().value;
        assert_eq!(diff, cyclotomic(3).pow(2));
        for n in 1..=30 {
            assert!(check_theorem1(n).unwrap().holds, "n={n}");
        }
    }

    #[test]
    fn theorem2_small() {
        // n=1: lhs = ((2 1))_q = 1+q, rhs = 2 - (1-q) = 1+q
        assert_eq!(q_trinomial(2, 1), p(&[1, 1]));
        assert_eq!(theorem2_rhs(1).unwrap(), p(&[1, 1]));
        for n in 1..=25 {
            assert!(check_theorem2(n).unwrap().holds, "n={n}");
        }
    }

    #[test]
    fn theorem2_case_identity() {
        for n in 1..=60 {
            assert_eq!(
                theorem2_case_rhs(n).unwrap(),
                theorem2_rhs(n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn lemma_b1_small() {
        // n=2: 1 - [2]_q = -q = R_2
        for n in 1..=40 {
            let rep = check_lemma_b1(n).unwrap();
            assert!(rep.holds, "n={n}");
            assert_eq!(rep.reason, "exact_identity");
            assert_eq!(rep.residual_degree, None);
        }
    }

    #[test]
    fn lemma_b2_small() {
        // n=2, k=1: [1 1]=1 vs -q·[1 1]=-q; 1-(-q) = Φ_2
        let rep = check_lemma_b2(2, 1).unwrap();
        assert!(rep.holds);
        // n=3, k=1: difference 1+q+q^2 = Φ_3
        let rep = check_lemma_b2(3, 1).unwrap();
        assert!(rep.holds);
        for n in 2..=25 {
            for k in 1..n {
                assert!(check_lemma_b2(n, k).unwrap().holds, "n={n} k={k}");
            }
        }
        assert!(check_lemma_b2(5, 0).is_err());
        assert!(check_lemma_b2(5, 5).is_err());
    }

    #[test]
    fn prop_a1_small() {
        for n in 1..=40 {
            assert!(check_prop_a1(n).unwrap().holds, "n={n}");
        }
    }

    #[test]
    fn prop_a1_matches_direct_rational_arithmetic() {
        // the reduced accumulation against a plain RatFun evaluation
        for n in 1..=16i64 {
            let mut lhs = RatFun::zero();
            for k in 1..=(n / 2) {
                let k_u = k as u64;
                let q_pow = RatFun::from(IntPoly::q())
                    .pow(-(k * (k - 1)))
                    .unwrap();
                let term = RatFun::new(
                    gauss_binom(2 * k_u, k),
                    crate::qseries::q_int(2 * k).unwrap(),
                )
                .unwrap();
                lhs = &lhs + &(&q_pow * &term);
            }
            let rn = r_n(n).unwrap().value;
            let rhs = RatFun::new(
                &IntPoly::one_minus_q(1) * &(&IntPoly::one() - &rn),
                IntPoly::one_minus_q(n as usize),
            )
            .unwrap();
            let m = Modulus::cyclotomic(n as u64, 1).unwrap();
            let direct = congruent(&lhs, &rhs, &m);
            let fast = check_prop_a1(n).unwrap();
            assert_eq!(direct.holds, fast.holds, "n={n}");
            assert!(fast.holds, "n={n}");
        }
    }

    #[test]
    fn andrews_new4_small_primes() {
        for p in [3, 5, 7, 11, 13] {
            assert!(check_andrews_new4(p).unwrap().holds, "p={p}");
        }
        assert!(check_andrews_new4(4).is_err());
        assert!(check_andrews_new4(2).is_err());
        assert!(check_andrews_new4(9).is_err());
    }

    #[test]
    fn straub_a3_small() {
        // the n=1,2 edge cases hold as well: for n=1 the difference is 0, and
        // for n=2 it is (q+1)^4/4
        for n in 1..=25 {
            assert!(check_straub_a3(n).unwrap().holds, "n={n}");
        }
    }

    #[test]
    fn straub_new5_small() {
        for (a, b) in [(2, 1), (3, 1), (3, 2), (4, 2)] {
            for n in 1..=12 {
                assert!(check_straub_new5(n, a, b).unwrap().holds, "n={n} a={a} b={b}");
            }
        }
        // a = b collapses both sides to 1
        let rep = check_straub_new5(9, 3, 3).unwrap();
        assert!(rep.holds);
        assert!(check_straub_new5(5, 1, 2).is_err());
    }

    #[test]
    fn new5_at_2_1_matches_a3() {
        for n in 1..=20 {
            let a3 = check_straub_a3(n).unwrap();
            let n5 = check_straub_new5(n, 2, 1).unwrap();
            assert_eq!(a3.holds, n5.holds, "n={n}");
            assert_eq!(a3.reason, n5.reason, "n={n}");
        }
    }

    #[test]
    fn proof_steps_small() {
        // c-5 at n=2: [4 2] vs 2-2(1-q^2), difference divisible by Φ_2²
        assert!(check_step_c5(2).unwrap().holds);
        for n in 2..=20 {
            for k in 1..=(n / 2) {
                assert!(check_step_c1(n, k).unwrap().holds, "c1 n={n} k={k}");
                assert!(check_step_c2(n, k).unwrap().holds, "c2 n={n} k={k}");
            }
            assert!(check_step_c5(n).unwrap().holds, "c5 n={n}");
        }
        assert!(check_step_c1(6, 4).is_err());
        assert!(check_step_c2(6, 0).is_err());
    }

    #[test]
    fn classical_congruences() {
        // C(5,2) = 10 ≡ 1 mod 9
        assert!(check_babbage(3).unwrap().holds);
        // C(9,4) = 126 ≡ 1 mod 125
        assert!(check_wolstenholme(5).unwrap().holds);
        assert!(check_wolstenholme(3).is_err());
        for p in [5, 7, 11, 13, 17, 19, 23] {
            assert!(check_babbage(p).unwrap().holds, "babbage p={p}");
            assert!(check_wolstenholme(p).unwrap().holds, "wolstenholme p={p}");
            assert!(check_sun_new6(p).unwrap().holds, "sun p={p}");
        }
        assert!(check_sun_new6(4).is_err());
        assert!(check_sun_new6(3).is_err());
    }

    #[test]
    fn sun_new6_worked_instance() {
        // p=5: LHS = C(2,1)/1 + C(4,2)/2 = 5; RHS = -(40/3)·E_2 ≡ 680 ≡ 5 mod 25
        let pp = BigInt::from(25);
        let lhs = (binomial(2, 1) * mod_inverse(&BigInt::one(), &pp)
            + binomial(4, 2) * mod_inverse(&BigInt::from(2), &pp))
        .mod_floor(&pp);
        assert_eq!(lhs, BigInt::from(5));
        let rhs = (BigInt::from(-40) * mod_inverse(&BigInt::from(3), &pp) * euler_number(2))
            .mod_floor(&pp);
        assert_eq!(BigInt::from(40) * mod_inverse(&BigInt::from(3), &pp) % &pp, BigInt::from(680) % &pp);
        assert_eq!(rhs, BigInt::from(5));
        assert!(check_sun_new6(5).unwrap().holds);
    }

    #[test]
    fn suite_runner() {
        let reports = run_suite(&[StatementId::Theorem1], 1..=10, SuiteParams::default()).unwrap();
        assert_eq!(reports.len(), 10);
        assert!(reports.iter().all(|r| r.holds));
        assert_eq!(reports[3].params["n"], 4);

        let reports = run_suite(&[StatementId::LemmaB2], 5..=5, SuiteParams::default()).unwrap();
        assert_eq!(reports.len(), 4);
        let ks: Vec<i64> = reports.iter().map(|r| r.params["k"]).collect();
        assert_eq!(ks, vec![1, 2, 3, 4]);

        assert!(run_suite(&[StatementId::Theorem1], 5..=4, SuiteParams::default()).is_err());

        // prime-only statements enumerate only primes
        let reports =
            run_suite(&[StatementId::Wolstenholme], 1..=10, SuiteParams::default()).unwrap();
        let ps: Vec<i64> = reports.iter().map(|r| r.params["p"]).collect();
        assert_eq!(ps, vec![5, 7]);
    }

    #[test]
    fn statement_id_round_trip() {
        for id in StatementId::all() {
            assert_eq!(id.as_str().parse::<StatementId>().unwrap(), *id);
        }
        assert!("nosuch".parse::<StatementId>().is_err());
    }

    #[test]
    fn report_json_shape() {
        let rep = check_theorem1(5).unwrap();
        let v = serde_json::to_value(&rep).unwrap();
        assert_eq!(v["statement"], "theorem1");
        assert_eq!(v["params"]["n"], 5);
        assert_eq!(v["holds"], true);
        assert_eq!(v["reason"], "divisible");
        assert!(v["residual_degree"].is_null());
        assert!(v["elapsed_ms"].is_number());
        assert!(v.get("residual").is_none());
    }
}
