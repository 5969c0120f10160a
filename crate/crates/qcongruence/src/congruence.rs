//! Congruence semantics for ℚ(q): reduction modulo powers of a monic base
//! polynomial and the divisible/coprime verdict for rational functions.
//!
//! A ≡ B (mod P) means: writing A − B in lowest terms as A₁/A₂, the
//! numerator A₁ is divisible by P and the denominator A₂ is coprime with P.
//! A non-coprime denominator makes the congruence ill-posed; that is a
//! reported verdict, never a crash.

use std::fmt;

use num_bigint::BigInt;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::qseries;
use crate::ratfun::RatFun;

/// A modulus base^power with the expansion cached.
///
/// Moduli built by [`Modulus::cyclotomic`] and [`Modulus::q_int_power`] also
/// carry the sparse fold polynomial (q^f − 1)^power, of which base^power is a
/// divisor. Reducing first by the fold costs O(power · length) and collapses
/// huge inputs to degree < f·power before the dense division, which is what
/// keeps suite runs over large q-binomials fast.
#[derive(Clone, Debug)]
pub struct Modulus {
    base: IntPoly,
    power: u32,
    expanded: IntPoly,
    fold: Option<IntPoly>,
}

impl Modulus {
    /// A modulus from an arbitrary monic base of degree >= 1.
    pub fn new(base: IntPoly, power: u32) -> Result<Self> {
        Modulus::with_fold(base, power, None)
    }

    /// Φ_n(q)^power, folding through (q^n − 1)^power.
    pub fn cyclotomic(n: u64, power: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::invalid(format!(
                "cyclotomic modulus requires n >= 1, got {n}"
            )));
        }
        Modulus::with_fold(qseries::cyclotomic(n), power, Some(n))
    }

    /// [p]_q^power, folding through (q^p − 1)^power since [p]_q divides q^p − 1.
    pub fn q_int_power(p: i64, power: u32) -> Result<Self> {
        let base = qseries::q_int(p)?;
        if base.degree() == Some(0) {
            return Err(Error::invalid("modulus base must have degree >= 1"));
        }
        Modulus::with_fold(base, power, Some(p as u64))
    }

    fn with_fold(base: IntPoly, power: u32, fold_period: Option<u64>) -> Result<Self> {
        match base.degree() {
            None | Some(0) => return Err(Error::invalid("modulus base must have degree >= 1")),
            Some(_) => {}
        }
        if !base.is_monic() {
            return Err(Error::invalid("modulus base must be monic"));
        }
        if power < 1 {
            return Err(Error::invalid("modulus power must be >= 1"));
        }
        let expanded = base.pow(power);
        let fold = fold_period.map(|f| {
            // (q^f - 1)^power, written out by the binomial theorem
            let mut coeffs = vec![BigInt::from(0); (f as usize) * (power as usize) + 1];
            for j in 0..=power {
                let c = qseries::binomial(power as u64, j as i64);
                let sign_neg = (power - j) % 2 == 1;
                coeffs[f as usize * j as usize] = if sign_neg { -c } else { c };
            }
            IntPoly::new(coeffs)
        });
        debug_assert!(fold
            .as_ref()
            .is_none_or(|f| f.divisible_by(&expanded)));
        Ok(Modulus {
            base,
            power,
            expanded,
            fold,
        })
    }

    pub fn base(&self) -> &IntPoly {
        &self.base
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn expanded(&self) -> &IntPoly {
        &self.expanded
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.power == 1 {
            write!(f, "{}", self.base)
        } else {
            write!(f, "({})^{}", self.base, self.power)
        }
    }
}

/// The unique remainder of `a` modulo base^power, degree < deg(base)·power.
pub fn reduce_mod(a: &IntPoly, m: &Modulus) -> IntPoly {
    let folded;
    let mut a = a;
    if let Some(fold) = &m.fold {
        if a.degree() >= fold.degree() {
            folded = a.divrem_monic(fold).expect("fold polynomial is monic").1;
            a = &folded;
        }
    }
    a.divrem_monic(&m.expanded)
        .expect("expanded modulus is monic")
        .1
}

/// Whether gcd(a, base) is constant. `a` must be nonzero.
pub fn is_coprime(a: &IntPoly, base: &IntPoly) -> Result<bool> {
    if a.is_zero() {
        return Err(Error::invalid("coprimality of the zero polynomial"));
    }
    Ok(IntPoly::gcd(a, base)?.degree() == Some(0))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CongruenceReason {
    Divisible,
    NonzeroRemainder,
    DenominatorNotCoprime,
}

impl CongruenceReason {
    pub fn as_str(self) -> &'static str {
        match self {
            CongruenceReason::Divisible => "divisible",
            CongruenceReason::NonzeroRemainder => "nonzero_remainder",
            CongruenceReason::DenominatorNotCoprime => "denominator_not_coprime",
        }
    }
}

/// Outcome of a congruence test.
///
/// `residual` is the remainder of the reduced numerator modulo the expanded
/// modulus; it is zero exactly when the verdict is `Divisible`. For a
/// non-coprime denominator it instead carries the offending common factor
/// gcd(denominator, base) as a nonzero witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceResult {
    pub holds: bool,
    pub reason: CongruenceReason,
    pub residual: IntPoly,
}

impl Serialize for CongruenceResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CongruenceResult", 3)?;
        s.serialize_field("holds", &self.holds)?;
        s.serialize_field("reason", self.reason.as_str())?;
        s.serialize_field("residual", &self.residual.to_string())?;
        s.end()
    }
}

impl CongruenceResult {
    fn divisible() -> Self {
        CongruenceResult {
            holds: true,
            reason: CongruenceReason::Divisible,
            residual: IntPoly::zero(),
        }
    }
}

/// Tests a ≡ b (mod m) for rational functions.
///
/// The difference is formed without reducing to lowest terms first: when the
/// raw denominator is already coprime to the base, divisibility of the raw
/// numerator is equivalent to divisibility of the reduced one, and skipping
/// the gcd keeps large verifications cheap. Lowest terms are computed only
/// when the raw denominator shares a factor with the base (the factor may be
/// removable) or to report a canonical residual for a failing verdict.
pub fn congruent(a: &RatFun, b: &RatFun, m: &Modulus) -> CongruenceResult {
    let num_raw = &(a.num() * b.den()) - &(b.num() * a.den());
    if num_raw.is_zero() {
        return CongruenceResult::divisible();
    }
    let den_raw = a.den() * b.den();
    let den_gcd = IntPoly::gcd(&den_raw, &m.base).expect("denominators are nonzero");
    let reduced;
    let num = if den_gcd.degree() == Some(0) {
        &num_raw
    } else {
        reduced = RatFun::new(num_raw.clone(), den_raw).expect("denominator is nonzero");
        let g = IntPoly::gcd(reduced.den(), &m.base).expect("denominator is nonzero");
        if g.degree() != Some(0) {
            return CongruenceResult {
                holds: false,
                reason: CongruenceReason::DenominatorNotCoprime,
                residual: g,
            };
        }
        reduced.num()
    };
    let residual = reduce_mod(num, m);
    if residual.is_zero() {
        return CongruenceResult::divisible();
    }
    // report the canonical residual of the lowest-terms numerator
    let lowest = RatFun::new(num_raw, a.den() * b.den()).expect("denominator is nonzero");
    CongruenceResult {
        holds: false,
        reason: CongruenceReason::NonzeroRemainder,
        residual: reduce_mod(lowest.num(), m),
    }
}
