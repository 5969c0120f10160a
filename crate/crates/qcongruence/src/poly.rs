//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! Coefficients are stored low-to-high: `coeffs[i]` holds the coefficient of
//! q^i. The vector never ends in a zero, and the zero polynomial is the empty
//! vector, so equality is plain structural equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// One subtraction step of a division loop: dst -= c·coeff. The q-series
/// divisors are overwhelmingly ±1-coefficient binomial products, so those
/// cases collapse to a plain subtraction or addition with no allocation.
enum TailOp {
    Sub,
    Add,
    MulSub(BigInt),
}

impl TailOp {
    #[inline]
    fn submul(&self, dst: &mut BigInt, c: &BigInt) {
        match self {
            TailOp::Sub => *dst -= c,
            TailOp::Add => *dst += c,
            TailOp::MulSub(d) => *dst -= c * d,
        }
    }
}

fn sparse_tail(coeffs: &[BigInt]) -> Vec<(usize, TailOp)> {
    let neg_one = -BigInt::one();
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| {
            let op = if c.is_one() {
                TailOp::Sub
            } else if *c == neg_one {
                TailOp::Add
            } else {
                TailOp::MulSub(c.clone())
            };
            (j, op)
        })
        .collect()
}

impl IntPoly {
    /// Builds a polynomial from low-to-high coefficients, trimming high zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::new(vec![c.into()])
    }

    /// c·q^exp
    pub fn monomial(c: impl Into<BigInt>, exp: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        IntPoly { coeffs }
    }

    /// The variable q itself.
    pub fn q() -> Self {
        IntPoly::monomial(1, 1)
    }

    /// 1 − q^exp, the ubiquitous factor of q-series numerators and denominators.
    pub fn one_minus_q(exp: usize) -> Self {
        if exp == 0 {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[0] = BigInt::one();
        coeffs[exp] = -BigInt::one();
        IntPoly { coeffs }
    }

    /// Convenience constructor from machine integers (mostly for tests).
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// None is the "minus infinity" degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Coefficient of q^i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    fn nonzero_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplies by the scalar c.
    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by q^k.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        IntPoly { coeffs }
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut out = IntPoly::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Quotient and remainder by a monic divisor; both stay in ℤ[q].
    ///
    /// Skips zero coefficients of the divisor, so reduction by sparse moduli
    /// such as (q^n − 1)^k costs O(terms · length).
    pub fn divrem_monic(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let d_deg = divisor.degree().ok_or(Error::ZeroDivisor)?;
        if !divisor.is_monic() {
            return Err(Error::NonMonicDivisor);
        }
        let a_deg = match self.degree() {
            None => return Ok((IntPoly::zero(), IntPoly::zero())),
            Some(d) => d,
        };
        if a_deg < d_deg {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let tail = sparse_tail(&divisor.coeffs[..d_deg]);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); a_deg - d_deg + 1];
        for i in (0..quot.len()).rev() {
            let c = std::mem::take(&mut rem[i + d_deg]);
            if c.is_zero() {
                continue;
            }
            for (j, op) in &tail {
                op.submul(&mut rem[i + j], &c);
            }
            quot[i] = c;
        }
        rem.truncate(d_deg);
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Exact division in ℤ[q]; errors if the divisor does not divide exactly.
    ///
    /// Works low-to-high after stripping the common power of q, so division
    /// by sparse factors such as 1 − q^k costs O(terms · length) regardless
    /// of the divisor's leading coefficient.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let d_deg = divisor.degree().ok_or(Error::ZeroDivisor)?;
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let a_deg = self.degree().unwrap();
        let d_low = divisor.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        let a_low = self.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        if a_deg < d_deg || a_low < d_low {
            return Err(Error::InexactDivision);
        }
        let d = &divisor.coeffs[d_low..];
        let mut rem: Vec<BigInt> = self.coeffs[a_low..].to_vec();
        let q_len = rem.len() - d.len() + 1;
        let d0 = &d[0];
        let d0_unit = d0.is_one();
        let tail = {
            let mut t = sparse_tail(&d[1..]);
            for (j, _) in &mut t {
                *j += 1;
            }
            t
        };
        let shift = a_low - d_low;
        let mut quot = vec![BigInt::zero(); shift + q_len];
        for i in 0..q_len {
            let c = std::mem::take(&mut rem[i]);
            if c.is_zero() {
                continue;
            }
            let qc = if d0_unit {
                c
            } else {
                let (qc, r) = c.div_rem(d0);
                if !r.is_zero() {
                    return Err(Error::InexactDivision);
                }
                qc
            };
            for (j, op) in &tail {
                op.submul(&mut rem[i + j], &qc);
            }
            quot[shift + i] = qc;
        }
        if rem[q_len..].iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(IntPoly::new(quot))
    }

    /// Whether `divisor` divides self exactly.
    pub fn divisible_by(&self, divisor: &IntPoly) -> bool {
        self.exact_div(divisor).is_ok()
    }

    /// Substitutes q → q^m, moving the coefficient of q^i to q^(i·m).
    pub fn substitute_monomial(&self, m: usize) -> IntPoly {
        assert!(m >= 1, "substitute_monomial requires m >= 1");
        if m == 1 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * m + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[i * m] = c.clone();
            }
        }
        IntPoly { coeffs }
    }

    /// Sum of coefficients, i.e. the value at q = 1.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// gcd of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            if !c.is_zero() {
                g = g.gcd(c);
                if g.is_one() {
                    break;
                }
            }
        }
        g
    }

    /// Divides out the content; the zero polynomial stays zero.
    pub fn primitive_part(&self) -> IntPoly {
        let g = self.content();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &g).collect(),
        }
    }

    /// Flips the sign if the leading coefficient is negative.
    pub fn with_positive_lead(&self) -> IntPoly {
        match self.leading_coeff() {
            Some(c) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// Pseudo-remainder of self by `v`: the remainder of lc(v)^s · self
    /// divided by v, staying in ℤ[q]. With a monic v this is the plain
    /// remainder.
    fn pseudo_rem(&self, v: &IntPoly) -> IntPoly {
        let dv = v.degree().expect("pseudo_rem by zero");
        let lcv = &v.coeffs[dv];
        let monic = lcv.is_one();
        let tail: Vec<(usize, &BigInt)> = v.coeffs[..dv]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut r = self.coeffs.clone();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
        while r.len() > dv {
            let dr = r.len() - 1;
            let lr = r.pop().unwrap();
            if lr.is_zero() {
                continue;
            }
            if !monic {
                for c in r.iter_mut() {
                    *c *= lcv;
                }
            }
            for (j, vj) in &tail {
                r[dr - dv + j] -= &lr * *vj;
            }
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        IntPoly { coeffs: r }
    }

    /// Greatest common divisor over ℤ[q]: the primitive gcd with positive
    /// leading coefficient times the gcd of the integer contents.
    ///
    /// Uses a primitive pseudo-remainder sequence (content split each step)
    /// to keep coefficient growth in check.
    pub fn gcd(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        if a.is_zero() {
            return Ok(b.with_positive_lead());
        }
        if b.is_zero() {
            return Ok(a.with_positive_lead());
        }
        let content_gcd = a.content().gcd(&b.content());
        // sign-normalizing keeps the common ±1 leading coefficients monic,
        // so the pseudo-remainders below degenerate to plain remainders
        let mut u = a.primitive_part().with_positive_lead();
        let mut v = b.primitive_part().with_positive_lead();
        if u.degree() < v.degree() {
            std::mem::swap(&mut u, &mut v);
        }
        while !v.is_zero() {
            if v.degree() == Some(0) {
                // a nonzero constant divides everything
                u = IntPoly::one();
                break;
            }
            let r = u.pseudo_rem(&v).primitive_part().with_positive_lead();
            u = v;
            v = r;
        }
        Ok(u.primitive_part().with_positive_lead().scale(&content_gcd))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Canonical text form: ascending powers, explicit signs, `^` for exponents,
/// zero terms omitted, e.g. `-1 + 2*q + q^3`. The zero polynomial is `0`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "q")?;
                } else {
                    write!(f, "q^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl std::ops::AddAssign<&IntPoly> for IntPoly {
    fn add_assign(&mut self, rhs: &IntPoly) {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[i] += c;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (i, c) in short.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPoly::new(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut coeffs = self.coeffs.clone();
        if rhs.coeffs.len() > coeffs.len() {
            coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        IntPoly::new(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        // drive the loop from the operand with fewer terms so that sparse
        // factors multiply in linear time
        let (outer, inner) = if self.nonzero_terms() <= rhs.nonzero_terms() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let neg_one = -BigInt::one();
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, c) in outer.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // ±1 coefficients multiply by pure addition
            if c.is_one() {
                for (j, d) in inner.coeffs.iter().enumerate() {
                    if !d.is_zero() {
                        coeffs[i + j] += d;
                    }
                }
            } else if *c == neg_one {
                for (j, d) in inner.coeffs.iter().enumerate() {
                    if !d.is_zero() {
                        coeffs[i + j] -= d;
                    }
                }
            } else {
                for (j, d) in inner.coeffs.iter().enumerate() {
                    if !d.is_zero() {
                        coeffs[i + j] += c * d;
                    }
                }
            }
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs)
    }

    #[test]
    fn add_basic() {
        // (1+q) + (-1+q) = 2q
        assert_eq!(&p(&[1, 1]) + &p(&[-1, 1]), p(&[0, 2]));
        // p + 0 = p
        assert_eq!(&p(&[3, 0, 5]) + &IntPoly::zero(), p(&[3, 0, 5]));
        // (1+q+q^2) + (-1-q-q^2) = 0
        assert!((&p(&[1, 1, 1]) + &p(&[-1, -1, -1])).is_zero());
    }

    #[test]
    fn mul_basic() {
        // (1+q)(1-q) = 1-q^2
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        // (1+q+q^2)^2 = 1+2q+3q^2+2q^3+q^4, by schoolbook convolution
        assert_eq!(p(&[1, 1, 1]).pow(2), p(&[1, 2, 3, 2, 1]));
        // p·0 = 0
        assert!((&p(&[4, 7]) * &IntPoly::zero()).is_zero());
    }

    #[test]
    fn degree_sentinel() {
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
        assert_eq!(p(&[0, 0, 1]).degree(), Some(2));
        // normalization trims high zeros
        assert_eq!(IntPoly::from_coeffs(&[1, 2, 0, 0]).degree(), Some(1));
    }

    #[test]
    fn divrem_monic_basic() {
        // q^3 - 1 = (q-1)(q^2+q+1)
        let (quot, rem) = p(&[-1, 0, 0, 1]).divrem_monic(&p(&[-1, 1])).unwrap();
        assert_eq!(quot, p(&[1, 1, 1]));
        assert!(rem.is_zero());
        // q^2 = (q+1)(q-1) + 1, by long division
        let (quot, rem) = p(&[0, 0, 1]).divrem_monic(&p(&[1, 1])).unwrap();
        assert_eq!(quot, p(&[-1, 1]));
        assert_eq!(rem, p(&[1]));
        // degree too small
        let (quot, rem) = p(&[1]).divrem_monic(&p(&[1, 0, 1])).unwrap();
        assert!(quot.is_zero());
        assert_eq!(rem, p(&[1]));
    }

    #[test]
    fn divrem_monic_rejects() {
        assert_eq!(
            p(&[1, 1]).divrem_monic(&p(&[1, 2])),
            Err(Error::NonMonicDivisor)
        );
        assert_eq!(
            p(&[1, 1]).divrem_monic(&IntPoly::zero()),
            Err(Error::ZeroDivisor)
        );
    }

    #[test]
    fn divrem_invariant() {
        let a = p(&[3, -2, 0, 7, 1, -5]);
        let d = p(&[2, -1, 0, 1]);
        let (quot, rem) = a.divrem_monic(&d).unwrap();
        assert_eq!(&(&quot * &d) + &rem, a);
        assert!(rem.degree() < d.degree());
    }

    #[test]
    fn exact_div_basic() {
        // (1-q^6)/(1-q^2) = 1+q^2+q^4
        let a = IntPoly::one_minus_q(6);
        let d = IntPoly::one_minus_q(2);
        assert_eq!(a.exact_div(&d).unwrap(), p(&[1, 0, 1, 0, 1]));
        // constant divisor
        assert_eq!(p(&[24, 48]).exact_div(&p(&[24])).unwrap(), p(&[1, 2]));
        // common power of q stripped: q^3(1+q) / q^2 = q(1+q)
        assert_eq!(
            p(&[0, 0, 0, 1, 1]).exact_div(&p(&[0, 0, 1])).unwrap(),
            p(&[0, 1, 1])
        );
        // inexact division is rejected
        assert_eq!(
            p(&[1, 1, 1]).exact_div(&p(&[1, 1])),
            Err(Error::InexactDivision)
        );
        assert_eq!(p(&[3, 3]).exact_div(&p(&[2])), Err(Error::InexactDivision));
    }

    #[test]
    fn gcd_basic() {
        // gcd(q^2-1, q^3-1) = q-1
        let g = IntPoly::gcd(&p(&[-1, 0, 1]), &p(&[-1, 0, 0, 1])).unwrap();
        assert_eq!(g, p(&[-1, 1]));
        // gcd(p, 0) = p normalized to a positive leading coefficient
        let g = IntPoly::gcd(&p(&[2, -4]), &IntPoly::zero()).unwrap();
        assert_eq!(g, p(&[-2, 4]));
        // gcd(q^2+1, q+1) = 1
        let g = IntPoly::gcd(&p(&[1, 0, 1]), &p(&[1, 1])).unwrap();
        assert_eq!(g, IntPoly::one());
        // contents participate: gcd(2q, 4) = 2
        let g = IntPoly::gcd(&p(&[0, 2]), &p(&[4])).unwrap();
        assert_eq!(g, p(&[2]));
        assert_eq!(
            IntPoly::gcd(&IntPoly::zero(), &IntPoly::zero()),
            Err(Error::GcdOfZeros)
        );
    }

    #[test]
    fn gcd_divides_both() {
        let a = &p(&[1, 2, 1]) * &p(&[3, 0, -1, 2]);
        let b = &p(&[1, 2, 1]) * &p(&[-5, 1]);
        let g = IntPoly::gcd(&a, &b).unwrap();
        assert!(a.divisible_by(&g));
        assert!(b.divisible_by(&g));
        assert!(g.divisible_by(&p(&[1, 2, 1])));
    }

    #[test]
    fn substitute_basic() {
        // (1+q)^2 with m=3: 1+2q^3+q^6
        assert_eq!(
            p(&[1, 2, 1]).substitute_monomial(3),
            p(&[1, 0, 0, 2, 0, 0, 1])
        );
        assert_eq!(p(&[5, -1, 7]).substitute_monomial(1), p(&[5, -1, 7]));
        // [3]_q with m=2: 1+q^2+q^4
        assert_eq!(p(&[1, 1, 1]).substitute_monomial(2), p(&[1, 0, 1, 0, 1]));
    }

    #[test]
    fn substitute_composes() {
        let a = p(&[2, 0, -3, 1]);
        assert_eq!(
            a.substitute_monomial(2).substitute_monomial(3),
            a.substitute_monomial(6)
        );
    }

    #[test]
    fn eval_at_one_basic() {
        assert_eq!(p(&[1, 1, 1]).eval_at_one(), BigInt::from(3));
        assert_eq!(IntPoly::zero().eval_at_one(), BigInt::zero());
        assert_eq!(p(&[1, -2, 5]).eval_at_one(), BigInt::from(4));
    }

    #[test]
    fn display_canonical() {
        assert_eq!(p(&[-1, 2, 0, 1]).to_string(), "-1 + 2*q + q^3");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[0, 1]).to_string(), "q");
        assert_eq!(p(&[0, 0, -1]).to_string(), "-q^2");
        assert_eq!(p(&[1, -2]).to_string(), "1 - 2*q");
        assert_eq!(p(&[7]).to_string(), "7");
    }
}
