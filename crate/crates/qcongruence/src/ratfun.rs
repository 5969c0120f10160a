//! Rational functions over ℚ, kept in canonical lowest terms.
//!
//! The invariants are: the denominator is nonzero with a positive leading
//! coefficient, the polynomial gcd of numerator and denominator is constant,
//! and the integer contents of the two are coprime. Under this normalization
//! two equal values have equal representations, so `==` is structural.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: IntPoly,
    den: IntPoly,
}

impl RatFun {
    /// Builds num/den and reduces to canonical lowest terms.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFun {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            });
        }
        let g = IntPoly::gcd(&num, &den).expect("nonzero inputs");
        let mut num = num.exact_div(&g).expect("gcd divides");
        let mut den = den.exact_div(&g).expect("gcd divides");
        if den.leading_coeff().is_some_and(num_traits::Signed::is_negative) {
            num = -num;
            den = -den;
        }
        Ok(RatFun { num, den })
    }

    pub fn zero() -> Self {
        RatFun {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFun {
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        RatFun {
            num: IntPoly::constant(c),
            den: IntPoly::one(),
        }
    }

    /// An integer fraction a/b as an element of ℚ(q).
    pub fn fraction(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self> {
        RatFun::new(IntPoly::constant(a), IntPoly::constant(b))
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial inside, when the denominator is 1.
    pub fn as_poly(&self) -> Option<&IntPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn div(&self, rhs: &RatFun) -> Result<RatFun> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFun::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Integer power; negative exponents invert, so q^(-k) style Laurent
    /// terms live here.
    pub fn pow(&self, e: i64) -> Result<RatFun> {
        if e < 0 && self.is_zero() {
            return Err(Error::ZeroToNegativePower);
        }
        let (num, den) = if e >= 0 {
            (&self.num, &self.den)
        } else {
            (&self.den, &self.num)
        };
        let e = e.unsigned_abs().try_into().map_err(|_| {
            Error::invalid(format!("exponent {e} out of range"))
        })?;
        RatFun::new(num.pow(e), den.pow(e))
    }

    /// Substitutes q → q^m in both numerator and denominator.
    pub fn substitute_monomial(&self, m: usize) -> RatFun {
        RatFun::new(
            self.num.substitute_monomial(m),
            self.den.substitute_monomial(m),
        )
        .expect("denominator stays nonzero")
    }
}

impl From<IntPoly> for RatFun {
    fn from(num: IntPoly) -> Self {
        RatFun {
            num,
            den: IntPoly::one(),
        }
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        RatFun::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("denominator product is nonzero")
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        RatFun::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("denominator product is nonzero")
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("denominator product is nonzero")
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// Renders `(<num>)/(<den>)`, or just the numerator when the denominator is 1.
impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
