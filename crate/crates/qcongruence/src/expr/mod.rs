//! A small expression language over q with an integer parameter n, used by
//! the command line for ad-hoc congruence checks and one-off evaluations.
//!
//! Sorts are resolved while parsing: an expression is either integer-valued
//! or q-valued, integer expressions coerce into q-valued contexts, and the
//! places that demand integers (exponents, most function arguments) reject
//! q-valued subexpressions with a position-annotated error.

mod lexer;
mod parser;

use std::fmt;
use std::ops::RangeInclusive;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use crate::congruence::{congruent, Modulus};
use crate::error::{Error, Result};
use crate::qseries;
use crate::ratfun::RatFun;
use crate::statements::{self, VerificationReport};

pub use parser::parse;

/// Syntax or sort error, with the byte offset it was detected at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Integer-valued expression nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntExpr {
    Literal(BigInt),
    N,
    Neg(Box<IntExpr>),
    Add(Box<IntExpr>, Box<IntExpr>),
    Sub(Box<IntExpr>, Box<IntExpr>),
    Mul(Box<IntExpr>, Box<IntExpr>),
    Pow(Box<IntExpr>, Box<IntExpr>),
    /// trinom(n, j): a trinomial coefficient, an integer.
    Trinom(Box<IntExpr>, Box<IntExpr>),
}

/// q-valued expression nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QExpr {
    /// An integer-valued subexpression used as a constant.
    Scalar(IntExpr),
    Q,
    Neg(Box<QExpr>),
    Add(Box<QExpr>, Box<QExpr>),
    Sub(Box<QExpr>, Box<QExpr>),
    Mul(Box<QExpr>, Box<QExpr>),
    Div(Box<QExpr>, Box<QExpr>),
    Pow(Box<QExpr>, IntExpr),
    QInt(IntExpr),
    QBinom(IntExpr, IntExpr),
    QTrinom(IntExpr, IntExpr),
    Cyclo(IntExpr),
    Subst(Box<QExpr>, IntExpr),
    Rn(IntExpr),
}

/// A parsed expression of either sort.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprAst {
    Int(IntExpr),
    Q(QExpr),
}

impl ExprAst {
    pub fn into_q(self) -> QExpr {
        match self {
            ExprAst::Int(e) => QExpr::Scalar(e),
            ExprAst::Q(e) => e,
        }
    }
}

impl fmt::Display for IntExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntExpr::Literal(v) => write!(f, "{v}"),
            IntExpr::N => write!(f, "n"),
            IntExpr::Neg(e) => write!(f, "-({e})"),
            IntExpr::Add(a, b) => write!(f, "({a} + {b})"),
            IntExpr::Sub(a, b) => write!(f, "({a} - {b})"),
            IntExpr::Mul(a, b) => write!(f, "({a} * {b})"),
            IntExpr::Pow(a, b) => write!(f, "({a}^{b})"),
            IntExpr::Trinom(a, b) => write!(f, "trinom({a}, {b})"),
        }
    }
}

impl fmt::Display for QExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QExpr::Scalar(e) => write!(f, "{e}"),
            QExpr::Q => write!(f, "q"),
            QExpr::Neg(e) => write!(f, "-({e})"),
            QExpr::Add(a, b) => write!(f, "({a} + {b})"),
            QExpr::Sub(a, b) => write!(f, "({a} - {b})"),
            QExpr::Mul(a, b) => write!(f, "({a} * {b})"),
            QExpr::Div(a, b) => write!(f, "({a} / {b})"),
            QExpr::Pow(a, b) => write!(f, "({a}^{b})"),
            QExpr::QInt(a) => write!(f, "qint({a})"),
            QExpr::QBinom(a, b) => write!(f, "qbinom({a}, {b})"),
            QExpr::QTrinom(a, b) => write!(f, "qtrinom({a}, {b})"),
            QExpr::Cyclo(a) => write!(f, "cyclo({a})"),
            QExpr::Subst(a, b) => write!(f, "subst({a}, {b})"),
            QExpr::Rn(a) => write!(f, "rn({a})"),
        }
    }
}

impl fmt::Display for ExprAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprAst::Int(e) => write!(f, "{e}"),
            ExprAst::Q(e) => write!(f, "{e}"),
        }
    }
}

fn to_i64(v: &BigInt, what: &str) -> Result<i64> {
    v.to_i64()
        .ok_or_else(|| Error::invalid(format!("{what} {v} out of range")))
}

fn to_arg_u64(v: &BigInt, min: i64, what: &str) -> Result<u64> {
    let v = to_i64(v, what)?;
    if v < min {
        return Err(Error::invalid(format!("{what} must be >= {min}, got {v}")));
    }
    Ok(v as u64)
}

fn eval_int(e: &IntExpr, n: i64) -> Result<BigInt> {
    Ok(match e {
        IntExpr::Literal(v) => v.clone(),
        IntExpr::N => BigInt::from(n),
        IntExpr::Neg(a) => -eval_int(a, n)?,
        IntExpr::Add(a, b) => eval_int(a, n)? + eval_int(b, n)?,
        IntExpr::Sub(a, b) => eval_int(a, n)? - eval_int(b, n)?,
        IntExpr::Mul(a, b) => eval_int(a, n)? * eval_int(b, n)?,
        IntExpr::Pow(a, b) => {
            let exp = eval_int(b, n)?;
            if exp.is_negative() {
                return Err(Error::invalid(
                    "negative exponent in an integer context",
                ));
            }
            let exp = exp
                .to_u32()
                .ok_or_else(|| Error::invalid("exponent too large"))?;
            eval_int(a, n)?.pow(exp)
        }
        IntExpr::Trinom(a, b) => {
            let top = to_arg_u64(&eval_int(a, n)?, 0, "trinom argument")?;
            let j = to_i64(&eval_int(b, n)?, "trinom argument")?;
            qseries::trinomial(top, j, qseries::TrinomialMethod::Expand)
        }
    })
}

fn eval_q(e: &QExpr, n: i64) -> Result<RatFun> {
    Ok(match e {
        QExpr::Scalar(a) => RatFun::constant(eval_int(a, n)?),
        QExpr::Q => RatFun::from(crate::poly::IntPoly::q()),
        QExpr::Neg(a) => -&eval_q(a, n)?,
        QExpr::Add(a, b) => &eval_q(a, n)? + &eval_q(b, n)?,
        QExpr::Sub(a, b) => &eval_q(a, n)? - &eval_q(b, n)?,
        QExpr::Mul(a, b) => &eval_q(a, n)? * &eval_q(b, n)?,
        QExpr::Div(a, b) => eval_q(a, n)?.div(&eval_q(b, n)?)?,
        QExpr::Pow(a, b) => {
            let exp = to_i64(&eval_int(b, n)?, "exponent")?;
            eval_q(a, n)?.pow(exp)?
        }
        QExpr::QInt(a) => {
            RatFun::from(qseries::q_int(to_i64(&eval_int(a, n)?, "qint argument")?)?)
        }
        QExpr::QBinom(a, b) => {
            let top = to_arg_u64(&eval_int(a, n)?, 0, "qbinom argument")?;
            let k = to_i64(&eval_int(b, n)?, "qbinom argument")?;
            RatFun::from(qseries::gauss_binom(top, k))
        }
        QExpr::QTrinom(a, b) => {
            let top = to_arg_u64(&eval_int(a, n)?, 0, "qtrinom argument")?;
            let j = to_i64(&eval_int(b, n)?, "qtrinom argument")?;
            RatFun::from(qseries::q_trinomial(top, j))
        }
        QExpr::Cyclo(a) => {
            let m = to_arg_u64(&eval_int(a, n)?, 1, "cyclo argument")?;
            RatFun::from(qseries::cyclotomic(m))
        }
        QExpr::Subst(a, b) => {
            let m = to_arg_u64(&eval_int(b, n)?, 1, "subst exponent")?;
            eval_q(a, n)?.substitute_monomial(m as usize)
        }
        QExpr::Rn(a) => {
            RatFun::from(statements::r_n(to_i64(&eval_int(a, n)?, "rn argument")?)?.value)
        }
    })
}

/// Evaluates a parsed expression at the given n, exactly in ℚ(q).
/// Polynomial results carry denominator 1.
pub fn eval(ast: &ExprAst, n: i64) -> Result<RatFun> {
    match ast {
        ExprAst::Int(e) => Ok(RatFun::constant(eval_int(e, n)?)),
        ExprAst::Q(e) => eval_q(e, n),
    }
}

/// An ad-hoc congruence check: lhs ≡ rhs (mod modulus^power) for every n in
/// an inclusive range. The modulus expression must evaluate to a monic
/// polynomial at each n; where it does not, that n gets an `invalid_modulus`
/// report rather than aborting the run.
#[derive(Clone, Debug)]
pub struct CheckSpec {
    pub lhs: ExprAst,
    pub rhs: ExprAst,
    pub modulus: ExprAst,
    pub power: u32,
    pub range: RangeInclusive<i64>,
}

fn failure_report(n: i64, reason: String, start: Instant) -> VerificationReport {
    VerificationReport {
        statement: "adhoc".to_string(),
        params: [("n".to_string(), n)].into(),
        holds: false,
        reason,
        residual_degree: None,
        residual: None,
        elapsed: start.elapsed(),
    }
}

fn check_point(spec: &CheckSpec, n: i64) -> VerificationReport {
    let start = Instant::now();
    let evaluated = eval(&spec.lhs, n)
        .and_then(|lhs| Ok((lhs, eval(&spec.rhs, n)?)))
        .and_then(|(lhs, rhs)| Ok((lhs, rhs, eval(&spec.modulus, n)?)));
    let (lhs, rhs, modulus) = match evaluated {
        Ok(v) => v,
        Err(e) => return failure_report(n, format!("evaluation_error: {e}"), start),
    };
    let base = match modulus.as_poly() {
        Some(p) if p.is_monic() && p.degree() >= Some(1) => p.clone(),
        _ => return failure_report(n, "invalid_modulus".to_string(), start),
    };
    let m = match Modulus::new(base, spec.power) {
        Ok(m) => m,
        Err(_) => return failure_report(n, "invalid_modulus".to_string(), start),
    };
    statements::finish_congruence("adhoc", &[("n", n)], congruent(&lhs, &rhs, &m), start)
}

/// Runs the check at every n in the range, in parallel, reporting in
/// ascending n.
pub fn run_check(spec: &CheckSpec) -> Result<Vec<VerificationReport>> {
    if spec.range.is_empty() {
        return Err(Error::invalid("empty parameter range"));
    }
    if spec.power < 1 {
        return Err(Error::invalid("modulus power must be >= 1"));
    }
    let points: Vec<i64> = spec.range.clone().collect();
    Ok(points.par_iter().map(|&n| check_point(spec, n)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly;

    fn q_ast(s: &str) -> ExprAst {
        parse(s).unwrap()
    }

    #[test]
    fn parse_structure() {
        // a call with two integer arguments
        let ast = q_ast("qbinom(2*n, n)");
        assert_eq!(
            ast,
            ExprAst::Q(QExpr::QBinom(
                IntExpr::Mul(
                    Box::new(IntExpr::Literal(2.into())),
                    Box::new(IntExpr::N)
                ),
                IntExpr::N
            ))
        );
        // exponents are integer-sorted subtrees
        let ast = q_ast("q^(n^2)");
        assert_eq!(
            ast,
            ExprAst::Q(QExpr::Pow(
                Box::new(QExpr::Q),
                IntExpr::Pow(Box::new(IntExpr::N), Box::new(IntExpr::Literal(2.into())))
            ))
        );
    }

    #[test]
    fn parse_type_errors() {
        // q-valued where an integer is required
        let err = parse("qbinom(q, 1)").unwrap_err();
        assert_eq!(err.offset, 7);
        assert!(err.message.contains("integer-valued"));
        let err = parse("2^q").unwrap_err();
        assert_eq!(err.offset, 2);
    }

    #[test]
    fn parse_syntax_errors() {
        assert!(parse("").is_err());
        let err = parse("qbinom(1").unwrap_err();
        assert_eq!(err.offset, 8);
        let err = parse("1 + $").unwrap_err();
        assert_eq!(err.offset, 4);
        let err = parse("foo(1)").unwrap_err();
        assert!(err.message.contains("unknown"));
        let err = parse("1 2").unwrap_err();
        assert!(err.message.contains("end of input"));
    }

    #[test]
    fn precedence() {
        // ^ binds tighter than unary minus: -q^2 = -(q^2)
        let a = eval(&q_ast("-q^2"), 0).unwrap();
        let b = eval(&q_ast("-(q^2)"), 0).unwrap();
        assert_eq!(a, b);
        // right associativity: 2^3^2 = 2^9 = 512
        let v = eval(&q_ast("2^3^2"), 0).unwrap();
        assert_eq!(v, RatFun::constant(512));
        // * over +
        let v = eval(&q_ast("1 + 2*3"), 0).unwrap();
        assert_eq!(v, RatFun::constant(7));
    }

    #[test]
    fn eval_examples() {
        let one_plus = IntPoly::from_coeffs(&[1, 1, 1]);
        assert_eq!(eval(&q_ast("qint(3)"), 17).unwrap(), RatFun::from(one_plus.clone()));
        assert_eq!(eval(&q_ast("qtrinom(2, 0)"), 3).unwrap(), RatFun::from(one_plus));
        // Laurent collapse: q^(0-2) * q^3 = q
        assert_eq!(
            eval(&q_ast("q^(0-2) * q^3"), 1).unwrap(),
            RatFun::from(IntPoly::q())
        );
        // trinom is integer-valued and can sit in exponents
        assert_eq!(
            eval(&q_ast("q^trinom(2, 0)"), 0).unwrap(),
            RatFun::from(IntPoly::monomial(1, 3))
        );
        assert_eq!(
            eval(&q_ast("rn(2)"), 0).unwrap(),
            RatFun::from(IntPoly::from_coeffs(&[0, -1]))
        );
    }

    #[test]
    fn eval_precondition_errors() {
        assert!(eval(&q_ast("qint(0)"), 5).is_err());
        assert!(eval(&q_ast("qint(n)"), 0).is_err());
        assert!(eval(&q_ast("cyclo(0)"), 1).is_err());
        assert!(eval(&q_ast("1/(q - q)"), 1).is_err());
        assert!(eval(&q_ast("(q - q)^(0 - 1)"), 1).is_err());
        assert!(eval(&q_ast("2^(0-1)"), 1).is_err());
    }

    #[test]
    fn round_trip_through_display() {
        for src in [
            "qbinom(2*n, n)",
            "q^(n^2)",
            "-q^2 + 3*q - 1",
            "subst(qbinom(2, 1), n^2) / (1 - q^n)",
            "trinom(n, 0) * q - rn(n)",
        ] {
            let once = parse(src).unwrap();
            let twice = parse(&once.to_string()).unwrap();
            assert_eq!(once, twice, "{src}");
        }
    }

    #[test]
    fn canonical_poly_strings_reparse() {
        let polys = [
            IntPoly::from_coeffs(&[-1, 2, 0, 1]),
            IntPoly::from_coeffs(&[0, 0, -7]),
            IntPoly::zero(),
            IntPoly::from_coeffs(&[1, -2, 1]),
        ];
        for p in polys {
            let ast = parse(&p.to_string()).unwrap();
            assert_eq!(eval(&ast, 0).unwrap(), RatFun::from(p));
        }
    }

    #[test]
    fn run_check_basics() {
        // lhs = rhs holds for every n and any valid monic modulus
        let spec = CheckSpec {
            lhs: q_ast("qbinom(2*n, n)"),
            rhs: q_ast("qbinom(2*n, n)"),
            modulus: q_ast("cyclo(n)"),
            power: 2,
            range: 1..=8,
        };
        let reports = run_check(&spec).unwrap();
        assert_eq!(reports.len(), 8);
        assert!(reports.iter().all(|r| r.holds));

        // q ≡ 1 mod Φ_2 fails with residual degree 0
        let spec = CheckSpec {
            lhs: q_ast("q"),
            rhs: q_ast("1"),
            modulus: q_ast("cyclo(2)"),
            power: 1,
            range: 2..=2,
        };
        let reports = run_check(&spec).unwrap();
        assert!(!reports[0].holds);
        assert_eq!(reports[0].residual_degree, Some(0));

        // a non-monic modulus is a per-n verdict, not a crash
        let spec = CheckSpec {
            lhs: q_ast("q"),
            rhs: q_ast("q"),
            modulus: q_ast("2*cyclo(n)"),
            power: 1,
            range: 1..=3,
        };
        let reports = run_check(&spec).unwrap();
        assert!(reports.iter().all(|r| r.reason == "invalid_modulus"));

        // evaluation errors are per-n verdicts too
        let spec = CheckSpec {
            lhs: q_ast("qint(n)"),
            rhs: q_ast("qint(n)"),
            modulus: q_ast("cyclo(2)"),
            power: 1,
            range: 0..=1,
        };
        let reports = run_check(&spec).unwrap();
        assert!(reports[0].reason.starts_with("evaluation_error"));
        assert!(reports[1].holds);

        let empty = CheckSpec {
            lhs: q_ast("q"),
            rhs: q_ast("q"),
            modulus: q_ast("cyclo(n)"),
            power: 1,
            range: 3..=2,
        };
        assert!(run_check(&empty).is_err());
    }

    #[test]
    fn run_check_c5_instance() {
        let spec = CheckSpec {
            lhs: q_ast("qbinom(2*n, n)"),
            rhs: q_ast("2 - n*(1 - q^n)"),
            modulus: q_ast("cyclo(n)"),
            power: 2,
            range: 1..=12,
        };
        let reports = run_check(&spec).unwrap();
        assert!(reports.iter().all(|r| r.holds));
    }
}
