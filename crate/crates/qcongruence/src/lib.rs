//! Exact symbolic verification of q-congruences modulo powers of cyclotomic
//! polynomials.
//!
//! The building blocks are dense integer polynomials ([`IntPoly`]) and
//! canonical rational functions over ℚ ([`RatFun`]). On top of those,
//! [`qseries`] constructs q-integers, Gaussian binomials, cyclotomic
//! polynomials, trinomial and Andrews–Baxter q-trinomial coefficients, and
//! Euler numbers; [`congruence`] defines reduction and the
//! divisible/coprime congruence verdict; [`statements`] packages the named
//! divisibility results (two q-trinomial theorems, their supporting lemmas
//! and proof-step congruences, and the classical integer congruences of
//! Babbage, Wolstenholme and Sun) as parameterized checks producing
//! machine-readable reports; and [`expr`] provides a small typed expression
//! language for ad-hoc checks from the command line.
//!
//! Everything is exact: arbitrary-precision integers throughout, no
//! floating point, no truncation.
//!
//! ```
//! use qcongruence::{congruence, qseries, RatFun};
//!
//! // [5 2] ≡ q^3 (mod [3]_q²)
//! let lhs = RatFun::from(qseries::gauss_binom(5, 2));
//! let rhs = RatFun::from(qcongruence::IntPoly::monomial(1, 3));
//! let m = congruence::Modulus::q_int_power(3, 2).unwrap();
//! assert!(congruence::congruent(&lhs, &rhs, &m).holds);
//! ```
//!
//! Runnable examples under `examples/` walk through each capability; the
//! thin `qcongruence` binary exposes the same machinery as `verify`,
//! `check`, and `eval` subcommands.

pub mod cli;
pub mod congruence;
pub mod error;
pub mod expr;
pub mod poly;
pub mod qseries;
pub mod ratfun;
pub mod statements;

pub use congruence::{congruent, reduce_mod, CongruenceReason, CongruenceResult, Modulus};
pub use error::Error;
pub use poly::IntPoly;
pub use ratfun::RatFun;
pub use statements::{run_suite, StatementId, SuiteParams, VerificationReport};
