//! Constructors for the named q-series objects: q-integers, Gaussian
//! binomials, cyclotomic polynomials, trinomial and q-trinomial
//! coefficients, and Euler numbers.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// [n]_q = (1 - q^n)/(1 - q) = 1 + q + … + q^(n-1).
pub fn q_int(n: i64) -> Result<IntPoly> {
    if n < 1 {
        return Err(Error::invalid(format!("q_int requires n >= 1, got {n}")));
    }
    Ok(IntPoly::new(vec![BigInt::one(); n as usize]))
}

/// The Gaussian binomial coefficient as a polynomial in q.
///
/// Out-of-range k (k < 0 or k > n) yields the zero polynomial, mirroring the
/// "otherwise" clause of the definition so that summation loops stay uniform.
///
/// Built by the product formula with interleaved exact divisions: every
/// partial product is itself a Gaussian binomial, so dividing by (1 - q^i)
/// as soon as the factor (1 - q^(n-k+i)) is multiplied in keeps intermediate
/// degrees minimal.
pub fn gauss_binom(n: u64, k: i64) -> IntPoly {
    if k < 0 || k as u64 > n {
        return IntPoly::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut out = IntPoly::one();
    for i in 1..=k {
        out = &out * &IntPoly::one_minus_q((n - k + i) as usize);
        out = out
            .exact_div(&IntPoly::one_minus_q(i as usize))
            .expect("every partial product is a Gaussian binomial");
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

static CYCLOTOMIC_MEMO: OnceLock<RwLock<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();

/// The n-th cyclotomic polynomial Φ_n(q): monic, integer coefficients,
/// degree φ(n).
///
/// Computed as (q^n - 1) divided exactly by Φ_d(q) over every proper divisor
/// d of n, with a process-wide memo table so suite runs never recompute an
/// entry. The table supports concurrent readers with exclusive insertion.
pub fn cyclotomic(n: u64) -> IntPoly {
    cyclotomic_arc(n).as_ref().clone()
}

pub(crate) fn cyclotomic_arc(n: u64) -> Arc<IntPoly> {
    assert!(n >= 1, "cyclotomic requires n >= 1");
    let memo = CYCLOTOMIC_MEMO.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = memo.read().unwrap().get(&n) {
        return p.clone();
    }
    // q^n - 1
    let mut result = -&IntPoly::one_minus_q(n as usize);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d = cyclotomic_arc(d);
        result = result
            .exact_div(&phi_d)
            .expect("cyclotomic factors divide q^n - 1 exactly");
    }
    let arc = Arc::new(result);
    memo.write()
        .unwrap()
        .entry(n)
        .or_insert_with(|| arc.clone())
        .clone()
}

/// The binomial coefficient C(n, k) as an arbitrary-precision integer;
/// zero outside 0 <= k <= n.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut out = BigInt::one();
    for i in 1..=k {
        out = out * BigInt::from(n - k + i) / BigInt::from(i);
    }
    out
}

/// How to evaluate a trinomial coefficient; the three routes agree and
/// cross-check one another.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrinomialMethod {
    /// Read the coefficient of x^(j+n) straight out of (1 + x + x²)^n.
    Expand,
    /// Σ_k C(n,k)·C(n-k, k+j).
    Sum1,
    /// Σ_k (-1)^k·C(n,k)·C(2n-2k, n-j-k).
    Sum2,
}

/// The trinomial coefficient: the coefficient of x^(j+n) in (1 + x + x²)^n.
pub fn trinomial(n: u64, j: i64, method: TrinomialMethod) -> BigInt {
    if j.unsigned_abs() > n {
        return BigInt::zero();
    }
    match method {
        TrinomialMethod::Expand => {
            let mut row = vec![BigInt::one()];
            for _ in 0..n {
                let mut next = vec![BigInt::zero(); row.len() + 2];
                for (i, c) in row.iter().enumerate() {
                    next[i] += c;
                    next[i + 1] += c;
                    next[i + 2] += c;
                }
                row = next;
            }
            row[(j + n as i64) as usize].clone()
        }
        TrinomialMethod::Sum1 => {
            let mut sum = BigInt::zero();
            for k in 0..=n {
                sum += binomial(n, k as i64) * binomial(n - k, k as i64 + j);
            }
            sum
        }
        TrinomialMethod::Sum2 => {
            let mut sum = BigInt::zero();
            for k in 0..=n {
                let t = binomial(n, k as i64) * binomial(2 * n - 2 * k, n as i64 - j - k as i64);
                if k % 2 == 0 {
                    sum += t;
                } else {
                    sum -= t;
                }
            }
            sum
        }
    }
}

/// The q-trinomial coefficient ((n j))_q = Σ_k q^(k(k+j)) [n k][n-k k+j].
///
/// Summed by a term-ratio chain: consecutive terms differ by the sparse
/// factor q^(2k-1+j)·(1-q^(n-2k-j+2))(1-q^(n-2k-j+1)) / ((1-q^k)(1-q^(k+j))),
/// so each step is a sparse multiply plus an exact sparse division instead
/// of a full q-binomial product. Empty sums give the zero polynomial.
pub fn q_trinomial(n: u64, j: i64) -> IntPoly {
    let n_i = n as i64;
    if j.unsigned_abs() > n {
        return IntPoly::zero();
    }
    let k_start = 0.max(-j);
    let k_end = (n_i - j).div_euclid(2);
    if k_start > k_end {
        return IntPoly::zero();
    }
    let mut term = gauss_binom(n, k_start) * gauss_binom(n - k_start as u64, k_start + j);
    term = term.shift((k_start * (k_start + j)) as usize);
    let mut sum = term.clone();
    for k in (k_start + 1)..=k_end {
        let a = (n_i - 2 * k - j + 2) as usize;
        let u = (&IntPoly::one_minus_q(a) * &IntPoly::one_minus_q(a - 1))
            .shift((2 * k - 1 + j) as usize);
        let v = &IntPoly::one_minus_q(k as usize) * &IntPoly::one_minus_q((k + j) as usize);
        term = (&term * &u)
            .exact_div(&v)
            .expect("consecutive q-trinomial terms have a polynomial ratio");
        sum += &term;
    }
    sum
}

/// The n-th Euler number: E_0 = 1, odd indices vanish, and the even-index
/// values satisfy Σ_{i=0}^{m} C(2m, 2i)·E_{2i} = 0 for m >= 1.
pub fn euler_number(n: u64) -> BigInt {
    if n % 2 == 1 {
        return BigInt::zero();
    }
    let m_max = n / 2;
    let mut evens = vec![BigInt::one()];
    for m in 1..=m_max {
        let mut acc = BigInt::zero();
        for (i, e) in evens.iter().enumerate() {
            acc += binomial(2 * m, 2 * i as i64) * e;
        }
        evens.push(-acc);
    }
    evens[m_max as usize].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(coeffs)
    }

    #[test]
    fn q_int_basic() {
        assert_eq!(q_int(1).unwrap(), IntPoly::one());
        assert_eq!(q_int(3).unwrap(), p(&[1, 1, 1]));
        assert!(q_int(0).is_err());
        assert!(q_int(-2).is_err());
        for n in 1..=50 {
            assert_eq!(q_int(n).unwrap().eval_at_one(), BigInt::from(n));
        }
    }

    #[test]
    fn gauss_binom_basic() {
        assert_eq!(gauss_binom(7, 0), IntPoly::one());
        assert_eq!(gauss_binom(2, 1), p(&[1, 1]));
        // [4 2] = 1+q+2q^2+q^3+q^4, matching the Pascal recurrence
        assert_eq!(gauss_binom(4, 2), p(&[1, 1, 2, 1, 1]));
        assert_eq!(gauss_binom(5, 2), p(&[1, 1, 2, 2, 2, 1, 1]));
        assert_eq!(gauss_binom(6, 3), p(&[1, 1, 2, 3, 3, 3, 3, 2, 1, 1]));
        // out-of-range k is the zero polynomial
        assert!(gauss_binom(3, -1).is_zero());
        assert!(gauss_binom(3, 4).is_zero());
    }

    #[test]
    fn gauss_binom_symmetry_and_degree() {
        for n in 0..=12u64 {
            for k in 0..=n {
                let b = gauss_binom(n, k as i64);
                assert_eq!(b, gauss_binom(n, (n - k) as i64));
                assert_eq!(b.degree(), Some((k * (n - k)) as usize));
                assert!(b.coeffs().iter().all(|c| !c.is_negative()));
            }
        }
        // q = 1 recovers the ordinary binomial
        assert_eq!(gauss_binom(4, 2).eval_at_one(), BigInt::from(6));
    }

    #[test]
    fn cyclotomic_basic() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(3), p(&[1, 1, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
        // the first index with a coefficient outside {-1, 0, 1}
        assert_eq!(cyclotomic(105).coeff(7), BigInt::from(-2));
    }

    #[test]
    fn cyclotomic_product_is_q_n_minus_one() {
        for n in 1..=40u64 {
            let mut prod = IntPoly::one();
            for d in divisors(n) {
                prod = &prod * &cyclotomic(d);
            }
            assert_eq!(prod, -&IntPoly::one_minus_q(n as usize), "n = {n}");
        }
    }

    #[test]
    fn trinomial_methods_agree() {
        // middle of (1+x+x^2)^2 = 1+2x+3x^2+2x^3+x^4
        assert_eq!(trinomial(2, 0, TrinomialMethod::Expand), BigInt::from(3));
        assert_eq!(trinomial(1, 0, TrinomialMethod::Expand), BigInt::one());
        for n in 0..=20u64 {
            assert_eq!(trinomial(n, n as i64, TrinomialMethod::Expand), BigInt::one());
        }
        for n in 0..=16u64 {
            for j in -(n as i64)..=(n as i64) {
                let e = trinomial(n, j, TrinomialMethod::Expand);
                assert_eq!(e, trinomial(n, j, TrinomialMethod::Sum1), "n={n} j={j}");
                assert_eq!(e, trinomial(n, j, TrinomialMethod::Sum2), "n={n} j={j}");
                assert_eq!(e, trinomial(n, -j, TrinomialMethod::Expand), "n={n} j={j}");
            }
        }
        assert!(trinomial(3, 4, TrinomialMethod::Expand).is_zero());
    }

    #[test]
    fn q_trinomial_basic() {
        // k=0 contributes 1; the k=1 term carries [0 1] = 0
        assert_eq!(q_trinomial(1, 0), IntPoly::one());
        // 1 + q·[2 1]·[1 1] = 1 + q + q^2
        assert_eq!(q_trinomial(2, 0), p(&[1, 1, 1]));
        assert_eq!(q_trinomial(2, 1), p(&[1, 1]));
        assert_eq!(q_trinomial(4, 0), p(&[1, 1, 2, 3, 4, 3, 3, 1, 1]));
        assert_eq!(q_trinomial(0, 0), IntPoly::one());
        assert!(q_trinomial(3, 4).is_zero());
        assert!(q_trinomial(3, -4).is_zero());
    }

    #[test]
    fn q_trinomial_chain_matches_direct_sum() {
        // the term-ratio chain against the defining sum, built term by term
        for n in 0..=14u64 {
            for j in -(n as i64)..=(n as i64) {
                let mut direct = IntPoly::zero();
                for k in 0..=n {
                    let t = &gauss_binom(n, k as i64) * &gauss_binom(n - k, k as i64 + j);
                    if !t.is_zero() {
                        direct = &direct + &t.shift((k as i64 * (k as i64 + j)) as usize);
                    }
                }
                assert_eq!(q_trinomial(n, j), direct, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn q_trinomial_specializes_at_one() {
        for n in 0..=16u64 {
            for j in -(n as i64)..=(n as i64) {
                assert_eq!(
                    q_trinomial(n, j).eval_at_one(),
                    trinomial(n, j, TrinomialMethod::Expand),
                    "n={n} j={j}"
                );
            }
        }
    }

    #[test]
    fn euler_numbers() {
        assert_eq!(euler_number(0), BigInt::one());
        assert_eq!(euler_number(1), BigInt::zero());
        assert_eq!(euler_number(2), BigInt::from(-1));
        // E_4 from the recurrence with E_0 = 1, E_2 = -1
        assert_eq!(euler_number(4), BigInt::from(5));
        assert_eq!(euler_number(6), BigInt::from(-61));
        assert_eq!(euler_number(8), BigInt::from(1385));
        assert_eq!(euler_number(10), BigInt::from(-50521));
        assert_eq!(euler_number(12), BigInt::from(2702765));
        assert_eq!(euler_number(7), BigInt::zero());
    }

    #[test]
    fn binomial_basic() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(9, 4), BigInt::from(126));
        assert!(binomial(4, -1).is_zero());
        assert!(binomial(4, 5).is_zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }
}
