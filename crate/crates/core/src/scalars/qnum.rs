//! Quantum integers, factorials and Gaussian binomials.

use super::{LaurentPoly, RatFunc};
use crate::error::{Error, Result};

/// `[n]_q = 1 + q + ... + q^(n-1)`, with `[0]_q = 0`.
pub fn q_int(n: i64) -> Result<RatFunc> {
    if n < 0 {
        return Err(Error::NegativeArgument {
            what: "[n]_q",
            value: n,
        });
    }
    Ok(LaurentPoly::from_terms((0..n).map(|e| (e, 1))).into())
}

/// The symmetric quantum integer `[n] = (q^-n - q^n) / (q^-1 - q)`, with
/// `[-n] = (-1)^(n+1) [n]` for negative arguments.
pub fn q_int_sym(n: i64) -> RatFunc {
    if n < 0 {
        let m = -n;
        let v = q_int_sym(m);
        return if m % 2 == 0 { -v } else { v };
    }
    LaurentPoly::from_terms((0..n).map(|j| (1 - n + 2 * j, 1))).into()
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: i64) -> Result<RatFunc> {
    if n < 0 {
        return Err(Error::NegativeArgument {
            what: "[n]_q!",
            value: n,
        });
    }
    (1..=n).map(q_int).product()
}

/// The Gaussian binomial `[n k]_q = [n]_q! / ([k]_q! [n-k]_q!)`.
pub fn q_binomial(n: i64, k: i64) -> Result<RatFunc> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::OutOfRange(format!(
            "q-binomial needs 0 <= k <= n, got n={n}, k={k}"
        )));
    }
    let num = q_factorial(n)?;
    let den = q_factorial(k)? * q_factorial(n - k)?;
    num.checked_div(&den)
}

/// Product of symmetric quantum integers `[1][2]...[n]`.
pub fn q_factorial_sym(n: u32) -> RatFunc {
    (1..=n as i64).map(q_int_sym).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> RatFunc {
        LaurentPoly::from_terms(terms.iter().copied()).into()
    }

    #[test]
    fn q_integers() {
        assert!(q_int(0).unwrap().is_zero());
        assert_eq!(q_int(3).unwrap(), lp(&[(0, 1), (1, 1), (2, 1)]));
        assert!(q_int(-1).is_err());
        assert_eq!(
            q_int(3).unwrap().substitute_inverse(),
            RatFunc::q_pow(-2) * q_int(3).unwrap()
        );
    }

    #[test]
    fn symmetric_integers() {
        assert_eq!(q_int_sym(4), lp(&[(-3, 1), (-1, 1), (1, 1), (3, 1)]));
        assert_eq!(q_int_sym(-3), q_int_sym(3));
        assert_eq!(q_int_sym(-2), -q_int_sym(2));
        assert!(q_int_sym(1).is_one());
        assert!(q_int_sym(0).is_zero());
    }

    #[test]
    fn factorials() {
        assert!(q_factorial(0).unwrap().is_one());
        let expect = lp(&[(0, 1), (1, 1)]) * lp(&[(0, 1), (1, 1), (2, 1)]);
        assert_eq!(q_factorial(3).unwrap(), expect);
        assert_eq!(
            q_factorial(3).unwrap().substitute_inverse(),
            RatFunc::q_pow(-3) * q_factorial(3).unwrap()
        );
        assert!(q_factorial(-2).is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(q_binomial(4, 2).unwrap(), lp(&[(0, 1), (1, 1), (2, 2), (3, 1), (4, 1)]));
        assert!(q_binomial(7, 0).unwrap().is_one());
        assert_eq!(q_binomial(3, 1).unwrap(), q_int(3).unwrap());
        assert!(q_binomial(3, 4).is_err());
        assert!(q_binomial(3, -1).is_err());
    }
}
