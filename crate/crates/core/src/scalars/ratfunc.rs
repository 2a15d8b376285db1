//! The field `Q(q)`, represented by reduced quotients of Laurent polynomials.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{content, poly_div_exact, poly_gcd, LaurentPoly};
use crate::error::{Error, Result};

/// An element of `Q(q)` in canonical form.
///
/// The denominator is an ordinary polynomial with nonzero constant term and
/// positive leading coefficient, numerator and denominator are coprime in
/// `Q[q]`, and the combined integer content is 1. Zero is `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// The four field operations, for callers that select one at runtime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Applies `op` to `a` and `b`; division by zero is an error.
pub fn arith(a: &RatFunc, b: &RatFunc, op: ArithOp) -> Result<RatFunc> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn integer(c: impl Into<BigInt>) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::from_laurent(LaurentPoly::q_pow(exp))
    }

    pub fn from_laurent(num: LaurentPoly) -> Self {
        RatFunc {
            num,
            den: LaurentPoly::one(),
        }
    }

    /// The rational number `n/d`.
    pub fn fraction(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        Self::new(LaurentPoly::constant(n), LaurentPoly::constant(d))
    }

    /// `num / den`, reduced to canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return Self::from_laurent(num);
        }
        let (ne, n) = num.split();
        let (de, d) = den.split();
        let (mut n, mut d) = if d.len() == 1 || n.len() == 1 {
            (n.to_vec(), d.to_vec())
        } else {
            let g = poly_gcd(n, d);
            if g.len() == 1 {
                (n.to_vec(), d.to_vec())
            } else {
                (
                    poly_div_exact(n, &g).expect("gcd divides numerator"),
                    poly_div_exact(d, &g).expect("gcd divides denominator"),
                )
            }
        };
        let c = content(&n).gcd(&content(&d));
        let c = if d.last().unwrap().is_negative() { -c } else { c };
        if !c.is_one() {
            for x in n.iter_mut().chain(d.iter_mut()) {
                *x = &*x / &c;
            }
        }
        RatFunc {
            num: LaurentPoly::from_poly(ne - de, n),
            den: LaurentPoly::from_poly(0, d),
        }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// True when the value lies in `Z[q, q^-1]`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.is_laurent().then_some(&self.num)
    }

    /// True when the value is a rational number (no genuine `q`-dependence).
    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The value as a rational number, when it is constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_constant()
            .then(|| BigRational::new(self.num.coeff(0), self.den.coeff(0)))
    }

    /// Multiplies by `q^k`. Cheap: canonical form is preserved by a shift.
    pub fn mul_q_pow(&self, k: i64) -> Self {
        RatFunc {
            num: self.num.clone().shifted(k),
            den: self.den.clone(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// The substitution `q -> q^-1`.
    pub fn substitute_inverse(&self) -> Self {
        Self::reduce(self.num.substitute_inverse(), self.den.substitute_inverse())
    }

    /// Evaluates at a rational value of `q`. A debugging aid; fails at
    /// poles and at `q = 0` when negative powers are present.
    pub fn specialize(&self, q: &BigRational) -> Result<BigRational> {
        let eval = |p: &LaurentPoly| -> Result<BigRational> {
            let mut acc = BigRational::zero();
            for (e, c) in p.terms() {
                if e < 0 && q.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                let qe = if e < 0 {
                    q.recip().pow(-e as i32)
                } else {
                    q.pow(e as i32)
                };
                acc += qe * BigRational::from_integer(c.clone());
            }
            Ok(acc)
        };
        let d = eval(&self.den)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(eval(&self.num)? / d)
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent(p)
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        Self::integer(c)
    }
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;

    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFunc::from_laurent(&self.num + &rhs.num);
            }
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::reduce(num, &self.den * &rhs.den)
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;

    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;

    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;

    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_laurent(&self.num * &rhs.num);
        }
        RatFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on a zero divisor; use [`RatFunc::checked_div`] to get an error.
impl Div<&RatFunc> for &RatFunc {
    type Output = RatFunc;

    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero in Q(q)")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
        impl $tr<RatFunc> for &RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&RatFunc> for RatFunc {
    fn mul_assign(&mut self, rhs: &RatFunc) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for RatFunc {
    fn product<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::one(), |acc, x| acc * x)
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> RatFunc {
        RatFunc::from_laurent(LaurentPoly::from_terms(terms.iter().copied()))
    }

    #[test]
    fn spec_arithmetic_examples() {
        let a = lp(&[(0, 1), (1, 1)]);
        let b = lp(&[(0, 1), (1, -1)]);
        assert_eq!(&a * &b, lp(&[(0, 1), (2, -1)]));
        assert!((RatFunc::q_pow(-1) * RatFunc::q_pow(1)).is_one());
        let q2m1 = lp(&[(0, -1), (2, 1)]);
        let qm1 = lp(&[(0, -1), (1, 1)]);
        let quot = q2m1.checked_div(&qm1).unwrap();
        assert_eq!(quot, lp(&[(0, 1), (1, 1)]));
        assert!(quot.is_laurent());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(RatFunc::one().checked_div(&RatFunc::zero()), Err(Error::DivisionByZero));
        assert_eq!(
            arith(&RatFunc::one(), &RatFunc::zero(), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            RatFunc::new(LaurentPoly::one(), LaurentPoly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn canonical_denominator() {
        // q / (-2q - 2q^3) = -1 / (2 + 2q^2) -> numerator -1, denominator 2 + 2q^2
        let x = RatFunc::new(LaurentPoly::q_pow(1), LaurentPoly::from_terms([(1, -2), (3, -2)])).unwrap();
        assert_eq!(x.numerator(), &LaurentPoly::constant(-1));
        assert_eq!(x.denominator(), &LaurentPoly::from_terms([(0, 2), (2, 2)]));
        assert!(!x.is_laurent());
        // 2/4 = 1/2
        assert_eq!(RatFunc::fraction(2, 4).unwrap(), RatFunc::fraction(-1, -2).unwrap());
    }

    #[test]
    fn specialization() {
        let x = lp(&[(-1, 1), (1, 1)]);
        let two = BigRational::from_integer(2.into());
        assert_eq!(x.specialize(&two).unwrap(), BigRational::new(5.into(), 2.into()));
        let pole = RatFunc::new(LaurentPoly::one(), LaurentPoly::from_terms([(0, -1), (1, 1)])).unwrap();
        assert_eq!(pole.specialize(&BigRational::one()), Err(Error::DivisionByZero));
    }
}
