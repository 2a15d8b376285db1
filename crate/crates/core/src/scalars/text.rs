//! Text syntax for scalars.
//!
//! Laurent polynomials print in ascending exponent order (`-1 + 2*q^3`,
//! `q^-1 + q`); proper fractions print as `(num)/(den)`. The parser
//! accepts integers, `q`, `+ - * /`, `^` with a signed integer exponent,
//! and parentheses, so every printed value parses back to itself.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{LaurentPoly, RatFunc};
use crate::error::{Error, Result};

fn write_term(f: &mut fmt::Formatter<'_>, exp: i64, mag: &BigInt) -> fmt::Result {
    if exp == 0 {
        return write!(f, "{mag}");
    }
    if !mag.is_one() {
        write!(f, "{mag}*")?;
    }
    if exp == 1 {
        write!(f, "q")
    } else {
        write!(f, "q^{exp}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exp, c)) in self.terms().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            write_term(f, exp, &c.abs())?;
        }
        Ok(())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            write!(f, "{}", self.numerator())
        } else {
            write!(f, "({})/({})", self.numerator(), self.denominator())
        }
    }
}

impl RatFunc {
    /// True when the printed form needs parentheses to act as a left factor.
    /// Fractions print as `(num)/(den)` and bind like a product already.
    pub fn needs_parens(&self) -> bool {
        self.is_laurent() && self.numerator().terms().count() > 1
    }
}

struct ScalarParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> ScalarParser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().expect("ascii digits"))
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.power()?;
        loop {
            if self.eat(b'*') {
                acc = acc * self.power()?;
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                let d = self.power()?;
                acc = acc.checked_div(&d).map_err(|_| Error::Parse {
                    offset: at,
                    message: "division by zero".into(),
                })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let neg = self.eat(b'-');
        let at = self.pos;
        let e = self.integer()?;
        let e: i64 = e.try_into().map_err(|_| Error::Parse {
            offset: at,
            message: "exponent too large".into(),
        })?;
        base.pow(if neg { -e } else { e }).map_err(|_| Error::Parse {
            offset: at,
            message: "negative power of zero".into(),
        })
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(RatFunc::q_pow(1))
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected `)`");
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => Ok(RatFunc::integer(self.integer()?)),
            Some(_) => self.err("unexpected character"),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses the scalar syntax described in the module docs.
pub fn parse_scalar(src: &str) -> Result<RatFunc> {
    let mut p = ScalarParser {
        src: src.as_bytes(),
        pos: 0,
    };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}

impl FromStr for RatFunc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_scalar(s)
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v = parse_scalar(s)?;
        v.as_laurent().cloned().ok_or(Error::Parse {
            offset: 0,
            message: "not a Laurent polynomial".into(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printing() {
        let p = LaurentPoly::from_terms([(-1, 1), (0, -2), (3, 5)]);
        assert_eq!(p.to_string(), "q^-1 - 2 + 5*q^3");
        assert_eq!(LaurentPoly::from_terms([(1, -1)]).to_string(), "-q");
        let r = RatFunc::new(LaurentPoly::q_pow(1), LaurentPoly::from_terms([(0, 1), (2, 1)])).unwrap();
        assert_eq!(r.to_string(), "(q)/(1 + q^2)");
        assert_eq!(RatFunc::zero().to_string(), "0");
    }

    #[test]
    fn parsing() {
        let r: RatFunc = "(q)/(1 + q^2)".parse().unwrap();
        assert_eq!(r.to_string(), "(q)/(1 + q^2)");
        let s: RatFunc = "q^-1 - 2 + 5*q^3".parse().unwrap();
        assert_eq!(s, LaurentPoly::from_terms([(-1, 1), (0, -2), (3, 5)]).into());
        let t: RatFunc = "(q^2 - 1)/(q - 1)".parse().unwrap();
        assert_eq!(t.to_string(), "1 + q");
    }

    #[test]
    fn parse_errors_carry_offsets() {
        match "1 + ".parse::<RatFunc>() {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("unexpected {other:?}"),
        }
        match "1/0".parse::<RatFunc>() {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
    }
}
