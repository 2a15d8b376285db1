//! Expressions over generators and scalars.
//!
//! ```text
//! expr   := ['+' | '-'] term (('+' | '-') term)*
//! term   := factor (('*' | '#' | '/')? factor)*
//! factor := atom ['^' ['-'] int]
//! atom   := int | 'q' | ident [''''] ['[' int (',' int)* ']'] | '(' expr ')'
//! ```
//!
//! A missing operator between factors is a product. Exponents bind
//! tighter than products, products tighter than sums.

use std::fmt;

use num_bigint::BigInt;

use crate::double::{DoubleElement, Generator, GeneratorSet, GeneratorWord, SmashAlgebra};
use crate::error::{Error, Result};
use crate::scalars::RatFunc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Integer(BigInt),
    Q,
    Gen(Generator),
    Neg(Box<Expr>),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
    Quotient(Box<Expr>, Box<Expr>),
    Power(Box<Expr>, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Prime,
    LBrack,
    RBrack,
    Comma,
    Plus,
    Minus,
    Star,
    Hash,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Tok::Int(n) => return write!(f, "`{n}`"),
            Tok::Ident(s) => return write!(f, "`{s}`"),
            Tok::Prime => "`'`",
            Tok::LBrack => "`[`",
            Tok::RBrack => "`]`",
            Tok::Comma => "`,`",
            Tok::Plus => "`+`",
            Tok::Minus => "`-`",
            Tok::Star => "`*`",
            Tok::Hash => "`#`",
            Tok::Slash => "`/`",
            Tok::Caret => "`^`",
            Tok::LParen => "`(`",
            Tok::RParen => "`)`",
            Tok::End => "end of input",
        };
        f.write_str(s)
    }
}

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = j + d.len_utf8();
                chars.next();
            }
            let n: BigInt = src[i..end].parse().expect("digits");
            out.push((i, Tok::Int(n)));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if !(d.is_alphanumeric() || d == '_') {
                    break;
                }
                end = j + d.len_utf8();
                chars.next();
            }
            out.push((i, Tok::Ident(src[i..end].to_string())));
            continue;
        }
        let tok = match c {
            '\'' | '′' => Tok::Prime,
            '[' => Tok::LBrack,
            ']' => Tok::RBrack,
            ',' => Tok::Comma,
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '#' => Tok::Hash,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            other => return Err(err(i, format!("unexpected character {other:?}"))),
        };
        chars.next();
        out.push((i, tok));
    }
    out.push((src.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(err(self.offset(), format!("expected {want}, found {}", self.peek())))
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Tok::Minus => {
                self.bump();
                true
            }
            Tok::Plus => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            terms.push(if negate { Expr::Neg(Box::new(t)) } else { t });
            negate = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            Expr::Sum(terms)
        })
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Tok::Int(_) | Tok::Ident(_) | Tok::LParen)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star | Tok::Hash => {
                    self.bump();
                    let f = self.factor()?;
                    acc = product(acc, f);
                }
                Tok::Slash => {
                    self.bump();
                    let f = self.factor()?;
                    acc = Expr::Quotient(Box::new(acc), Box::new(f));
                }
                _ if self.starts_atom() => {
                    let f = self.factor()?;
                    acc = product(acc, f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let at = self.offset();
        let e = self.int()?;
        let e = i64::try_from(e).map_err(|_| err(at, "exponent out of range"))?;
        Ok(Expr::Power(Box::new(base), if negative { -e } else { e }))
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            other => Err(err(self.offset(), format!("expected an integer, found {other}"))),
        }
    }

    fn signed_int(&mut self) -> Result<i64> {
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let at = self.offset();
        let n = i64::try_from(self.int()?).map_err(|_| err(at, "index out of range"))?;
        Ok(if negative { -n } else { n })
    }

    fn atom(&mut self) -> Result<Expr> {
        let at = self.offset();
        match self.bump() {
            Tok::Int(n) => Ok(Expr::Integer(n)),
            Tok::Ident(name) if name == "q" => Ok(Expr::Q),
            Tok::Ident(name) => {
                let primed = if *self.peek() == Tok::Prime {
                    self.bump();
                    true
                } else {
                    false
                };
                let mut indices = Vec::new();
                if *self.peek() == Tok::LBrack {
                    self.bump();
                    indices.push(self.signed_int()?);
                    while *self.peek() == Tok::Comma {
                        self.bump();
                        indices.push(self.signed_int()?);
                    }
                    self.expect(Tok::RBrack)?;
                }
                Ok(Expr::Gen(Generator::new(name, primed, indices)))
            }
            Tok::LParen => {
                let e = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::End => Err(err(at, "expected a term, found end of input")),
            other => Err(err(at, format!("expected a term, found {other}"))),
        }
    }
}

fn product(acc: Expr, f: Expr) -> Expr {
    match acc {
        Expr::Product(mut v) => {
            v.push(f);
            Expr::Product(v)
        }
        other => Expr::Product(vec![other, f]),
    }
}

/// Parses an expression; errors carry the byte offset of the problem.
pub fn parse_expression(src: &str) -> Result<Expr> {
    let mut p = Parser {
        toks: tokenize(src)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(err(p.offset(), format!("unexpected {}", p.peek())));
    }
    Ok(e)
}

impl Expr {
    /// The product of generator powers this expression spells, if it is one.
    pub fn as_word(&self) -> Option<GeneratorWord> {
        fn letter(e: &Expr, word: GeneratorWord) -> Option<GeneratorWord> {
            match e {
                Expr::Gen(g) => Some(word.push(g.clone(), 1)),
                Expr::Power(b, n) if *n >= 0 => match &**b {
                    Expr::Gen(g) => Some(word.push(g.clone(), *n as u32)),
                    _ => None,
                },
                _ => None,
            }
        }
        match self {
            Expr::Product(fs) => fs.iter().try_fold(GeneratorWord::new(), |w, f| letter(f, w)),
            e => letter(e, GeneratorWord::new()),
        }
    }

    /// Evaluates in the smash product, resolving generators through `gens`.
    pub fn evaluate(&self, engine: &SmashAlgebra, gens: &dyn GeneratorSet) -> Result<DoubleElement> {
        Ok(match self {
            Expr::Integer(n) => engine.scalar(RatFunc::integer(n.clone())),
            Expr::Q => engine.scalar(RatFunc::q_pow(1)),
            Expr::Gen(g) => {
                let u = gens.resolve(g)?;
                engine.smash_multiply(&engine.one(), &u)?
            }
            Expr::Neg(e) => e.evaluate(engine, gens)?.scaled(&RatFunc::integer(-1)),
            Expr::Sum(es) => {
                let mut acc = DoubleElement::zero();
                for e in es {
                    acc = &acc + &e.evaluate(engine, gens)?;
                }
                acc
            }
            Expr::Product(fs) => {
                let mut acc = engine.one();
                for f in fs {
                    acc = engine.smash_multiply(&acc, &f.evaluate(engine, gens)?)?;
                }
                acc
            }
            Expr::Quotient(a, b) => {
                let den = scalar_value(engine, &b.evaluate(engine, gens)?)?;
                a.evaluate(engine, gens)?.scaled(&den.inverse()?)
            }
            Expr::Power(b, n) => {
                let base = b.evaluate(engine, gens)?;
                if *n < 0 {
                    let c = scalar_value(engine, &base)?.pow(*n)?;
                    engine.scalar(c)
                } else {
                    let mut acc = engine.one();
                    for _ in 0..*n {
                        acc = engine.smash_multiply(&acc, &base)?;
                    }
                    acc
                }
            }
        })
    }
}

/// `c` when `u = c·(1#1)`.
fn scalar_value(engine: &SmashAlgebra, u: &DoubleElement) -> Result<RatFunc> {
    let one = (engine.plus().unit(), engine.minus().unit());
    if u.iter().any(|(k, _)| *k != one) {
        return Err(Error::OutOfRange(
            "only scalars can be divided by or raised to negative powers".into(),
        ));
    }
    Ok(u.coefficient(&one.0, &one.1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(src: &str) -> Vec<String> {
        let w = parse_expression(src).unwrap().as_word().unwrap();
        w.tokens
            .iter()
            .flat_map(|t| std::iter::repeat_n(t.generator.to_string(), t.exponent as usize))
            .collect()
    }

    #[test]
    fn words() {
        assert_eq!(letters("d^2 * x"), ["d", "d", "x"]);
        assert_eq!(letters("p'[1,1]*p[1,2]"), ["p'[1,1]", "p[1,2]"]);
        assert_eq!(letters("x d"), ["x", "d"]);
        assert_eq!(letters("x#d"), ["x", "d"]);
        assert!(parse_expression("x + d").unwrap().as_word().is_none());
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        let offset = |src: &str| match parse_expression(src) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("expected a parse error, got {other:?}"),
        };
        assert_eq!(offset("x +"), 3);
        assert_eq!(offset("(x"), 2);
        assert_eq!(offset("p[1,]"), 4);
        assert_eq!(offset("x ) "), 2);
        assert_eq!(offset("x ^ y"), 4);
        assert_eq!(offset("x $"), 2);
    }

    #[test]
    fn precedence() {
        let e = parse_expression("2*x^3 - q").unwrap();
        let Expr::Sum(terms) = e else { panic!("sum expected") };
        assert_eq!(terms.len(), 2);
        assert!(matches!(&terms[0], Expr::Product(f) if matches!(f[1], Expr::Power(_, 3))));
        assert!(matches!(&terms[1], Expr::Neg(_)));
    }
}
