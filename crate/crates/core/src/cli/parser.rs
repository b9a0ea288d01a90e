//! Polynomial expressions in `x`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := ('+' | '-') unary | factor
//! factor := number power?        -- "15x^2" is 15·x²
//!         | power
//! power  := atom ('^' integer)?
//! atom   := number | 'x' | '(' expr ')'
//! number := integer ('/' integer)?
//! ```

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::Polynomial;

/// Exponents above this are refused rather than expanded.
const MAX_EXPONENT: u32 = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    X,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(src[start..i].parse().expect("digits"))));
                continue;
            }
            b'x' | b'X' => Tok::X,
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = src[i..].chars().next().unwrap();
                let message = if ch.is_alphabetic() {
                    format!("unknown variable {ch:?}; only x is allowed")
                } else {
                    format!("unexpected character {ch:?}")
                };
                return Err(Error::Parse { offset: i, message });
            }
        };
        out.push((i, tok));
        i += 1;
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

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.offset(), message: message.into() })
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.factor(),
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        if matches!(self.peek(), Tok::Int(_)) {
            let c = self.power()?;
            if *self.peek() == Tok::X {
                return Ok(&c * &self.power()?);
            }
            return Ok(c);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            Tok::Int(e) => match e.to_u32().filter(|&e| e <= MAX_EXPONENT) {
                Some(e) => {
                    if *self.peek() == Tok::Slash {
                        return self.error("exponents must be nonnegative integers");
                    }
                    Ok(base.pow(e))
                }
                None => {
                    self.pos -= 1;
                    self.error(format!("exponent larger than {MAX_EXPONENT}"))
                }
            },
            Tok::End => self.error("missing exponent"),
            _ => {
                self.pos -= 1;
                self.error("exponents must be nonnegative integers")
            }
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.bump() {
            Tok::Int(n) => {
                if *self.peek() != Tok::Slash {
                    return Ok(Polynomial::constant(BigRational::from_integer(n)));
                }
                self.bump();
                match self.bump() {
                    Tok::Int(d) if !d.is_zero() => Ok(Polynomial::constant(BigRational::new(n, d))),
                    Tok::Int(_) => {
                        self.pos -= 1;
                        self.error("zero denominator")
                    }
                    Tok::End => self.error("a denominator must be an integer literal"),
                    _ => {
                        self.pos -= 1;
                        self.error("a denominator must be an integer literal")
                    }
                }
            }
            Tok::X => Ok(Polynomial::x()),
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.error("expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => self.error("unexpected end of input"),
            t => {
                self.pos -= 1;
                self.error(format!("unexpected {}", describe(&t)))
            }
        }
    }
}

fn describe(t: &Tok) -> &'static str {
    match t {
        Tok::Int(_) => "number",
        Tok::X => "x",
        Tok::Plus => "'+'",
        Tok::Minus => "'-'",
        Tok::Star => "'*'",
        Tok::Slash => "'/'",
        Tok::Caret => "'^'",
        Tok::LParen => "'('",
        Tok::RParen => "')'",
        Tok::End => "end of input",
    }
}

/// Parses an expression such as `x^3 - 15*x + 22` or `1/3x^2 - (x + 1)^2`.
/// Errors carry the byte offset of the offending token.
pub fn parse_polynomial(src: &str) -> Result<Polynomial> {
    let mut p = Parser { toks: tokenize(src)?, pos: 0 };
    let out = p.expr()?;
    match p.peek() {
        Tok::End => Ok(out),
        Tok::X | Tok::LParen => p.error("implicit multiplication is only allowed after a number"),
        t => {
            let t = describe(t);
            p.error(format!("unexpected {t}"))
        }
    }
}

impl FromStr for Polynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn offset(src: &str) -> usize {
        match parse_polynomial(src) {
            Err(Error::Parse { offset, .. }) => offset,
            other => panic!("{src:?} parsed as {other:?}"),
        }
    }

    #[test]
    fn examples() {
        assert_eq!(parse_polynomial("x^3 - 15*x + 22").unwrap(), Polynomial::from_ints(&[22, -15, 0, 1]));
        assert_eq!(
            parse_polynomial("x^5 - 110*x^3 - 55*x^2 + 2310*x + 979").unwrap(),
            Polynomial::from_ints(&[979, 2310, -55, -110, 0, 1])
        );
        assert_eq!(parse_polynomial("15x").unwrap(), Polynomial::from_ints(&[0, 15]));
        assert_eq!(parse_polynomial("2x^2").unwrap(), Polynomial::from_ints(&[0, 0, 2]));
        assert_eq!(parse_polynomial("-x^2").unwrap(), Polynomial::from_ints(&[0, 0, -1]));
        assert_eq!(parse_polynomial("(x-1)*(x+1)").unwrap(), Polynomial::from_ints(&[-1, 0, 1]));
        assert_eq!(parse_polynomial("2^3").unwrap(), Polynomial::from_ints(&[8]));
        assert_eq!(
            parse_polynomial("1/3*x - 7/27").unwrap().to_string(),
            "1/3*x - 7/27"
        );
        assert_eq!(parse_polynomial(" x ^ 2\t+ 1 ").unwrap(), Polynomial::from_ints(&[1, 0, 1]));
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(offset("x^"), 2);
        assert_eq!(offset("x + y"), 4);
        assert_eq!(offset("x^-1"), 2);
        assert_eq!(offset("x^1/2"), 3);
        assert_eq!(offset("x x"), 2);
        assert_eq!(offset("(x + 1"), 6);
        assert_eq!(offset("1/0"), 2);
        assert_eq!(offset(""), 0);
        assert_eq!(offset("x / 2"), 2);
        assert_eq!(offset("1/"), 2);
        assert_eq!(offset("1/x"), 2);
    }
}
