//! Text grammar for polynomials: `3*x^2*y - 1/2*z^5`.
//!
//! The `*` between a coefficient and a monomial (and between variable powers)
//! is optional; `^` marks exponents; variables are the ring's own names.
//! Printing and parsing round-trip exactly.

use std::sync::Arc;

use num::BigInt;

use crate::arith::field::Field;
use crate::arith::monomial::Monomial;
use crate::arith::poly::{Polynomial, Ring};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&ch) = chars.peek() {
        match ch {
            c if c.is_whitespace() => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '/' => {
                chars.next();
                out.push(Token::Slash);
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Int(s.parse().expect("digits")));
            }
            c if c.is_ascii_alphabetic() => {
                let mut s = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' {
                        s.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(s));
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    ring: &'a Arc<Ring<F>>,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a, F: Field> Parser<'a, F> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect_int(&mut self, what: &str) -> Result<BigInt> {
        match self.next() {
            Some(Token::Int(n)) => Ok(n),
            other => Err(Error::Parse(format!("expected {what}, found {other:?}"))),
        }
    }

    fn parse(&mut self) -> Result<Polynomial<F>> {
        let mut acc = Polynomial::zero(self.ring);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if first => break,
                None => return Err(Error::Parse("trailing operator".into())),
                Some(Token::Plus) => {
                    self.next();
                    1
                }
                Some(Token::Minus) => {
                    self.next();
                    -1
                }
                Some(_) if first => 1,
                Some(t) => {
                    return Err(Error::Parse(format!("expected + or -, found {t:?}")))
                }
            };
            let term = self.parse_term(sign)?;
            acc = acc.add(&term);
            first = false;
            if self.peek().is_none() {
                break;
            }
        }
        if first {
            return Err(Error::Parse("empty input".into()));
        }
        Ok(acc)
    }

    fn parse_term(&mut self, sign: i64) -> Result<Polynomial<F>> {
        let field = self.ring.field().clone();
        // optional leading coefficient, possibly a fraction
        let mut coeff = field.from_integer(sign);
        let mut saw_factor = false;
        if let Some(Token::Int(_)) = self.peek() {
            let num = self.expect_int("integer")?;
            let den = if self.peek() == Some(&Token::Slash) {
                self.next();
                self.expect_int("denominator")?
            } else {
                BigInt::from(1)
            };
            let c = field.from_ratio(&num, &den)?;
            coeff = field.mul(&coeff, &c);
            saw_factor = true;
            if self.peek() == Some(&Token::Star) {
                self.next();
            }
        }
        let mut exps = vec![0u32; self.ring.nvars()];
        loop {
            match self.peek() {
                Some(Token::Ident(name)) => {
                    let name = name.clone();
                    self.next();
                    let idx = self.ring.var_index(&name).ok_or_else(|| {
                        Error::Parse(format!("unknown variable {name:?}"))
                    })?;
                    let e: u32 = if self.peek() == Some(&Token::Caret) {
                        self.next();
                        let n = self.expect_int("exponent")?;
                        u32::try_from(n).map_err(|_| {
                            Error::Parse("exponent out of range".into())
                        })?
                    } else {
                        1
                    };
                    exps[idx] = exps[idx]
                        .checked_add(e)
                        .ok_or_else(|| Error::Parse("exponent overflow".into()))?;
                    saw_factor = true;
                    if self.peek() == Some(&Token::Star) {
                        self.next();
                    }
                }
                _ => break,
            }
        }
        if !saw_factor {
            return Err(Error::Parse("expected a term".into()));
        }
        Ok(Polynomial::from_monomial(
            self.ring,
            Monomial::new(exps),
            coeff,
        ))
    }
}

impl<F: Field> Polynomial<F> {
    /// Parse the textual form of a polynomial in `ring`.
    pub fn parse(ring: &Arc<Ring<F>>, src: &str) -> Result<Self> {
        let tokens = tokenize(src)?;
        let mut parser = Parser {
            ring,
            tokens,
            pos: 0,
        };
        parser.parse()
    }
}

impl<F: Field> Ring<F> {
    /// Convenience parser that panics on malformed input; test and fixture use.
    pub fn poly(self: &Arc<Self>, src: &str) -> Polynomial<F> {
        Polynomial::parse(self, src).expect("malformed polynomial literal")
    }

    pub fn polys(self: &Arc<Self>, srcs: &[&str]) -> Vec<Polynomial<F>> {
        srcs.iter().map(|s| self.poly(s)).collect()
    }
}

#[cfg(test)]
mod tests {
    use crate::arith::field::{PrimeField, Rationals};
    use crate::arith::poly::{Polynomial, Ring};

    #[test]
    fn parse_basics() {
        let r = Ring::xyz(Rationals);
        let f = r.poly("3*x^2*y - 1/2*z^5");
        assert_eq!(f.num_terms(), 2);
        // canonical print is descending degrevlex; parsing it back is exact
        assert_eq!(f.to_string(), "-1/2*z^5 + 3*x^2*y");
        assert_eq!(r.poly(&f.to_string()), f);
        assert_eq!(r.poly("3x^2y - 1/2z^5"), f);
        assert_eq!(r.poly("x*x*x"), r.poly("x^3"));
        assert_eq!(r.poly("x - x"), Polynomial::zero(&r));
        assert_eq!(r.poly("-2"), Polynomial::constant(&r, Rationals.from_integer(-2)));
    }

    #[test]
    fn parse_rejects_garbage() {
        let r = Ring::xyz(Rationals);
        assert!(Polynomial::parse(&r, "").is_err());
        assert!(Polynomial::parse(&r, "w + 1").is_err());
        assert!(Polynomial::parse(&r, "x +").is_err());
        assert!(Polynomial::parse(&r, "x & y").is_err());
    }

    #[test]
    fn roundtrip_over_prime_field() {
        let f = PrimeField::new(32003).unwrap();
        let r = Ring::xyz(f);
        for src in ["x^3 - y*z", "-x + 16000*y^2", "1/2*x - z"] {
            let p = r.poly(src);
            let back = r.poly(&p.to_string());
            assert_eq!(p, back, "round-trip through {src}");
        }
    }

    #[test]
    fn generic_variables() {
        let r = Ring::new(Rationals, (0..11).map(|i| format!("v{i}")).collect()).unwrap();
        let p = r.poly("v0*v10^2 - 4*v3");
        assert_eq!(r.poly(&p.to_string()), p);
    }

    use crate::arith::field::Field;
}
