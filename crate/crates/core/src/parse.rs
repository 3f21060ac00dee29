//! Parser for polynomial expressions such as `x2^2 + 3*x1^2 - x2*x0`.
//!
//! Coefficients may be integers, quotients `a/b` (where the ring allows
//! them), parameters `C_{011,020}` / `C[0,1,1|0,2,0]` and the variable `t`
//! of `ZZ[t]`, combined with `+ - * / ^` and parentheses.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::ring::{CoeffRing, ParameterVariable};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Var(usize),
    Param(ParameterVariable),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '/' => {
                out.push(Token::Slash);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '(' => {
                out.push(Token::Open);
                i += 1;
            }
            ')' => {
                out.push(Token::Close);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push(Token::Num(s.parse().expect("digits")));
            }
            'C' if matches!(chars.get(i + 1), Some('_') | Some('[')) => {
                let close = if chars[i + 1] == '_' { '}' } else { ']' };
                let end = chars[i..]
                    .iter()
                    .position(|&d| d == close)
                    .ok_or_else(|| Error::Parse("unterminated parameter".into()))?;
                let s: String = chars[i..=i + end].iter().collect();
                out.push(Token::Param(ParameterVariable::parse(&s)?));
                i += end + 1;
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                match s.strip_prefix('x').map(str::parse::<usize>) {
                    Some(Ok(idx)) => out.push(Token::Var(idx)),
                    _ => out.push(Token::Ident(s)),
                }
            }
            _ => return Err(Error::Parse(format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

/// Either a bare integer (so that `3/4` can become a ring constant) or a
/// polynomial.
enum Value<E> {
    Int(BigInt),
    Poly(Poly<E>),
}

struct Parser<'a, R: CoeffRing> {
    ring: &'a R,
    nvars: usize,
    tokens: Vec<Token>,
    pos: usize,
}

impl<'a, R: CoeffRing> Parser<'a, R> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn to_poly(&self, v: Value<R::Elem>) -> Poly<R::Elem> {
        match v {
            Value::Int(n) => Poly::term(Monomial::one(self.nvars), self.ring.from_bigint(&n)),
            Value::Poly(p) => p,
        }
    }

    fn expr(&mut self) -> Result<Value<R::Elem>> {
        let mut neg = false;
        match self.peek() {
            Some(Token::Minus) => {
                neg = true;
                self.pos += 1;
            }
            Some(Token::Plus) => self.pos += 1,
            _ => {}
        }
        let mut acc = self.term()?;
        if neg {
            acc = self.negate(acc);
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.combine(acc, rhs, false);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = self.combine(acc, rhs, true);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn negate(&self, v: Value<R::Elem>) -> Value<R::Elem> {
        match v {
            Value::Int(n) => Value::Int(-n),
            Value::Poly(p) => Value::Poly(p.neg()),
        }
    }

    fn combine(&self, a: Value<R::Elem>, b: Value<R::Elem>, minus: bool) -> Value<R::Elem> {
        match (a, b) {
            (Value::Int(x), Value::Int(y)) => Value::Int(if minus { x - y } else { x + y }),
            (a, b) => {
                let (a, b) = (self.to_poly(a), self.to_poly(b));
                Value::Poly(if minus { a.sub(&b) } else { a.add(&b) })
            }
        }
    }

    fn term(&mut self) -> Result<Value<R::Elem>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    acc = match (acc, rhs) {
                        (Value::Int(x), Value::Int(y)) => Value::Int(x * y),
                        (a, b) => Value::Poly(self.to_poly(a).mul(&self.to_poly(b))),
                    };
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let rhs = self.factor()?;
                    let Value::Int(d) = rhs else {
                        return Err(Error::Parse("can only divide by an integer".into()));
                    };
                    acc = match acc {
                        Value::Int(n) => Value::Poly(Poly::term(
                            Monomial::one(self.nvars),
                            self.ring.from_ratio(&n, &d)?,
                        )),
                        Value::Poly(p) => {
                            let inv = self.ring.from_ratio(&BigInt::one(), &d)?;
                            Value::Poly(p.scale(&inv))
                        }
                    };
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Value<R::Elem>> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let e = match self.bump() {
            Some(Token::Num(n)) => u32::try_from(n)
                .map_err(|_| Error::Parse("exponent too large".into()))?,
            _ => return Err(Error::Parse("expected an exponent after `^`".into())),
        };
        Ok(match base {
            Value::Int(n) => Value::Int(num_traits::pow(n, e as usize)),
            Value::Poly(p) => {
                let mut acc = Poly::term(Monomial::one(self.nvars), self.ring.one());
                for _ in 0..e {
                    acc = acc.mul(&p);
                }
                Value::Poly(acc)
            }
        })
    }

    fn atom(&mut self) -> Result<Value<R::Elem>> {
        let one = Monomial::one(self.nvars);
        match self.bump() {
            Some(Token::Num(n)) => Ok(Value::Int(n)),
            Some(Token::Var(i)) => {
                if i >= self.nvars {
                    return Err(Error::Parse(format!(
                        "variable x{i} out of range for {} variables",
                        self.nvars
                    )));
                }
                Ok(Value::Poly(Poly::term(
                    Monomial::var(self.nvars, i),
                    self.ring.one(),
                )))
            }
            Some(Token::Param(v)) => {
                let e = self.ring.parameter(&v).ok_or_else(|| {
                    Error::Parse(format!("parameter {v} is not an element of {}", self.ring.descriptor()))
                })?;
                Ok(Value::Poly(Poly::term(one, e)))
            }
            Some(Token::Ident(name)) => {
                let e = self.ring.named_variable(&name).ok_or_else(|| {
                    Error::Parse(format!("unknown symbol `{name}` for {}", self.ring.descriptor()))
                })?;
                Ok(Value::Poly(Poly::term(one, e)))
            }
            Some(Token::Open) => {
                let v = self.expr()?;
                match self.bump() {
                    Some(Token::Close) => Ok(v),
                    _ => Err(Error::Parse("missing `)`".into())),
                }
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

/// Parses a polynomial in `nvars` variables over `ring`.
pub fn parse_poly<R: CoeffRing>(ring: &R, nvars: usize, text: &str) -> Result<Poly<R::Elem>> {
    let mut parser = Parser {
        ring,
        nvars,
        tokens: tokenize(text)?,
        pos: 0,
    };
    if parser.tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let v = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!(
            "trailing input after position {}",
            parser.pos
        )));
    }
    Ok(parser.to_poly(v))
}

/// Parses a single ring element (no `x` variables).
pub fn parse_scalar<R: CoeffRing>(ring: &R, text: &str) -> Result<R::Elem> {
    let p = parse_poly(ring, 0, text)?;
    Ok(p
        .coeff(&Monomial::one(0))
        .cloned()
        .unwrap_or_else(|| ring.zero()))
}

/// Splits a `;`-separated list of polynomials.
pub fn parse_poly_list<R: CoeffRing>(ring: &R, nvars: usize, text: &str) -> Result<Vec<Poly<R::Elem>>> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| parse_poly(ring, nvars, s))
        .collect()
}
