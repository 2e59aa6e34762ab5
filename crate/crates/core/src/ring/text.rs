//! Text syntax for ring elements: integers, the symbols `i`, `a`, `h`, the
//! operators `+ - * ^` and parentheses. Whitespace is insignificant.

use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use super::{GaussianInteger, Monomial, RingPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polynomial syntax error at offset {position}: {message}")]
pub struct PolyParseError {
    pub position: usize,
    pub message: String,
}

impl PolyParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        Self { position, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Sym(char),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, PolyParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let ch = bytes[pos] as char;
        if ch.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let tok = match ch {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            'i' | 'a' | 'h' => {
                if bytes.get(pos + 1).is_some_and(|b| b.is_ascii_alphanumeric()) {
                    return Err(PolyParseError::new(pos, "unknown symbol"));
                }
                Tok::Sym(ch)
            }
            '0'..='9' => {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if bytes.get(pos).is_some_and(|b| b.is_ascii_alphabetic()) {
                    return Err(PolyParseError::new(pos, "expected operator after integer"));
                }
                out.push((start, Tok::Int(src[start..pos].parse().expect("digits"))));
                continue;
            }
            _ => return Err(PolyParseError::new(pos, format!("unexpected character {ch:?}"))),
        };
        out.push((pos, tok));
        pos += ch.len_utf8();
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |(p, _)| *p)
    }

    fn expr(&mut self) -> Result<RingPoly, PolyParseError> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.idx += 1;
                    acc = &acc + &self.product()?;
                }
                Some(Tok::Minus) => {
                    self.idx += 1;
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<RingPoly, PolyParseError> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.idx += 1;
            acc = &acc * &self.unary()?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RingPoly, PolyParseError> {
        if let Some(Tok::Minus) = self.peek() {
            self.idx += 1;
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<RingPoly, PolyParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.idx += 1;
            let at = self.pos();
            match self.peek() {
                Some(Tok::Int(n)) => {
                    let exp = u32::try_from(n.clone())
                        .map_err(|_| PolyParseError::new(at, "exponent too large"))?;
                    self.idx += 1;
                    return Ok(base.pow(exp));
                }
                _ => return Err(PolyParseError::new(at, "expected integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RingPoly, PolyParseError> {
        let at = self.pos();
        let tok = self.peek().cloned();
        match tok {
            Some(Tok::Int(n)) => {
                self.idx += 1;
                Ok(RingPoly::constant(GaussianInteger::new(n, 0)))
            }
            Some(Tok::Sym(c)) => {
                self.idx += 1;
                Ok(match c {
                    'i' => RingPoly::i(),
                    'a' => RingPoly::monomial(GaussianInteger::one(), Monomial::new(1, 0)),
                    _ => RingPoly::monomial(GaussianInteger::one(), Monomial::new(0, 1)),
                })
            }
            Some(Tok::LParen) => {
                self.idx += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.idx += 1;
                        Ok(inner)
                    }
                    _ => Err(PolyParseError::new(self.pos(), "expected ')'")),
                }
            }
            Some(_) => Err(PolyParseError::new(at, "expected a number, symbol or '('")),
            None => Err(PolyParseError::new(at, "unexpected end of input")),
        }
    }
}

/// Parses a ring element from its text syntax, e.g. `h^2 + 4*a` or `-2*i`.
pub fn parse_poly(src: &str) -> Result<RingPoly, PolyParseError> {
    let toks = lex(src)?;
    if toks.is_empty() {
        return Err(PolyParseError::new(0, "empty polynomial"));
    }
    let mut p = Parser { toks, idx: 0, end: src.len() };
    let value = p.expr()?;
    if p.idx != p.toks.len() {
        return Err(PolyParseError::new(p.pos(), "trailing input"));
    }
    Ok(value)
}

impl FromStr for RingPoly {
    type Err = PolyParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}
