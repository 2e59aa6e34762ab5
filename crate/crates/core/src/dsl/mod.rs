//! Text syntax for morphisms.
//!
//! ```text
//! lincomb := term (('+'|'-') term)*
//! term    := [coeff '*'] diagram
//! coeff   := '(' polynomial ')' | integer | 'i'
//! diagram := factor (';' factor)*        top-to-bottom composition
//! factor  := atom ('|' atom)*            tensor, left to right
//! atom    := mC | dC | uC | eC | mW | dW | uW | eW | z | zs
//!          | id:objstr | sw:bit bit | '(' diagram ')'
//! objstr  := [01]+ | '-'
//! ```

mod lexer;
mod printer;

pub use printer::{print, print_diagram};

use thiserror::Error;

use crate::diagram::{Diagram, DiagramError, LinComb, Obj};
use crate::ring::{parse_poly, GaussianInteger, PolyParseError, RingPoly};

use lexer::{lex, Tok, Token};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("lexical error at offset {position}: {message}")]
    Lex { position: usize, message: String },
    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("type error at offset {position}: expected {expected}, found {found}")]
    Type { position: usize, expected: Obj, found: Obj },
    #[error("term at offset {position} has type {found}, expected {expected}")]
    TermType { position: usize, expected: String, found: String },
    #[error("bad coefficient at offset {position}: {source}")]
    Coefficient { position: usize, source: PolyParseError },
}

impl DslError {
    pub(crate) fn lex(position: usize, message: impl Into<String>) -> Self {
        DslError::Lex { position, message: message.into() }
    }

    pub(crate) fn syntax(position: usize, message: impl Into<String>) -> Self {
        DslError::Syntax { position, message: message.into() }
    }

    /// Byte offset into the source text.
    pub fn position(&self) -> usize {
        match self {
            DslError::Lex { position, .. }
            | DslError::Syntax { position, .. }
            | DslError::Type { position, .. }
            | DslError::TermType { position, .. }
            | DslError::Coefficient { position, .. } => *position,
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Token>,
    idx: usize,
}

fn tok_name(t: &Tok) -> String {
    match t {
        Tok::Gen(g) => g.symbol(),
        Tok::Id(o) => format!("id:{o}"),
        Tok::Int(n) => n.to_string(),
        Tok::I => "i".into(),
        Tok::Sym(c) => c.to_string(),
        Tok::Caret => "^".into(),
        Tok::Plus => "+".into(),
        Tok::Minus => "-".into(),
        Tok::Star => "*".into(),
        Tok::LParen => "(".into(),
        Tok::RParen => ")".into(),
        Tok::Semi => ";".into(),
        Tok::Bar => "|".into(),
    }
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|t| &t.tok)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(k).map(|t| &t.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.src.len(), |t| t.start)
    }

    fn unexpected(&self, wanted: &str) -> DslError {
        match self.toks.get(self.idx) {
            Some(t) => DslError::syntax(t.start, format!("expected {wanted}, found '{}'", tok_name(&t.tok))),
            None => DslError::syntax(self.src.len(), format!("expected {wanted}, found end of input")),
        }
    }

    /// Index of the token closing the parenthesis opened at `open`.
    fn matching_paren(&self, open: usize) -> Option<usize> {
        let mut depth = 0usize;
        for k in open..self.toks.len() {
            match self.toks[k].tok {
                Tok::LParen => depth += 1,
                Tok::RParen => {
                    depth -= 1;
                    if depth == 0 {
                        return Some(k);
                    }
                }
                _ => {}
            }
        }
        None
    }

    fn lincomb(&mut self) -> Result<LinComb, DslError> {
        if self.toks.is_empty() {
            return Err(DslError::syntax(0, "empty input"));
        }
        let (c, d, at) = self.term()?;
        let mut lc = LinComb::zero(d.dom.clone(), d.cod.clone());
        lc.add_term(c, d).map_err(|e| type_error(at, e))?;
        loop {
            let negate = match self.peek() {
                Some(Tok::Plus) => false,
                Some(Tok::Minus) => true,
                None => return Ok(lc),
                Some(_) => return Err(self.unexpected("'+', '-', ';', '|' or end of input")),
            };
            self.idx += 1;
            let (c, d, at) = self.term()?;
            if d.dom != lc.dom || d.cod != lc.cod {
                return Err(DslError::TermType {
                    position: at,
                    expected: format!("{} -> {}", lc.dom, lc.cod),
                    found: format!("{} -> {}", d.dom, d.cod),
                });
            }
            let c = if negate { -c } else { c };
            lc.add_term(c, d).map_err(|e| type_error(at, e))?;
        }
    }

    fn term(&mut self) -> Result<(RingPoly, Diagram, usize), DslError> {
        let coeff = match self.peek() {
            Some(Tok::Int(n)) if self.peek_at(self.idx + 1) == Some(&Tok::Star) => {
                let c = RingPoly::constant(GaussianInteger::new(n.clone(), 0));
                self.idx += 2;
                Some(c)
            }
            Some(Tok::Int(_)) => {
                let t = &self.toks[self.idx];
                return Err(DslError::syntax(t.start, "integer coefficient must be followed by '*'"));
            }
            Some(Tok::I) => {
                if self.peek_at(self.idx + 1) != Some(&Tok::Star) {
                    let t = &self.toks[self.idx];
                    return Err(DslError::syntax(t.start, "coefficient 'i' must be followed by '*'"));
                }
                self.idx += 2;
                Some(RingPoly::i())
            }
            Some(Tok::LParen) => {
                let close = self.matching_paren(self.idx);
                match close {
                    Some(k) if self.peek_at(k + 1) == Some(&Tok::Star) => {
                        let inner_start = self.toks[self.idx].end;
                        let inner_end = self.toks[k].start;
                        let text = &self.src[inner_start..inner_end];
                        let c = parse_poly(text).map_err(|e| DslError::Coefficient {
                            position: (inner_start + e.position).min(inner_end.max(inner_start + 1) - 1),
                            source: e,
                        })?;
                        self.idx = k + 2;
                        Some(c)
                    }
                    _ => None,
                }
            }
            _ => None,
        };
        let at = self.pos();
        let d = self.diagram()?;
        Ok((coeff.unwrap_or_else(RingPoly::one), d, at))
    }

    fn diagram(&mut self) -> Result<Diagram, DslError> {
        let mut acc = self.factor()?;
        while let Some(Tok::Semi) = self.peek() {
            self.idx += 1;
            let at = self.pos();
            let next = self.factor()?;
            if acc.cod != next.dom {
                return Err(DslError::Type { position: at, expected: acc.cod.clone(), found: next.dom.clone() });
            }
            acc = acc.compose(&next).expect("checked");
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Diagram, DslError> {
        let mut acc = self.atom()?;
        while let Some(Tok::Bar) = self.peek() {
            self.idx += 1;
            let next = self.atom()?;
            acc = acc.tensor(&next);
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<Diagram, DslError> {
        let tok = self.peek().cloned();
        match tok {
            Some(Tok::Gen(g)) => {
                self.idx += 1;
                Ok(Diagram::generator(g))
            }
            Some(Tok::Id(o)) => {
                self.idx += 1;
                Ok(Diagram::identity(o))
            }
            Some(Tok::LParen) => {
                self.idx += 1;
                let d = self.diagram()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.idx += 1;
                        Ok(d)
                    }
                    _ => Err(self.unexpected("')'")),
                }
            }
            Some(Tok::Sym(_)) | Some(Tok::Caret) => {
                let t = &self.toks[self.idx];
                Err(DslError::syntax(t.start, "polynomial coefficients must be parenthesized and followed by '*'"))
            }
            _ => Err(self.unexpected("a generator, identity, swap or '('")),
        }
    }
}

fn type_error(at: usize, e: DiagramError) -> DslError {
    match e {
        DiagramError::Interface { expected, found, .. } => DslError::Type { position: at, expected, found },
        other => DslError::syntax(at, other.to_string()),
    }
}

/// Parses a linear combination of diagrams.
pub fn parse(text: &str) -> Result<LinComb, DslError> {
    let toks = lex(text)?;
    let mut p = Parser { src: text, toks, idx: 0 };
    p.lincomb()
}

/// Parses a single diagram without coefficient.
pub fn parse_diagram(text: &str) -> Result<Diagram, DslError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(DslError::syntax(0, "empty input"));
    }
    let mut p = Parser { src: text, toks, idx: 0 };
    let d = p.diagram()?;
    if p.idx != p.toks.len() {
        return Err(p.unexpected("';', '|' or end of input"));
    }
    Ok(d)
}
