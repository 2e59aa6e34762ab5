use num_bigint::BigInt;

use crate::diagram::{Gen, Obj, Wire};

use super::DslError;

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Tok {
    Gen(Gen),
    Id(Obj),
    Int(BigInt),
    I,
    /// `a` or `h`, legal only inside a parenthesized coefficient
    Sym(char),
    Caret,
    Plus,
    Minus,
    Star,
    LParen,
    RParen,
    Semi,
    Bar,
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub start: usize,
    pub end: usize,
}

fn ident_end(bytes: &[u8], mut pos: usize) -> usize {
    while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
        pos += 1;
    }
    pos
}

pub(crate) fn lex(src: &str) -> Result<Vec<Token>, DslError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        let simple = match c {
            b'+' => Some(Tok::Plus),
            b'-' => Some(Tok::Minus),
            b'*' => Some(Tok::Star),
            b'(' => Some(Tok::LParen),
            b')' => Some(Tok::RParen),
            b';' => Some(Tok::Semi),
            b'|' => Some(Tok::Bar),
            b'^' => Some(Tok::Caret),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token { tok, start, end: pos + 1 });
            pos += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let v: BigInt = src[start..pos].parse().expect("digits");
            out.push(Token { tok: Tok::Int(v), start, end: pos });
            continue;
        }
        if c.is_ascii_alphabetic() {
            let end = ident_end(bytes, pos);
            let word = &src[start..end];
            if bytes.get(end) == Some(&b':') && (word == "id" || word == "sw") {
                let arg_start = end + 1;
                let mut arg_end = arg_start;
                if word == "id" && bytes.get(arg_start) == Some(&b'-') {
                    arg_end += 1;
                } else {
                    while arg_end < bytes.len() && bytes[arg_end].is_ascii_alphanumeric() {
                        arg_end += 1;
                    }
                }
                let arg = &src[arg_start..arg_end];
                let tok = if word == "id" {
                    Obj::parse(arg).map(Tok::Id).ok_or_else(|| {
                        DslError::lex(arg_start.min(arg_end.saturating_sub(1)).max(start), "object must be [01]+ or '-'")
                    })?
                } else {
                    let bits: Vec<Wire> = arg.chars().filter_map(Wire::from_bit).collect();
                    if arg.len() != 2 || bits.len() != 2 {
                        return Err(DslError::lex(
                            arg_start.min(arg_end.saturating_sub(1)).max(start),
                            "swap takes exactly two bits",
                        ));
                    }
                    Tok::Gen(Gen::Swap(bits[0], bits[1]))
                };
                out.push(Token { tok, start, end: arg_end });
                pos = arg_end;
                continue;
            }
            let tok = match word {
                "mC" => Tok::Gen(Gen::MultC),
                "dC" => Tok::Gen(Gen::ComultC),
                "uC" => Tok::Gen(Gen::UnitC),
                "eC" => Tok::Gen(Gen::CounitC),
                "mW" => Tok::Gen(Gen::MultW),
                "dW" => Tok::Gen(Gen::ComultW),
                "uW" => Tok::Gen(Gen::UnitW),
                "eW" => Tok::Gen(Gen::CounitW),
                "z" => Tok::Gen(Gen::Zip),
                "zs" => Tok::Gen(Gen::Cozip),
                "i" => Tok::I,
                "a" => Tok::Sym('a'),
                "h" => Tok::Sym('h'),
                _ => return Err(DslError::lex(start, format!("unknown word {word:?}"))),
            };
            out.push(Token { tok, start, end });
            pos = end;
            continue;
        }
        let ch = src[pos..].chars().next().expect("in bounds");
        return Err(DslError::lex(start, format!("unexpected character {ch:?}")));
    }
    Ok(out)
}
