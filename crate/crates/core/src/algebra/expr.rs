//! Text form of elements.
//!
//! Grammar: `expr := term (('+'|'-') term)*`, `term := unary ('*' unary)*`,
//! `unary := '-' unary | power`, `power := atom ('^' integer)?`,
//! `atom := rational | identifier | '(' expr ')'`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::context::Context;
use super::element::Element;
use super::monomial::Monomial;
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{message} at position {position}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Scalar),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn err(position: usize, message: impl Into<String>) -> ParseError {
    ParseError { position, message: message.into() }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                out.push((i, Tok::Plus));
                i += 1
            }
            b'-' => {
                out.push((i, Tok::Minus));
                i += 1
            }
            b'*' => {
                out.push((i, Tok::Star));
                i += 1
            }
            b'^' => {
                out.push((i, Tok::Caret));
                i += 1
            }
            b'(' => {
                out.push((i, Tok::LParen));
                i += 1
            }
            b')' => {
                out.push((i, Tok::RParen));
                i += 1
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let num: BigInt = text[start..i].parse().expect("digits");
                let mut value = Scalar::from_integer(num);
                if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                    let ds = i + 1;
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let den: BigInt = text[ds..i].parse().expect("digits");
                    if den.is_zero() {
                        return Err(err(ds, "zero denominator"));
                    }
                    value /= Scalar::from_integer(den);
                }
                out.push((start, Tok::Num(value)));
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(err(i, format!("unexpected character '{}'", ch)));
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ctx: &'a Arc<Context>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn expr(&mut self) -> Result<Element, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Element, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Num(_)) | Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                    return Err(err(self.offset(), "expected '*' between factors"));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Element, ParseError> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Element, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let at = self.offset();
            match self.peek().cloned() {
                Some(Tok::Num(n)) if scalar::is_integer(&n) => {
                    self.pos += 1;
                    let e: u32 = n.numer().to_string().parse().map_err(|_| err(at, "exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(err(at, "expected a non-negative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Element, ParseError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Element::constant(self.ctx, n))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Element::generator(self.ctx, &name).map_err(|_| err(at, format!("unknown generator '{}'", name)))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(err(self.offset(), "expected ')'")),
                }
            }
            Some(_) => Err(err(at, "expected a number, generator or '('")),
            None => Err(err(at, "unexpected end of input")),
        }
    }
}

pub fn parse(ctx: &Arc<Context>, text: &str) -> Result<Element, ParseError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(err(0, "empty expression"));
    }
    let mut p = Parser { toks, pos: 0, end: text.len(), ctx };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(err(p.offset(), "unexpected token"));
    }
    Ok(e)
}

/// Printing order: higher degree first, then larger exponents of earlier
/// declared generators first.
pub fn display_order(ctx: &Context, a: &Monomial, b: &Monomial) -> Ordering {
    b.degree(ctx).cmp(&a.degree(ctx)).then_with(|| b.declared_exponents(ctx).cmp(&a.declared_exponents(ctx)))
}

pub fn format_monomial(ctx: &Context, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (g, spec) in ctx.generators().iter().enumerate() {
        let e = m.exponent(ctx, g);
        match e {
            0 => {}
            1 => parts.push(spec.name.clone()),
            _ => parts.push(format!("{}^{}", spec.name, e)),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn format(x: &Element) -> String {
    let ctx = x.context();
    let mut terms: Vec<(&Monomial, &Scalar)> = x.terms().iter().collect();
    if terms.is_empty() {
        return "0".into();
    }
    terms.sort_by(|a, b| display_order(ctx, a.0, b.0));
    let mut out = String::new();
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if m.is_one() {
            out.push_str(&scalar::display(&abs));
        } else {
            if !abs.is_one() {
                out.push_str(&scalar::display(&abs));
                out.push('*');
            }
            out.push_str(&format_monomial(ctx, m));
        }
    }
    out
}

impl core::fmt::Display for Element {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&format(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GeneratorSpec;
    use alloc::vec;

    fn ctx() -> Arc<Context> {
        Context::new(vec![
            GeneratorSpec::even("alpha", 2),
            GeneratorSpec::even("beta", 4),
            GeneratorSpec::even("gamma", 6),
            GeneratorSpec::odd("psi1", 3),
            GeneratorSpec::odd("psi2", 3),
        ])
        .unwrap()
    }

    #[test]
    fn canonical_text_round_trips() {
        let c = ctx();
        let text = "alpha^3 + 5*alpha*beta + 4*gamma - 24*alpha";
        let e = parse(&c, text).unwrap();
        assert_eq!(format(&e), text);
        assert_eq!(format(&parse(&c, "psi2*psi1").unwrap()), "-psi1*psi2");
        assert_eq!(format(&parse(&c, "0").unwrap()), "0");
        assert_eq!(format(&parse(&c, "4/3*gamma*alpha - 1/2").unwrap()), "4/3*alpha*gamma - 1/2");
    }

    #[test]
    fn precedence() {
        let c = ctx();
        let a = parse(&c, "-alpha^2").unwrap();
        let b = parse(&c, "-(alpha*alpha)").unwrap();
        assert_eq!(a, b);
        let d = parse(&c, "2*(alpha+1)^2 - 2*alpha^2 - 4*alpha").unwrap();
        assert_eq!(format(&d), "2");
    }

    #[test]
    fn errors_carry_positions() {
        let c = ctx();
        assert_eq!(parse(&c, "alpha + delta").unwrap_err().position, 8);
        assert_eq!(parse(&c, "2alpha").unwrap_err().position, 1);
        assert!(parse(&c, "(alpha").is_err());
        assert!(parse(&c, "alpha^beta").is_err());
        assert!(parse(&c, "").is_err());
    }
}
