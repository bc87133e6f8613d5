//! The field-element literal grammar shared by spec files and the CLI.
//!
//! Literals are built from integers, fractions `p/q`, the symbols `zeta`,
//! `eps` (= `zeta^4`) and `i` (= `zeta^3`), declared parameter names, and
//! the operators `+ - * / ^` with parentheses. Rendering always re-parses
//! to an equal element.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::cyclotomic::Cyclo;
use crate::field::{FieldContext, FieldElem};
use crate::mpoly::MPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl core::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let bytes = input.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            b'-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            b'*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            b'/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            b'^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            b'(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &input[start..i];
                let n = text.parse::<BigInt>().map_err(|_| ParseError {
                    position: start,
                    message: format!("invalid integer `{text}`"),
                })?;
                out.push((start, Tok::Int(n)));
            }
            _ if b.is_ascii_alphabetic() || b == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(input[start..i].to_string())));
            }
            _ => {
                return Err(ParseError {
                    position: i,
                    message: format!("unexpected character `{}`", b as char),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    ctx: &'a FieldContext,
    input_len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.input_len)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<FieldElem, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<FieldElem, ParseError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let pos = self.here();
                    let rhs = self.unary()?;
                    if rhs.is_zero() {
                        return Err(ParseError {
                            position: pos,
                            message: "division by zero".into(),
                        });
                    }
                    acc = &acc / &rhs;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<FieldElem, ParseError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<FieldElem, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let pos = self.here();
            let neg = if let Some(Tok::Minus) = self.peek() {
                self.bump();
                true
            } else {
                false
            };
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e: i32 = n.to_string().parse().map_err(|_| ParseError {
                        position: pos,
                        message: "exponent out of range".into(),
                    })?;
                    let e = if neg { -e } else { e };
                    if e < 0 && base.is_zero() {
                        return Err(ParseError {
                            position: pos,
                            message: "negative power of zero".into(),
                        });
                    }
                    Ok(base.pow(e))
                }
                _ => Err(ParseError {
                    position: pos,
                    message: "expected integer exponent after `^`".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<FieldElem, ParseError> {
        let pos = self.here();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(FieldElem::from_rational(BigRational::from_integer(n))),
            Some(Tok::Ident(name)) => match name.as_str() {
                "zeta" => Ok(FieldElem::from_cyclo(Cyclo::zeta())),
                "eps" => Ok(FieldElem::cube_root_of_unity()),
                "i" => Ok(FieldElem::sqrt_minus_one()),
                _ => match self.ctx.index_of(&name) {
                    Some(idx) => Ok(FieldElem::param(idx)),
                    None => Err(ParseError {
                        position: pos,
                        message: format!("unknown symbol `{name}`"),
                    }),
                },
            },
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(ParseError {
                        position: pos,
                        message: "unbalanced parenthesis".into(),
                    }),
                }
            }
            other => Err(ParseError {
                position: pos,
                message: format!("expected a value, found {other:?}"),
            }),
        }
    }
}

/// Parses a field-element literal against the given parameter context.
pub fn parse(input: &str, ctx: &FieldContext) -> Result<FieldElem, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks,
        pos: 0,
        ctx,
        input_len: input.len(),
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(ParseError {
            position: p.here(),
            message: "trailing input".into(),
        });
    }
    Ok(e)
}

fn render_mpoly(p: &MPoly, ctx: &FieldContext) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    // Highest terms first for readability.
    for (mon, coeff) in p.terms().collect::<Vec<_>>().into_iter().rev() {
        let mut factors: Vec<String> = Vec::new();
        for (idx, &e) in mon.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = ctx
                .name(idx)
                .map(ToString::to_string)
                .unwrap_or_else(|| format!("p{idx}"));
            if e == 1 {
                factors.push(name);
            } else {
                factors.push(format!("{name}^{e}"));
            }
        }
        let mono = factors.join("*");
        // pull a plain sign out of rational coefficients
        let (neg, coeff_str) = match coeff.as_rational() {
            Some(r) => {
                let mag = rational_string(&r.abs());
                (r.is_negative(), Some(mag))
            }
            None => (false, Some(format!("({coeff})"))),
        };
        let body = match (coeff_str, mono.is_empty()) {
            (Some(cs), true) => cs,
            (Some(cs), false) if cs == "1" => mono,
            (Some(cs), false) => format!("{cs}*{mono}"),
            (None, _) => unreachable!(),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        out.push_str(&body);
    }
    out
}

fn rational_string(r: &BigRational) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a field element so that `parse(render(x)) == x`.
pub fn render(elem: &FieldElem, ctx: &FieldContext) -> String {
    let num = render_mpoly(elem.numerator(), ctx);
    if elem.denominator().is_constant() {
        // Denominator is normalized, so a constant denominator is exactly 1.
        num
    } else {
        format!("({}) / ({})", num, render_mpoly(elem.denominator(), ctx))
    }
}
