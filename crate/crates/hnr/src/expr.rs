//! The element expression language and its inverse formatter.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := atom ('^' uint)?
//! atom     := 't'uint | 'T'uint | 'g'uint | 'e'uint
//!           | 'b[' uint (',' uint)* ']'
//!           | rational | '(' expr ')'
//! rational := '-'? uint ('/' uint)?
//! ```
//!
//! `^` binds tighter than `*`, which binds tighter than `+` and binary `-`;
//! whitespace between tokens is insignificant. Generator names and rational
//! literals are single tokens (no internal whitespace). Indices are 1-based
//! and checked against the context at evaluation time. [`format_element`]
//! renders an element in any of the three bases as text this grammar parses
//! back to the same element, with terms in canonical order — identical
//! inputs give byte-identical output.

use std::fmt;

use crate::color::ColorVector;
use crate::context::Context;
use crate::convert::{to_coordinates, BasisTag};
use crate::element::AlgebraElement;
use crate::error::{Error, Result};
use crate::scalar::{ParameterSet, Scalar};

/// Parses and evaluates an expression over a fresh context for `params`.
pub fn parse_element(text: &str, params: &ParameterSet) -> Result<AlgebraElement> {
    let ctx = Context::new(params.clone())?;
    parse_element_in(text, &ctx)
}

/// Parses and evaluates an expression over an existing context.
pub fn parse_element_in(text: &str, ctx: &Context) -> Result<AlgebraElement> {
    let mut parser = Parser {
        text: text.as_bytes(),
        pos: 0,
        ctx,
    };
    let value = parser.expr()?;
    parser.skip_ws();
    if parser.pos < parser.text.len() {
        return Err(parser.syntax("unexpected trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
    ctx: &'a Context,
}

impl Parser<'_> {
    fn syntax(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self
            .text
            .get(self.pos)
            .is_some_and(|b| b.is_ascii_whitespace())
        {
            self.pos += 1;
        }
    }

    /// The next byte after whitespace, without consuming it.
    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn eat(&mut self, expected: u8) -> Result<()> {
        if self.peek() == Some(expected) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(format!("expected '{}'", expected as char)))
        }
    }

    /// A contiguous run of digits, as text.
    fn digits(&mut self) -> Result<&str> {
        let start = self.pos;
        while self.text.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.syntax("expected digits"));
        }
        Ok(std::str::from_utf8(&self.text[start..self.pos]).expect("digits are ascii"))
    }

    /// A whitespace-separated unsigned integer small enough to index with.
    fn uint(&mut self) -> Result<usize> {
        self.skip_ws();
        let at = self.pos;
        self.digits()?.parse().map_err(|_| Error::Syntax {
            pos: at,
            msg: "integer too large".into(),
        })
    }

    fn expr(&mut self) -> Result<AlgebraElement> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<AlgebraElement> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<AlgebraElement> {
        let base = self.atom()?;
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        self.skip_ws();
        let at = self.pos;
        let exponent: u32 = self.digits()?.parse().map_err(|_| Error::Syntax {
            pos: at,
            msg: "exponent too large".into(),
        })?;
        Ok(base.pow(exponent))
    }

    fn atom(&mut self) -> Result<AlgebraElement> {
        match self.peek() {
            Some(b't') => {
                self.pos += 1;
                let i = self.generator_index()?;
                AlgebraElement::t_gen(self.ctx, i)
            }
            Some(b'T') => {
                self.pos += 1;
                let i = self.generator_index()?;
                AlgebraElement::hecke_gen(self.ctx, i)
            }
            Some(b'g') => {
                self.pos += 1;
                let i = self.generator_index()?;
                AlgebraElement::braid_gen(self.ctx, i)
            }
            Some(b'e') => {
                self.pos += 1;
                let i = self.generator_index()?;
                AlgebraElement::match_idempotent(self.ctx, i)
            }
            Some(b'b') => {
                self.pos += 1;
                self.eat(b'[')?;
                let mut colors = vec![self.color_entry()?];
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    colors.push(self.color_entry()?);
                }
                self.eat(b']')?;
                if colors.len() != self.ctx.n() {
                    return Err(Error::BadShape(format!(
                        "b[..] needs {} colors, got {}",
                        self.ctx.n(),
                        colors.len()
                    )));
                }
                let k = ColorVector::new(&colors, self.ctx.r())?;
                AlgebraElement::idempotent(self.ctx, &k)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.eat(b')')?;
                Ok(inner)
            }
            Some(b) if b == b'-' || b.is_ascii_digit() => self.rational(),
            _ => Err(self.syntax("expected a generator, literal, or '('")),
        }
    }

    /// Digits immediately following a generator letter.
    fn generator_index(&mut self) -> Result<usize> {
        let at = self.pos;
        self.digits()?.parse().map_err(|_| Error::Syntax {
            pos: at,
            msg: "index too large".into(),
        })
    }

    /// One entry of a b[..] color list.
    fn color_entry(&mut self) -> Result<u8> {
        let at = self.pos;
        let value = self.uint()?;
        u8::try_from(value).map_err(|_| Error::Syntax {
            pos: at,
            msg: "color out of range".into(),
        })
    }

    /// A signed rational literal, one token: '-'? digits ('/' digits)?.
    fn rational(&mut self) -> Result<AlgebraElement> {
        let start = self.pos;
        if self.text.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        self.digits()?;
        if self.text.get(self.pos) == Some(&b'/') {
            self.pos += 1;
            self.digits()?;
        }
        let token = std::str::from_utf8(&self.text[start..self.pos]).expect("token is ascii");
        let value: Scalar = token.parse().map_err(|_| Error::Syntax {
            pos: start,
            msg: format!("bad rational literal '{token}'"),
        })?;
        Ok(AlgebraElement::one(self.ctx).scale(&value))
    }
}

/// Renders an element in the requested basis as expression text, terms in
/// the canonical label order. The output parses back to the same element.
pub fn format_element(x: &AlgebraElement, basis: BasisTag) -> String {
    let coords = to_coordinates(x, basis);
    let mut out = String::new();
    for (label, value) in &coords.entries {
        let mut factors: Vec<String> = Vec::new();
        match basis {
            BasisTag::Bg => {
                let colors: Vec<String> = label.head.iter().map(u8::to_string).collect();
                factors.push(format!("b[{}]", colors.join(",")));
            }
            BasisTag::Tg | BasisTag::Tt => {
                for (i, &e) in label.head.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => factors.push(format!("t{}", i + 1)),
                        _ => factors.push(format!("t{}^{e}", i + 1)),
                    }
                }
            }
        }
        let letter = if basis == BasisTag::Tt { 'T' } else { 'g' };
        for i in label.perm.reduced_word() {
            factors.push(format!("{letter}{i}"));
        }
        let magnitude = value.abs();
        if out.is_empty() {
            // The sign of a leading term is part of its literal.
            if factors.is_empty() {
                out = value.to_string();
            } else if magnitude.is_one() {
                if value.is_negative() {
                    out = format!("-1*{}", factors.join("*"));
                } else {
                    out = factors.join("*");
                }
            } else {
                out = format!("{value}*{}", factors.join("*"));
            }
            continue;
        }
        out.push_str(if value.is_negative() { " - " } else { " + " });
        if factors.is_empty() {
            out.push_str(&magnitude.to_string());
        } else if magnitude.is_one() {
            out.push_str(&factors.join("*"));
        } else {
            out.push_str(&format!("{magnitude}*{}", factors.join("*")));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for AlgebraElement {
    /// Expression text over the normal-form basis.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_element(self, BasisTag::Bg))
    }
}
