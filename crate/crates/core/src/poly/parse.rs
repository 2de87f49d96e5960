//! Text grammar for polynomials.
//!
//! ```text
//! poly   := ["+"|"-"] term (("+"|"-") term)*
//! term   := [coeff ["*"]] factor ("*" factor)* | coeff
//! coeff  := digits ["/" digits]
//! factor := name ["^" digits]
//! ```
//!
//! Whitespace is ignored everywhere. Names are looked up in the ring.

use std::sync::Arc;

use num_bigint::BigInt;

use super::monomial::Monomial;
use super::polynomial::{Polynomial, Ring};
use crate::error::{Error, Result};

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    i: usize,
    src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        let chars = src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Lexer { chars, i: 0, src }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.i).map_or(self.src.len(), |&(p, _)| p)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).map(|&(_, c)| c)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<String> {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.i += 1;
        }
        (!s.is_empty()).then_some(s)
    }

    fn name(&mut self) -> Option<String> {
        let mut s = String::new();
        if let Some(c) = self.peek().filter(char::is_ascii_alphabetic) {
            s.push(c);
            self.i += 1;
            while let Some(c) = self.peek().filter(|c| c.is_ascii_alphanumeric() || *c == '_') {
                s.push(c);
                self.i += 1;
            }
        }
        (!s.is_empty()).then_some(s)
    }
}

pub fn parse_polynomial(src: &str, ring: &Arc<Ring>) -> Result<Polynomial> {
    let mut lx = Lexer::new(src);
    if lx.peek().is_none() {
        return Err(Error::parse(0, "empty polynomial"));
    }
    let field = ring.field();
    let mut terms = Vec::new();
    let mut first = true;
    while lx.peek().is_some() {
        let negative = if lx.eat('-') {
            true
        } else if lx.eat('+') || first {
            false
        } else {
            return Err(Error::parse(lx.pos(), "expected '+' or '-'"));
        };
        first = false;

        let start = lx.pos();
        let mut coeff = field.one();
        let mut has_coeff = false;
        if let Some(num) = lx.digits() {
            has_coeff = true;
            let num: BigInt = num.parse().expect("digit string");
            let den: BigInt = if lx.eat('/') {
                let p = lx.pos();
                lx.digits().ok_or_else(|| Error::parse(p, "expected denominator"))?.parse().expect("digit string")
            } else {
                BigInt::from(1)
            };
            coeff = field.from_fraction(&num, &den).ok_or_else(|| Error::parse(start, "denominator vanishes in the field"))?;
        }

        let mut exps = vec![0u32; ring.nvars()];
        let mut need_factor = !has_coeff;
        loop {
            let before = lx.i;
            let starred = lx.eat('*');
            if !need_factor && !starred && !lx.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                lx.i = before;
                break;
            }
            let p = lx.pos();
            let Some(name) = lx.name() else {
                return Err(Error::parse(p, "expected a variable"));
            };
            let var = ring
                .names()
                .iter()
                .position(|n| *n == name)
                .ok_or_else(|| Error::parse(p, format!("unknown variable '{name}'")))?;
            let e: u32 = if lx.eat('^') {
                let q = lx.pos();
                lx.digits()
                    .ok_or_else(|| Error::parse(q, "expected exponent"))?
                    .parse()
                    .map_err(|_| Error::parse(q, "exponent too large"))?
            } else {
                1
            };
            exps[var] = exps[var].checked_add(e).ok_or_else(|| Error::parse(p, "exponent too large"))?;
            need_factor = false;
        }
        if negative {
            coeff = -&coeff;
        }
        terms.push((Monomial::new(exps), coeff));
        if let Some(c) = lx.peek() {
            if c != '+' && c != '-' {
                return Err(Error::parse(lx.pos(), format!("unexpected '{c}'")));
            }
        }
    }
    Polynomial::from_terms(ring, terms)
}

/// One polynomial per nonblank line; `#` starts a comment.
pub fn parse_polynomial_lines(src: &str, ring: &Arc<Ring>) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in src.split_inclusive('\n') {
        let body = line.split('#').next().unwrap_or("");
        if !body.trim().is_empty() {
            let p = parse_polynomial(body, ring).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse { pos: pos + offset, msg },
                other => other,
            })?;
            out.push(p);
        }
        offset += line.len();
    }
    Ok(out)
}
