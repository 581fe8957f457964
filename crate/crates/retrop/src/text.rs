//! Text formats for series, polynomials and points.
//!
//! Puiseux literals follow the grammar `term (('+'|'-') term)*` with
//! `term = rat ['*' 't' ['^' rat]]` and `rat = int ['/' posint]`, whitespace
//! insensitive. Rendering is canonical: terms in increasing exponent order,
//! reduced rationals, exponent 0 as a bare rational, fractional exponents
//! parenthesized. `parse(render(p)) == p` holds for every value.
//!
//! Tropical polynomials are one monomial per line, `(+|-) modulus : e1 .. en`.
//! Polynomials over the Puiseux field are one monomial per line,
//! `e1 .. en : <Puiseux literal>`. Signed tropical points are space-separated
//! `(+|-)rat` entries.

use crate::error::{Error, Result};
use crate::kpoly::PuiseuxPoly;
use crate::puiseux::Puiseux;
use crate::scalar::Scalar;
use crate::tropical::{Sign, SignedTrop, TropPoint, TropPoly};
use num_bigint::BigInt;

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    text: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, line: usize) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            line,
            text,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.line, self.pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{}' in '{}'", c, self.text)))
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    fn digits(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<BigInt>().map_err(|e| self.err(e.to_string()))
    }

    /// `rat = int ['/' posint]` with an optional leading sign.
    fn rat<T: Scalar>(&mut self) -> Result<T> {
        self.skip_ws();
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        self.skip_ws();
        let mut numer = self.digits()?;
        if neg {
            numer = -numer;
        }
        let denom = if self.eat('/') {
            let d = self.digits()?;
            if d <= BigInt::from(0) {
                return Err(self.err("denominator must be positive"));
            }
            d
        } else {
            BigInt::from(1)
        };
        Ok(T::from_big_ratio(numer, denom))
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let d = self.digits()?;
        let v = i64::try_from(d).map_err(|_| self.err("integer out of range"))?;
        Ok(if neg { -v } else { v })
    }

    /// One Puiseux term; returns (exponent, coefficient).
    fn puiseux_term<T: Scalar>(&mut self) -> Result<(T, T)> {
        self.skip_ws();
        let coeff = if self.peek() == Some('t') {
            T::one()
        } else {
            let c = self.rat()?;
            self.skip_ws();
            self.eat('*');
            self.skip_ws();
            c
        };
        if !self.eat('t') {
            return Ok((T::zero(), coeff));
        }
        self.skip_ws();
        if !self.eat('^') {
            return Ok((T::one(), coeff));
        }
        self.skip_ws();
        let exp = if self.eat('(') {
            let e = self.rat()?;
            self.skip_ws();
            self.expect(')')?;
            e
        } else {
            self.rat()?
        };
        Ok((exp, coeff))
    }
}

pub fn parse_puiseux_line<T: Scalar>(s: &str, line: usize) -> Result<Puiseux<T>> {
    let mut cur = Cursor::new(s, line);
    if cur.at_end() {
        return Err(cur.err("empty Puiseux literal"));
    }
    let mut terms: Vec<(T, T)> = Vec::new();
    let mut first = true;
    loop {
        cur.skip_ws();
        let negate = if first {
            if cur.eat('-') {
                true
            } else {
                cur.eat('+');
                false
            }
        } else if cur.eat('-') {
            true
        } else if cur.eat('+') {
            false
        } else {
            return Err(cur.err("expected '+' or '-' between terms"));
        };
        let (e, c) = cur.puiseux_term::<T>()?;
        let c = if negate { T::zero() - c } else { c };
        terms.push((e, c));
        first = false;
        if cur.at_end() {
            break;
        }
    }
    Ok(Puiseux::from_terms(terms))
}

pub fn parse_puiseux<T: Scalar>(s: &str) -> Result<Puiseux<T>> {
    parse_puiseux_line(s, 1)
}

pub fn render_rat<T: Scalar>(x: &T) -> String {
    let (n, d) = x.ratio_parts();
    if d == BigInt::from(1) {
        n.to_string()
    } else {
        format!("{}/{}", n, d)
    }
}

pub fn render_puiseux<T: Scalar>(p: &Puiseux<T>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if e.is_zero() {
            out.push_str(&render_rat(&mag));
        } else {
            out.push_str(&render_rat(&mag));
            out.push_str("*t");
            if !e.is_one() {
                let (en, ed) = e.ratio_parts();
                if ed == BigInt::from(1) {
                    out.push_str(&format!("^{}", en));
                } else {
                    out.push_str(&format!("^({}/{})", en, ed));
                }
            }
        }
    }
    out
}

/// Parses `0` as the zero series; used where zero inputs are legal.
pub fn parse_puiseux_or_zero<T: Scalar>(s: &str, line: usize) -> Result<Puiseux<T>> {
    if s.trim() == "0" {
        return Ok(Puiseux::zero());
    }
    parse_puiseux_line(s, line)
}

pub fn parse_trop_poly<T: Scalar>(s: &str) -> Result<TropPoly<T>> {
    let mut terms: Vec<(Vec<i64>, SignedTrop<T>)> = Vec::new();
    let mut dim: Option<usize> = None;
    for (ln, raw) in s.lines().enumerate() {
        let lineno = ln + 1;
        if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
            continue;
        }
        let mut cur = Cursor::new(raw, lineno);
        cur.skip_ws();
        let sign = match cur.bump() {
            Some('+') => Sign::Plus,
            Some('-') => Sign::Minus,
            _ => return Err(cur.err("expected '+' or '-' sign")),
        };
        let modulus: T = cur.rat()?;
        cur.skip_ws();
        cur.expect(':')?;
        let mut exps = Vec::new();
        while !cur.at_end() {
            exps.push(cur.int()?);
        }
        if exps.is_empty() {
            return Err(cur.err("expected exponent vector"));
        }
        match dim {
            None => dim = Some(exps.len()),
            Some(d) if d != exps.len() => {
                return Err(cur.err(format!(
                    "inconsistent dimension: expected {}, got {}",
                    d,
                    exps.len()
                )))
            }
            _ => {}
        }
        terms.push((exps, SignedTrop::new(sign, modulus)));
    }
    let dim = dim.ok_or_else(|| Error::parse(1, 1, "empty tropical polynomial"))?;
    TropPoly::new(dim, terms)
}

pub fn render_trop_poly<T: Scalar>(f: &TropPoly<T>) -> String {
    let mut out = String::new();
    for (exp, c) in f.terms() {
        out.push(c.sign.glyph());
        out.push(' ');
        out.push_str(&render_rat(&c.modulus));
        out.push_str(" :");
        for e in exp {
            out.push_str(&format!(" {}", e));
        }
        out.push('\n');
    }
    out
}

pub fn parse_kpoly<T: Scalar>(dim: usize, s: &str) -> Result<PuiseuxPoly<T>> {
    let mut terms: Vec<(Vec<i64>, Puiseux<T>)> = Vec::new();
    for (ln, raw) in s.lines().enumerate() {
        let lineno = ln + 1;
        if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
            continue;
        }
        let (head, tail) = raw
            .split_once(':')
            .ok_or_else(|| Error::parse(lineno, 1, "expected 'e1 .. en : coefficient'"))?;
        let mut cur = Cursor::new(head, lineno);
        let mut exps = Vec::new();
        while !cur.at_end() {
            exps.push(cur.int()?);
        }
        if exps.len() != dim {
            return Err(Error::parse(
                lineno,
                1,
                format!("expected {} exponents, got {}", dim, exps.len()),
            ));
        }
        let coeff = parse_puiseux_or_zero(tail, lineno)?;
        terms.push((exps, coeff));
    }
    PuiseuxPoly::from_terms(dim, terms)
}

/// Parses a polynomial over the Puiseux field inferring the dimension from
/// the first monomial line.
pub fn parse_kpoly_infer<T: Scalar>(s: &str) -> Result<PuiseuxPoly<T>> {
    let first = s
        .lines()
        .find(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .ok_or_else(|| Error::parse(1, 1, "empty polynomial"))?;
    let head = first
        .split_once(':')
        .ok_or_else(|| Error::parse(1, 1, "expected 'e1 .. en : coefficient'"))?
        .0;
    let dim = head.split_whitespace().count();
    if dim == 0 {
        return Err(Error::parse(1, 1, "expected exponent vector"));
    }
    parse_kpoly(dim, s)
}

pub fn render_kpoly<T: Scalar>(f: &PuiseuxPoly<T>) -> String {
    let mut out = String::new();
    for (exp, c) in f.terms() {
        let mut first = true;
        for e in exp {
            if !first {
                out.push(' ');
            }
            first = false;
            out.push_str(&e.to_string());
        }
        out.push_str(" : ");
        out.push_str(&render_puiseux(c));
        out.push('\n');
    }
    out
}

pub fn parse_point<T: Scalar>(s: &str) -> Result<TropPoint<T>> {
    let mut coords = Vec::new();
    for tok in s.split_whitespace() {
        let mut cur = Cursor::new(tok, 1);
        let sign = match cur.bump() {
            Some('+') => Sign::Plus,
            Some('-') => Sign::Minus,
            _ => return Err(cur.err(format!("expected '(+|-)rat' entry, got '{}'", tok))),
        };
        let modulus: T = cur.rat()?;
        if !cur.at_end() {
            return Err(cur.err(format!("trailing input in point entry '{}'", tok)));
        }
        coords.push(SignedTrop::new(sign, modulus));
    }
    if coords.is_empty() {
        return Err(Error::parse(1, 1, "empty point"));
    }
    Ok(TropPoint::new(coords))
}

pub fn render_point<T: Scalar>(p: &TropPoint<T>) -> String {
    p.coords
        .iter()
        .map(|c| format!("{}{}", c.sign.glyph(), render_rat(&c.modulus)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// A comma-separated row of Puiseux literals (`0` entries allowed).
pub fn parse_puiseux_row<T: Scalar>(s: &str, line: usize) -> Result<Vec<Puiseux<T>>> {
    s.split(',')
        .map(|piece| parse_puiseux_or_zero(piece, line))
        .collect()
}

pub fn render_puiseux_row<T: Scalar>(row: &[Puiseux<T>]) -> String {
    row.iter()
        .map(render_puiseux)
        .collect::<Vec<_>>()
        .join(", ")
}

/// Rows of comma-separated Puiseux literals, one per line.
pub fn parse_puiseux_rows<T: Scalar>(s: &str) -> Result<Vec<Vec<Puiseux<T>>>> {
    let mut rows = Vec::new();
    for (ln, raw) in s.lines().enumerate() {
        if raw.trim().is_empty() || raw.trim_start().starts_with('#') {
            continue;
        }
        rows.push(parse_puiseux_row(raw, ln + 1)?);
    }
    Ok(rows)
}
