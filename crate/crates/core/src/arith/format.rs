//! Canonical text form for polynomials: descending exponents, explicit signs,
//! `*` between coefficient and variable, `^` for powers, for example
//! `2*q^3 - 10*q^2 + 10*q - 2`. Zero prints as `0`, half-integer exponents as
//! `q^(3/2)` and negative integer exponents as `q^-2`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{LaurentPoly, Rational, Var};
use crate::error::{Error, Result};

pub(crate) fn write_poly(f: &mut fmt::Formatter<'_>, p: &LaurentPoly) -> fmt::Result {
    if p.is_zero() {
        return f.write_str("0");
    }
    let x = p.var().symbol();
    for (i, (h, c)) in p.half_terms().rev().enumerate() {
        let neg = c.is_negative();
        let mag = c.abs();
        match (i, neg) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        if h == 0 {
            write!(f, "{}", mag)?;
            continue;
        }
        if !mag.is_one() {
            write!(f, "{}*", mag)?;
        }
        f.write_str(x)?;
        match (h % 2 == 0, h / 2) {
            (true, 1) => {}
            (true, e) => write!(f, "^{}", e)?,
            (false, _) => write!(f, "^({}/2)", h)?,
        }
    }
    Ok(())
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Option<BigInt> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return None;
        }
        std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!(
            "{} at byte {} of {:?}",
            msg,
            self.pos,
            String::from_utf8_lossy(self.s)
        ))
    }
}

/// Parses the canonical string form back into a polynomial in `var`.
///
/// Accepts anything the printer emits; also tolerates missing spaces.
pub fn parse_poly(input: &str, var: Var) -> Result<LaurentPoly> {
    let sym = var.symbol().as_bytes()[0];
    let mut cur = Cursor {
        s: input.trim().as_bytes(),
        pos: 0,
    };
    let mut terms: Vec<(i64, Rational)> = Vec::new();
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            if first {
                return Err(cur.err("empty polynomial"));
            }
            break;
        }
        let mut sign = 1;
        if cur.eat(b'-') {
            sign = -1;
        } else if cur.eat(b'+') {
            if first {
                return Err(cur.err("leading '+'"));
            }
        } else if !first {
            return Err(cur.err("expected '+' or '-'"));
        }
        cur.skip_ws();

        let mut coeff = Rational::one();
        let mut has_var = false;
        if cur.peek().is_some_and(|b| b.is_ascii_digit()) {
            let n = cur.int().ok_or_else(|| cur.err("bad integer"))?;
            let mut c = Rational::from_integer(n);
            if cur.eat(b'/') {
                let d = cur.int().ok_or_else(|| cur.err("bad denominator"))?;
                if d.is_zero() {
                    return Err(cur.err("zero denominator"));
                }
                c = Rational::new(c.to_integer(), d);
            }
            coeff = c;
            if cur.eat(b'*') {
                if !cur.eat(sym) {
                    return Err(cur.err("expected variable after '*'"));
                }
                has_var = true;
            }
        } else if cur.eat(sym) {
            has_var = true;
        } else {
            return Err(cur.err("expected coefficient or variable"));
        }

        let mut half = 0i64;
        if has_var {
            half = 2;
            if cur.eat(b'^') {
                if cur.eat(b'(') {
                    let n = cur.int().ok_or_else(|| cur.err("bad exponent"))?;
                    let n: i64 = n.try_into().map_err(|_| cur.err("exponent overflow"))?;
                    if cur.eat(b'/') {
                        let d = cur.int().ok_or_else(|| cur.err("bad exponent denominator"))?;
                        if d != BigInt::from(2) {
                            return Err(cur.err("only halves are allowed in exponents"));
                        }
                        half = n;
                    } else {
                        half = 2 * n;
                    }
                    if !cur.eat(b')') {
                        return Err(cur.err("expected ')'"));
                    }
                } else {
                    let n = cur.int().ok_or_else(|| cur.err("bad exponent"))?;
                    let n: i64 = n.try_into().map_err(|_| cur.err("exponent overflow"))?;
                    half = 2 * n;
                }
            }
        }
        if sign < 0 {
            coeff = -coeff;
        }
        terms.push((half, coeff));
        first = false;
    }
    Ok(LaurentPoly::from_half_terms(var, terms))
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::T => "t",
            Var::S => "s",
        }
    }
}
