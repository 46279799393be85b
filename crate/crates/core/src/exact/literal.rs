//! Exact literal grammar shared by the CLI and fixtures:
//!
//! ```text
//! RAT  := INT | INT "/" POSINT
//! TERM := RAT | RAT "*" "sqrt(" INT ")" | "sqrt(" INT ")"
//! ELEM := ["+"|"-"] TERM (("+"|"-") TERM)*
//! ```
//!
//! Whitespace is insignificant. Every string produced by the `Display`
//! impls of the scalar types parses back to the same value.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{squarefree_split, BiQuadElem, QuadElem, Rat};
use crate::error::{Error, Result};

/// A parsed linear combination of square roots of squarefree integers;
/// radicand 1 holds the rational part.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Literal {
    terms: BTreeMap<i64, Rat>,
}

impl Literal {
    pub fn terms(&self) -> &BTreeMap<i64, Rat> {
        &self.terms
    }

    fn coef(&self, radicand: i64) -> Rat {
        self.terms.get(&radicand).cloned().unwrap_or_else(Rat::zero)
    }

    fn check_support(&self, allowed: &[i64], field: &str) -> Result<()> {
        if let Some((r, _)) = self.terms.iter().find(|(r, _)| !allowed.contains(r)) {
            return Err(Error::NotInField {
                literal: format!("sqrt({r})"),
                field: field.to_string(),
            });
        }
        Ok(())
    }

    pub fn to_rat(&self) -> Result<Rat> {
        self.check_support(&[1], "q")?;
        Ok(self.coef(1))
    }

    pub fn to_quad(&self, m: i64) -> Result<QuadElem> {
        self.check_support(&[1, m], &format!("quad:{m}"))?;
        QuadElem::new(m, self.coef(1), self.coef(m))
    }

    pub fn to_biquad(&self, m1: i64, m2: i64) -> Result<BiQuadElem> {
        BiQuadElem::check_field(m1, m2)?;
        let (s, f3) = squarefree_split(m1 * m2);
        self.check_support(&[1, m1, m2, f3], &format!("biquad:{m1},{m2}"))?;
        // √f3 = √(m1 m2) / s
        let d = self.coef(f3) / Rat::from_integer(s.into());
        BiQuadElem::new(m1, m2, [self.coef(1), self.coef(m1), self.coef(m2), d])
    }

    fn push(&mut self, radicand: i64, coef: Rat) {
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(radicand).or_insert_with(Rat::zero);
        *entry += coef;
        if entry.is_zero() {
            self.terms.remove(&radicand);
        }
    }
}

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_word(&mut self, w: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(w.as_bytes()) {
            self.pos += w.len();
            true
        } else {
            false
        }
    }

    fn err<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            expected: expected.to_string(),
        })
    }

    fn expect(&mut self, c: u8, expected: &str) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(expected)
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("digit");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(text.parse().expect("digits parse"))
    }

    fn int(&mut self) -> Result<BigInt> {
        let neg = self.eat(b'-');
        let n = self.digits()?;
        Ok(if neg { -n } else { n })
    }

    fn rat(&mut self) -> Result<Rat> {
        let n = self.int()?;
        if self.eat(b'/') {
            let at = self.pos;
            let d = self.digits()?;
            if d.is_zero() {
                self.pos = at;
                return self.err("positive denominator");
            }
            return Ok(Rat::new(n, d));
        }
        Ok(Rat::from_integer(n))
    }

    fn sqrt_arg(&mut self) -> Result<i64> {
        self.expect(b'(', "'(' after sqrt")?;
        let at = self.pos;
        let n = self.int()?;
        let n: i64 = match n.try_into() {
            Ok(v) => v,
            Err(_) => {
                self.pos = at;
                return self.err("radicand fitting in 64 bits");
            }
        };
        self.expect(b')', "')' closing sqrt")?;
        Ok(n)
    }

    fn term(&mut self, lit: &mut Literal, sign: i64) -> Result<()> {
        let sign = Rat::from_integer(sign.into());
        if self.eat_word("sqrt") {
            let n = self.sqrt_arg()?;
            add_surd(lit, sign, n);
            return Ok(());
        }
        match self.peek() {
            Some(c) if c.is_ascii_digit() || c == b'-' => {}
            _ => return self.err("rational or sqrt(INT)"),
        }
        let r = self.rat()? * sign;
        if self.eat(b'*') {
            if !self.eat_word("sqrt") {
                return self.err("'sqrt' after '*'");
            }
            let n = self.sqrt_arg()?;
            add_surd(lit, r, n);
        } else {
            lit.push(1, r);
        }
        Ok(())
    }
}

fn add_surd(lit: &mut Literal, coef: Rat, n: i64) {
    if n == 0 {
        return;
    }
    let (s, f) = squarefree_split(n);
    lit.push(f, coef * Rat::from_integer(s.into()));
}

/// Parses an exact field element, e.g. `"-5/2-1/2*sqrt(3)+1/2*sqrt(11)"`.
pub fn parse_literal(s: &str) -> Result<Literal> {
    let mut cur = Cursor {
        src: s.as_bytes(),
        pos: 0,
    };
    let mut lit = Literal::default();
    cur.eat(b'+');
    let mut sign = 1;
    if cur.peek().is_none() {
        return cur.err("a term");
    }
    if cur.peek() == Some(b'-') {
        // keep '-' for the rational itself unless a bare sqrt follows
        let save = cur.pos;
        cur.pos += 1;
        if cur.eat_word("sqrt") {
            cur.pos = save + 1;
            sign = -1;
        } else {
            cur.pos = save;
        }
    }
    cur.term(&mut lit, sign)?;
    loop {
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.pos += 1;
                cur.term(&mut lit, 1)?;
            }
            Some(b'-') => {
                cur.pos += 1;
                cur.term(&mut lit, -1)?;
            }
            Some(_) => return cur.err("'+', '-' or end of input"),
        }
    }
    Ok(lit)
}
