//! `Expr := Atom ("x" Atom)*`, `Atom := "P(" INT ")" | "BGm" | "Bmu(" INT ")"`.
//! Whitespace is ignored; more than two factors is an arity error.

use super::{Atom, SpaceExpr};
use crate::error::{CwError, CwResult};

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> CwResult<T> {
        Err(CwError::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn keyword(&mut self, kw: &str) -> bool {
        self.skip_ws();
        let k: Vec<char> = kw.chars().collect();
        if self.chars[self.pos..].starts_with(&k) {
            self.pos += k.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> CwResult<()> {
        match self.peek() {
            Some(d) if d == c => {
                self.pos += 1;
                Ok(())
            }
            Some(d) => self.err(format!("expected `{c}`, found `{d}`")),
            None => self.err(format!("expected `{c}`, found end of input")),
        }
    }

    fn int(&mut self) -> CwResult<(usize, u64)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return match self.chars.get(self.pos) {
                Some('-') => Err(CwError::Param("parameters must be positive integers".into())),
                _ => self.err("expected an integer"),
            };
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        let v = s.parse::<u64>().map_err(|_| CwError::Param(format!("integer `{s}` is too large")))?;
        Ok((start, v))
    }

    fn atom(&mut self) -> CwResult<Atom> {
        if self.keyword("BGm") {
            return Ok(Atom::BGm);
        }
        if self.keyword("Bmu") {
            self.expect('(')?;
            let (_, n) = self.int()?;
            self.expect(')')?;
            if n == 0 {
                return Err(CwError::Param("Bmu(n) needs n >= 1".into()));
            }
            return Ok(Atom::Bmu(n));
        }
        if self.keyword("P") {
            self.expect('(')?;
            let (_, r) = self.int()?;
            self.expect(')')?;
            if r == 0 {
                return Err(CwError::Param("P(r) needs r >= 1".into()));
            }
            let r = u32::try_from(r).map_err(|_| CwError::Param(format!("P({r}) is too large")))?;
            return Ok(Atom::P(r));
        }
        match self.peek() {
            Some(c) => self.err(format!("expected `P(`, `BGm` or `Bmu(`, found `{c}`")),
            None => self.err("expected a factor, found end of input"),
        }
    }
}

pub fn parse_space(text: &str) -> CwResult<SpaceExpr> {
    let mut c = Cursor { chars: text.chars().collect(), pos: 0 };
    let mut factors = vec![c.atom()?];
    while let Some(ch) = c.peek() {
        if ch != 'x' {
            return c.err(format!("expected `x` or end of input, found `{ch}`"));
        }
        c.pos += 1;
        factors.push(c.atom()?);
    }
    SpaceExpr::new(factors)
}
