//! Text form of knot expressions.
//!
//! ```text
//! EXPR := '0' | TERM (('#' | '+') TERM)*
//! TERM := ['-'] [INT '*'] ['-'] ATOM
//! ATOM := 'T(' INT ',' INT ')' | 'C(T(' INT ',' INT ');' INT ',' INT ')'
//! ```
//!
//! Whitespace is allowed between tokens. The printer emits the same
//! grammar, so printing and parsing round-trip on normalized expressions.

use std::str::FromStr;

use super::{Atom, KnotExpression};
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.as_bytes().get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{}`", c as char))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.src[start..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.err("expected an integer");
        }
        self.pos += digits;
        match self.src[start..self.pos].parse() {
            Ok(n) => Ok(n),
            Err(_) => {
                self.pos = start;
                self.err("integer out of range")
            }
        }
    }

    fn atom(&mut self) -> Result<Option<Atom>> {
        self.skip_ws();
        let start = self.pos;
        let atom = match self.peek() {
            Some(b'T') => {
                self.pos += 1;
                let (p, q) = self.pair()?;
                Atom::torus(p, q)
            }
            Some(b'C') => {
                self.pos += 1;
                self.expect(b'(')?;
                self.expect(b'T')?;
                let (p, q) = self.pair()?;
                self.expect(b';')?;
                let a = self.int()?;
                self.expect(b',')?;
                let b = self.int()?;
                self.expect(b')')?;
                Atom::cable(p, q, a, b)
            }
            _ => return self.err("expected `T(` or `C(`"),
        };
        atom.map_err(|e| Error::Atom {
            atom: self.src[start..self.pos].to_string(),
            source: Box::new(e),
        })
    }

    fn pair(&mut self) -> Result<(i64, i64)> {
        self.expect(b'(')?;
        let p = self.int()?;
        self.expect(b',')?;
        let q = self.int()?;
        self.expect(b')')?;
        Ok((p, q))
    }

    fn term(&mut self) -> Result<(Option<Atom>, i64)> {
        let mut sign = 1;
        if self.eat(b'-') {
            sign = -sign;
        }
        let mut coeff = 1;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            coeff = self.int()?;
            self.expect(b'*')?;
        }
        if self.eat(b'-') {
            sign = -sign;
        }
        let atom = self.atom()?;
        Ok((atom, sign * coeff))
    }

    fn expr(&mut self) -> Result<KnotExpression> {
        let mut out = KnotExpression::unknot();
        if self.peek() == Some(b'0') {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            if let (Some(atom), coeff) = self.term()? {
                out.add_term(atom, coeff);
            }
            if !(self.eat(b'#') || self.eat(b'+')) {
                break;
            }
        }
        Ok(out)
    }
}

impl FromStr for KnotExpression {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parser = Parser { src: s, pos: 0 };
        let e = parser.expr()?;
        if parser.peek().is_some() {
            return parser.err("unexpected trailing input");
        }
        Ok(e)
    }
}
