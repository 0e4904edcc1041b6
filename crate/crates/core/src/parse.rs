//! Text grammar for monomial ideals.
//!
//! ```text
//! ideal     := monomial (separator monomial)*
//! separator := "," | newline
//! monomial  := term ("*" term)* | "1"
//! term      := "x" INDEX ("^" EXPONENT)?
//! ```
//!
//! Spaces, tabs and carriage returns are ignored. Repeated variables multiply,
//! so `x1*x1` is `x1^2`. Blank entries (empty text, trailing newline, blank
//! lines) contribute nothing; empty text is the zero ideal.

use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal};

/// Parses `text` as an ideal of `K[x1, ..., xn]`, minimalizing the result.
pub fn parse_ideal(text: &str, n: usize) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::NoVariables);
    }
    let mut gens = Vec::new();
    let mut start = 0;
    for (pos, ch) in text.char_indices().chain([(text.len(), '\n')]) {
        if ch == ',' || ch == '\n' {
            let item = &text[start..pos];
            if !item.trim().is_empty() {
                gens.push(parse_monomial_at(item, start, n)?);
            } else if ch == ',' {
                // a comma must separate two monomials
                return Err(Error::Syntax { pos, msg: "empty entry before ','".into() });
            }
            start = pos + ch.len_utf8();
        }
    }
    MonomialIdeal::new(n, gens)
}

/// Parses a single monomial such as `x1^2*x3` or `1`.
pub fn parse_monomial(text: &str, n: usize) -> Result<Monomial> {
    if n == 0 {
        return Err(Error::NoVariables);
    }
    parse_monomial_at(text, 0, n)
}

struct Cursor<'a> {
    bytes: &'a [u8],
    at: usize,
    base: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.at < self.bytes.len() && matches!(self.bytes[self.at], b' ' | b'\t' | b'\r') {
            self.at += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.at).copied()
    }

    fn pos(&self) -> usize {
        self.base + self.at
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax { pos: self.pos(), msg: msg.into() }
    }

    fn number(&mut self, what: &str) -> Result<usize> {
        self.skip_ws();
        let begin = self.at;
        while self.at < self.bytes.len() && self.bytes[self.at].is_ascii_digit() {
            self.at += 1;
        }
        if begin == self.at {
            return Err(self.error(format!("expected {what}")));
        }
        std::str::from_utf8(&self.bytes[begin..self.at])
            .expect("ascii digits")
            .parse::<usize>()
            .map_err(|_| Error::Syntax { pos: self.base + begin, msg: format!("{what} too large") })
    }
}

fn parse_monomial_at(text: &str, base: usize, n: usize) -> Result<Monomial> {
    let mut cur = Cursor { bytes: text.as_bytes(), at: 0, base };
    let mut exps = vec![0u32; n];

    if cur.peek() == Some(b'1') {
        let pos = cur.pos();
        cur.at += 1;
        return match cur.peek() {
            None => Ok(Monomial::unit(n)),
            Some(_) => Err(Error::Syntax { pos, msg: "'1' must stand alone".into() }),
        };
    }

    loop {
        match cur.peek() {
            Some(b'x') => cur.at += 1,
            Some(c) => return Err(cur.error(format!("expected 'x', found '{}'", c as char))),
            None => return Err(cur.error("expected a term")),
        }
        let index_pos = {
            cur.skip_ws();
            cur.pos()
        };
        let index = cur.number("variable index")?;
        if index == 0 || index > n {
            return Err(Error::VariableOutOfRange { index, n, pos: index_pos });
        }
        let mut exp = 1usize;
        if cur.peek() == Some(b'^') {
            cur.at += 1;
            let exp_pos = {
                cur.skip_ws();
                cur.pos()
            };
            exp = cur.number("exponent")?;
            if exp == 0 {
                return Err(Error::Syntax { pos: exp_pos, msg: "exponent must be at least 1".into() });
            }
        }
        let slot = &mut exps[index - 1];
        *slot = u32::try_from(exp)
            .ok()
            .and_then(|e| slot.checked_add(e))
            .ok_or_else(|| cur.error("exponent too large"))?;

        match cur.peek() {
            None => break,
            Some(b'*') => cur.at += 1,
            Some(c) => return Err(cur.error(format!("expected '*' or separator, found '{}'", c as char))),
        }
    }
    Ok(Monomial::new(exps))
}
