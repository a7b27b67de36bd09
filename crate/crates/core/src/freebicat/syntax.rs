//! Term grammar.
//!
//! ```text
//! one  := "(" one "*" one ")" | "id" "[" NAME "]" | NAME
//! two  := "(" "v" ":" two "." two ")" | "(" "h" ":" two "*" two ")"
//!       | "1" "[" one "]" | "a" "[" one ";" one ";" one "]"
//!       | "l" "[" one "]" | "r" "[" one "]" | "inv" "(" leaf ")" | NAME
//! leaf := "a" "[" ... "]" | "l" "[" ... "]" | "r" "[" ... "]"
//! NAME := [A-Za-z][A-Za-z0-9_]*
//! ```
//!
//! Whitespace is insignificant. At top level a 1-cell term may omit its
//! outermost parentheses (`t * u`).

use std::fmt;

use super::{OneTerm, TwoTerm};
use crate::error::{Error, Result};

impl fmt::Display for OneTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OneTerm::Id(a) => write!(f, "id[{a}]"),
            OneTerm::Gen(g) => write!(f, "{g}"),
            OneTerm::Comp(l, r) => write!(f, "({l}*{r})"),
        }
    }
}

impl fmt::Display for TwoTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoTerm::IdTwo(t) => write!(f, "1[{t}]"),
            TwoTerm::Gen(g) => write!(f, "{g}"),
            TwoTerm::Assoc(h, g, x) => write!(f, "a[{h};{g};{x}]"),
            TwoTerm::LUnit(x) => write!(f, "l[{x}]"),
            TwoTerm::RUnit(x) => write!(f, "r[{x}]"),
            TwoTerm::InvAssoc(h, g, x) => write!(f, "inv(a[{h};{g};{x}])"),
            TwoTerm::InvLUnit(x) => write!(f, "inv(l[{x}])"),
            TwoTerm::InvRUnit(x) => write!(f, "inv(r[{x}])"),
            TwoTerm::VComp(b, a) => write!(f, "(v : {b} . {a})"),
            TwoTerm::HComp(b, a) => write!(f, "(h : {b} * {a})"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let before = &self.src[..self.pos];
        let line = before.matches('\n').count() + 1;
        let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
        Error::Parse { line, column, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            let found = self.peek().map_or("end of input".to_string(), |f| format!("`{f}`"));
            Err(self.error(format!("expected `{c}`, found {found}")))
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn name(&mut self) -> Result<String> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() => {}
            _ => return Err(self.error("expected a name")),
        }
        let end = chars
            .find(|(_, c)| !(c.is_ascii_alphanumeric() || *c == '_'))
            .map_or(rest.len(), |(i, _)| i);
        self.pos += end;
        Ok(rest[..end].to_string())
    }

    /// Whether the next non-space character after the current name is `c`.
    fn followed_by(&self, c: char) -> bool {
        self.src[self.pos..].trim_start().starts_with(c)
    }

    fn one(&mut self) -> Result<OneTerm> {
        if self.eat('(') {
            let l = self.one()?;
            self.expect('*')?;
            let r = self.one()?;
            self.expect(')')?;
            return Ok(OneTerm::comp(l, r));
        }
        let n = self.name()?;
        if n == "id" && self.followed_by('[') {
            self.expect('[')?;
            let a = self.name()?;
            self.expect(']')?;
            return Ok(OneTerm::Id(a));
        }
        Ok(OneTerm::Gen(n))
    }

    fn bracketed_one(&mut self) -> Result<OneTerm> {
        self.expect('[')?;
        let t = self.one()?;
        self.expect(']')?;
        Ok(t)
    }

    fn structural(&mut self, n: &str) -> Result<Option<TwoTerm>> {
        if !self.followed_by('[') {
            return Ok(None);
        }
        Ok(Some(match n {
            "a" => {
                self.expect('[')?;
                let h = self.one()?;
                self.expect(';')?;
                let g = self.one()?;
                self.expect(';')?;
                let f = self.one()?;
                self.expect(']')?;
                TwoTerm::Assoc(h, g, f)
            }
            "l" => TwoTerm::LUnit(self.bracketed_one()?),
            "r" => TwoTerm::RUnit(self.bracketed_one()?),
            _ => return Ok(None),
        }))
    }

    fn two(&mut self) -> Result<TwoTerm> {
        if self.eat('(') {
            let tag = self.name()?;
            self.expect(':')?;
            let b = self.two()?;
            let t = match tag.as_str() {
                "v" => {
                    self.expect('.')?;
                    TwoTerm::vcomp(b, self.two()?)
                }
                "h" => {
                    self.expect('*')?;
                    TwoTerm::hcomp(b, self.two()?)
                }
                _ => return Err(self.error(format!("unknown composition tag `{tag}`; expected `v` or `h`"))),
            };
            self.expect(')')?;
            return Ok(t);
        }
        if self.eat('1') {
            return Ok(TwoTerm::IdTwo(self.bracketed_one()?));
        }
        let n = self.name()?;
        if n == "inv" && self.followed_by('(') {
            self.expect('(')?;
            let inner = self.name()?;
            let leaf = self
                .structural(&inner)?
                .ok_or_else(|| self.error("inv(...) applies only to a[..], l[..] or r[..]"))?;
            self.expect(')')?;
            return Ok(match leaf {
                TwoTerm::Assoc(h, g, f) => TwoTerm::InvAssoc(h, g, f),
                TwoTerm::LUnit(f) => TwoTerm::InvLUnit(f),
                TwoTerm::RUnit(f) => TwoTerm::InvRUnit(f),
                _ => unreachable!(),
            });
        }
        if let Some(t) = self.structural(&n)? {
            return Ok(t);
        }
        Ok(TwoTerm::Gen(n))
    }
}

/// Parse a 1-cell term.
pub fn parse_one(src: &str) -> Result<OneTerm> {
    let mut p = Parser::new(src);
    let t = p.one()?;
    let t = if p.eat('*') { OneTerm::comp(t, p.one()?) } else { t };
    if !p.at_end() {
        return Err(p.error("trailing input"));
    }
    Ok(t)
}

/// Parse a 2-cell term.
pub fn parse_two(src: &str) -> Result<TwoTerm> {
    let mut p = Parser::new(src);
    let t = p.two()?;
    if !p.at_end() {
        return Err(p.error("trailing input"));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_terms() {
        let t = parse_one("((h * id[B]) * g) * f").unwrap();
        assert_eq!(t.to_string(), "(((h*id[B])*g)*f)");
        assert_eq!(parse_one(&t.to_string()).unwrap(), t);
        assert_eq!(parse_one(" id [ A ] ").unwrap(), OneTerm::id("A"));
        // `id` without brackets is an ordinary name
        assert_eq!(parse_one("id").unwrap(), OneTerm::gen("id"));
    }

    #[test]
    fn two_terms() {
        let src = "(v : a[h;g;f] . (h : (h : r[h] * 1[g]) * 1[f]))";
        let t = parse_two(src).unwrap();
        assert_eq!(parse_two(&t.to_string()).unwrap(), t);
        let t = parse_two("inv( a[x; y; z] )").unwrap();
        assert!(matches!(t, TwoTerm::InvAssoc(..)));
        assert_eq!(parse_two("a").unwrap(), TwoTerm::gen("a"));
        assert_eq!(parse_two("gamma_1").unwrap(), TwoTerm::gen("gamma_1"));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_two("(v : a[h;g;f]\n  * x)") {
            Err(Error::Parse { line: 2, column: 3, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_two("inv(gamma)"), Err(Error::Parse { .. })));
        assert!(matches!(parse_one("(f * g"), Err(Error::Parse { .. })));
        assert!(matches!(parse_one("f g"), Err(Error::Parse { .. })));
        assert!(matches!(parse_one("9x"), Err(Error::Parse { .. })));
    }
}
