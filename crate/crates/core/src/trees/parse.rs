//! Recursive-descent parsers for the plain and ordered forest grammars.
//!
//! ```text
//! plain   := DEC [ '[' plain (',' plain)* ']' ]
//! ordered := ORD [':' DEC] [ '[' ordered (',' ordered)* ']' ]
//! forest  := tree ('|' tree)* | '∅' | ''
//! ```
//! `DEC` is a positive integer or a lowercase letter (`a = 1`). Whitespace is ignored.

use super::plain::RawTree;
use crate::error::ParseError;

/// Ordered-tree node as parsed: order index, decoration and children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct RawOrdered {
    pub ord: usize,
    pub dec: u32,
    pub children: Vec<RawOrdered>,
    pub pos: usize,
}

struct Cursor<'a> {
    chars: Vec<(usize, char)>,
    idx: usize,
    src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(), idx: 0, src }
    }

    fn pos(&self) -> usize {
        self.chars.get(self.idx).map_or(self.src.len(), |p| p.0)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|p| p.1)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(ParseError::new(self.pos(), format!("expected '{}'", c)))
        }
    }

    fn number(&mut self) -> Result<u64, ParseError> {
        let start = self.pos();
        let mut v: u64 = 0;
        let mut any = false;
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            v = v
                .checked_mul(10)
                .and_then(|x| x.checked_add(u64::from(c as u32 - '0' as u32)))
                .ok_or_else(|| ParseError::new(start, "number too large"))?;
            any = true;
            self.idx += 1;
        }
        if !any {
            return Err(ParseError::new(start, "expected a number"));
        }
        Ok(v)
    }

    fn decoration(&mut self) -> Result<u32, ParseError> {
        let start = self.pos();
        let v = match self.peek() {
            Some(c @ 'a'..='z') => {
                self.idx += 1;
                c as u32 - 'a' as u32 + 1
            }
            _ => u32::try_from(self.number()?).map_err(|_| ParseError::new(start, "decoration too large"))?,
        };
        if v == 0 {
            return Err(ParseError::new(start, "decorations start at 1"));
        }
        Ok(v)
    }

    fn is_empty_forest(&mut self) -> bool {
        if self.chars.is_empty() {
            return true;
        }
        if self.chars.len() == 1 && self.chars[0].1 == '∅' {
            self.idx = 1;
            return true;
        }
        false
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(ParseError::new(self.pos(), format!("unexpected character '{}'", c))),
        }
    }

    fn children<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T, ParseError>) -> Result<Vec<T>, ParseError> {
        let mut out = Vec::new();
        if self.eat('[') {
            loop {
                out.push(item(self)?);
                if self.eat(']') {
                    break;
                }
                self.expect(',')?;
            }
        }
        Ok(out)
    }

    fn plain(&mut self) -> Result<RawTree, ParseError> {
        let dec = self.decoration()?;
        let children = self.children(Cursor::plain)?;
        Ok(RawTree { dec, children })
    }

    fn ordered(&mut self) -> Result<RawOrdered, ParseError> {
        let pos = self.pos();
        let ord = usize::try_from(self.number()?).map_err(|_| ParseError::new(pos, "order too large"))?;
        let dec = if self.eat(':') { self.decoration()? } else { 1 };
        let children = self.children(Cursor::ordered)?;
        Ok(RawOrdered { ord, dec, children, pos })
    }

    fn forest<T>(&mut self, item: impl Fn(&mut Self) -> Result<T, ParseError>) -> Result<Vec<T>, ParseError> {
        if self.is_empty_forest() {
            return Ok(Vec::new());
        }
        let mut out = vec![item(self)?];
        while self.eat('|') {
            out.push(item(self)?);
        }
        self.finish()?;
        Ok(out)
    }
}

pub(crate) fn parse_plain(s: &str) -> Result<Vec<RawTree>, ParseError> {
    Cursor::new(s).forest(Cursor::plain)
}

pub(crate) fn parse_ordered(s: &str) -> Result<Vec<RawOrdered>, ParseError> {
    Cursor::new(s).forest(Cursor::ordered)
}
