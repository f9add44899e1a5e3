//! Words over the alphabet `{1..d}`.

use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;

pub type Letter = u32;

/// A `d`-word. The empty word is the unit of the shuffle algebra and renders as `1`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: impl Into<Vec<Letter>>) -> Self {
        Word(letters.into())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    pub fn max_letter(&self) -> Letter {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// All words of length `n` over `{1..d}`, lexicographically.
    pub fn all(n: usize, d: u32) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..n {
            let mut next = Vec::with_capacity(out.len() * d as usize);
            for w in &out {
                for a in 1..=d {
                    let mut v = w.0.clone();
                    v.push(a);
                    next.push(Word(v));
                }
            }
            out = next;
        }
        out
    }
}

/// Digits run together; a comma list once any entry exceeds 9.
pub(crate) fn render_letters<T>(f: &mut fmt::Formatter<'_>, letters: &[T]) -> fmt::Result
where
    T: fmt::Display + Copy + TryInto<u64>,
{
    let wide = letters.iter().any(|&a| a.try_into().map_or(true, |v| v > 9));
    for (i, a) in letters.iter().enumerate() {
        if wide && i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{}", a)?;
    }
    Ok(())
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        f.write_str("(")?;
        render_letters(f, &self.0)?;
        f.write_str(")")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses a letter list: digits `"121"`, a comma list `"1,12,3"`, or lowercase
/// letters `"abc"` (`a = 1`). Optional surrounding parentheses are ignored.
pub(crate) fn parse_letters(s: &str) -> Result<Vec<u32>, ParseError> {
    let lead = s.len() - s.trim_start().len();
    let mut body = s.trim();
    let mut offset = lead;
    if body.starts_with('(') {
        if !body.ends_with(')') {
            return Err(ParseError::new(offset + body.len(), "missing ')'"));
        }
        body = &body[1..body.len() - 1];
        offset += 1;
    }
    if body.contains(',') {
        let mut out = Vec::new();
        let mut pos = offset;
        for part in body.split(',') {
            let t = part.trim();
            let v = t
                .parse::<u32>()
                .map_err(|_| ParseError::new(pos, format!("invalid letter '{}'", t)))?;
            out.push(v);
            pos += part.len() + 1;
        }
        return Ok(out);
    }
    let alphabetic = body.trim_start().starts_with(|c: char| c.is_ascii_lowercase());
    let mut out = Vec::new();
    for (i, c) in body.char_indices() {
        match c {
            '0'..='9' if !alphabetic => out.push(c as u32 - '0' as u32),
            'a'..='z' if alphabetic => out.push(c as u32 - 'a' as u32 + 1),
            c if c.is_whitespace() => {}
            _ => return Err(ParseError::new(offset + i, format!("unexpected character '{}'", c))),
        }
    }
    Ok(out)
}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let letters = parse_letters(s)?;
        if let Some(p) = letters.iter().position(|&a| a == 0) {
            return Err(ParseError::new(p, "letters start at 1"));
        }
        Ok(Word(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!("abc".parse::<Word>().unwrap(), Word::new([1, 2, 3]));
        assert_eq!("(121)".parse::<Word>().unwrap(), Word::new([1, 2, 1]));
        assert_eq!("1,12".parse::<Word>().unwrap(), Word::new([1, 12]));
        assert!("1x".parse::<Word>().is_err());
        assert!("10".parse::<Word>().is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(Word::empty().to_string(), "1");
        assert_eq!(Word::new([2, 1]).to_string(), "(21)");
        assert_eq!(Word::new([2, 11]).to_string(), "(2,11)");
    }

    #[test]
    fn all_words_count() {
        assert_eq!(Word::all(3, 2).len(), 8);
        assert_eq!(Word::all(0, 2), vec![Word::empty()]);
    }
}
