//! Words in twist generators.
//!
//! Grammar: `word := factor ("*" factor)*`, `factor := NAME ("^" INT)?`. The empty string is
//! the empty word. Whitespace between tokens is ignored.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factor {
    pub name: String,
    pub exponent: i64,
}

/// A product of generator powers. The rightmost factor acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Factor>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn generator(name: impl Into<String>, exponent: i64) -> Self {
        let mut w = Word::empty();
        w.push(name, exponent);
        w
    }

    /// Appends a factor on the right; zero exponents are dropped.
    pub fn push(&mut self, name: impl Into<String>, exponent: i64) {
        if exponent != 0 {
            self.0.push(Factor { name: name.into(), exponent });
        }
    }

    pub fn factors(&self) -> &[Factor] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        out.0.extend(other.0.iter().cloned());
        out
    }

    pub fn inverse(&self) -> Word {
        Word(
            self.0
                .iter()
                .rev()
                .map(|f| Factor { name: f.name.clone(), exponent: -f.exponent })
                .collect(),
        )
    }

    pub fn power(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// `u v u⁻¹`.
    pub fn conjugate_by(&self, u: &Word) -> Word {
        u.concat(self).concat(&u.inverse())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if factor.exponent == 1 {
                write!(f, "{}", factor.name)?;
            } else {
                write!(f, "{}^{}", factor.name, factor.exponent)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser { src: s, pos: 0 }.word()
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_string().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { position: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn word(mut self) -> Result<Word> {
        let mut word = Word::empty();
        self.skip_ws();
        if self.peek().is_none() {
            return Ok(word);
        }
        loop {
            let (name, exponent) = self.factor()?;
            word.0.push(Factor { name, exponent });
            self.skip_ws();
            match self.peek() {
                None => return Ok(word),
                Some('*') => {
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(c) => return self.err(format!("expected `*` or end of word, found `{c}`")),
            }
        }
    }

    fn factor(&mut self) -> Result<(String, i64)> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
            Some(c) => return self.err(format!("expected generator name, found `{c}`")),
            None => return self.err("expected generator name, found end of input"),
        }
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += 1;
        }
        let name = self.src[start..self.pos].to_string();
        self.skip_ws();
        if self.peek() != Some('^') {
            return Ok((name, 1));
        }
        self.pos += 1;
        self.skip_ws();
        let num_start = self.pos;
        if matches!(self.peek(), Some('-' | '+')) {
            self.pos += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text = &self.src[num_start..self.pos];
        let Ok(exponent) = text.parse::<i64>() else {
            self.pos = num_start;
            return self.err(format!("invalid exponent `{text}`"));
        };
        if exponent == 0 {
            self.pos = num_start;
            return self.err("exponent must be nonzero");
        }
        Ok((name, exponent))
    }
}
