//! Bicolored letters and barred words.
//!
//! Two total orders on letters are used and always named explicitly:
//! [`Alphabet::BarredFirst`] puts every barred letter below every unbarred one
//! (1̄ < … < n̄ < 1 < … < n) and drives the excedance-descent set;
//! [`Alphabet::Interleaved`] is 1 < 1̄ < 2 < 2̄ < … and drives Lyndon words,
//! necklaces and banners.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BicolorLetter {
    pub value: u32,
    pub barred: bool,
}

impl BicolorLetter {
    pub fn plain(value: u32) -> Self {
        BicolorLetter {
            value,
            barred: false,
        }
    }

    pub fn bar(value: u32) -> Self {
        BicolorLetter {
            value,
            barred: true,
        }
    }

    pub fn toggled(self) -> Self {
        BicolorLetter {
            value: self.value,
            barred: !self.barred,
        }
    }
}

impl fmt::Display for BicolorLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.value, if self.barred { "'" } else { "" })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alphabet {
    /// 1̄ < 2̄ < … < 1 < 2 < …
    BarredFirst,
    /// 1 < 1̄ < 2 < 2̄ < …
    Interleaved,
}

impl Alphabet {
    pub fn cmp(self, a: &BicolorLetter, b: &BicolorLetter) -> Ordering {
        match self {
            Alphabet::BarredFirst => (!a.barred, a.value).cmp(&(!b.barred, b.value)),
            Alphabet::Interleaved => (a.value, a.barred).cmp(&(b.value, b.barred)),
        }
    }

    /// Lexicographic comparison of words; a proper prefix is smaller.
    pub fn cmp_words(self, u: &[BicolorLetter], v: &[BicolorLetter]) -> Ordering {
        for (a, b) in u.iter().zip(v) {
            match self.cmp(a, b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        u.len().cmp(&v.len())
    }
}

/// Formats a word; letters are concatenated when every value is a single digit.
pub fn format_word(w: &[BicolorLetter]) -> String {
    let sep = if w.iter().all(|l| l.value < 10) { "" } else { "," };
    w.iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// Parses a word such as `7'5'47`, `7' 5' 4 7` or `10',3,3`. Factor separators
/// `.` and `·` are ignored.
pub fn parse_word(s: &str) -> Result<Vec<BicolorLetter>> {
    let cleaned: String = s.chars().filter(|&c| c != '.' && c != '·').collect();
    let cleaned = cleaned.trim();
    let mut out = Vec::new();
    if cleaned.contains([',', ' ']) {
        for tok in cleaned.split([',', ' ']).filter(|t| !t.is_empty()) {
            let (num, barred) = match tok.strip_suffix('\'') {
                Some(n) => (n, true),
                None => (tok, false),
            };
            let value: u32 = num
                .parse()
                .map_err(|_| Error::Invalid(format!("bad letter {tok:?}")))?;
            out.push(BicolorLetter { value, barred });
        }
    } else {
        for c in cleaned.chars() {
            if c == '\'' {
                match out.last_mut() {
                    Some(l) => l.barred = true,
                    None => return invalid("a word cannot start with a bar"),
                }
            } else {
                let value = c
                    .to_digit(10)
                    .ok_or_else(|| Error::Invalid(format!("bad letter {c:?}")))?;
                out.push(BicolorLetter::plain(value));
            }
        }
    }
    if out.iter().any(|l| l.value == 0) {
        return invalid("letter values must be positive");
    }
    Ok(out)
}

/// A word of bicolored letters whose values are distinct.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BarredPermutation {
    letters: Vec<BicolorLetter>,
}

impl BarredPermutation {
    pub fn new(letters: Vec<BicolorLetter>) -> Result<Self> {
        let mut vals: Vec<u32> = letters.iter().map(|l| l.value).collect();
        vals.sort_unstable();
        if vals.windows(2).any(|w| w[0] == w[1]) {
            return invalid("barred permutation has repeated values");
        }
        Ok(BarredPermutation { letters })
    }

    pub fn from_parts(values: &[u32], bars: &[bool]) -> Result<Self> {
        if values.len() != bars.len() {
            return invalid("value and bar vectors differ in length");
        }
        BarredPermutation::new(
            values
                .iter()
                .zip(bars)
                .map(|(&value, &barred)| BicolorLetter { value, barred })
                .collect(),
        )
    }

    pub fn letters(&self) -> &[BicolorLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// |σ^B|: the bars removed.
    pub fn values(&self) -> Vec<u32> {
        self.letters.iter().map(|l| l.value).collect()
    }

    pub fn bars(&self) -> usize {
        self.letters.iter().filter(|l| l.barred).count()
    }
}

impl fmt::Display for BarredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_word(&self.letters))
    }
}

impl FromStr for BarredPermutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BarredPermutation::new(parse_word(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_barred_words() {
        let w = parse_word("7'5'47").unwrap();
        assert_eq!(
            w,
            vec![
                BicolorLetter::bar(7),
                BicolorLetter::bar(5),
                BicolorLetter::plain(4),
                BicolorLetter::plain(7)
            ]
        );
        assert_eq!(format_word(&w), "7'5'47");
        let long = parse_word("10',3 3").unwrap();
        assert_eq!(format_word(&long), "10',3,3");
    }

    #[test]
    fn orders_differ() {
        let one = BicolorLetter::plain(1);
        let two_bar = BicolorLetter::bar(2);
        assert_eq!(Alphabet::Interleaved.cmp(&one, &two_bar), Ordering::Less);
        assert_eq!(Alphabet::BarredFirst.cmp(&one, &two_bar), Ordering::Greater);
        let one_bar = BicolorLetter::bar(1);
        assert_eq!(Alphabet::Interleaved.cmp(&one, &one_bar), Ordering::Less);
    }
}
