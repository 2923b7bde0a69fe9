//! Words `◇ᵢ₁…◇ᵢₖ⊤` and their order types.
//!
//! A word all of whose letters are `≥ n` has an order type `oₙ` below ε₀;
//! [`o`] and [`word_of`] are mutually inverse up to RC-equivalence.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ordinal::Ordinal;
use crate::syntax::{shift_index, Formula, MAX_INDEX};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn top() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_top(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Whether every letter is `≥ n`.
    pub fn in_level(&self, n: usize) -> bool {
        self.0.iter().all(|&l| l >= n)
    }

    pub fn require_level(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&l| l < n) {
            Some(&letter) => Err(Error::LetterRange { letter, min: n }),
            None => Ok(()),
        }
    }

    /// `◇ᵢ` prepended.
    pub fn prepend(&self, i: usize) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + 1);
        letters.push(i);
        letters.extend_from_slice(&self.0);
        Word(letters)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn to_formula(&self) -> Formula {
        Formula::diamonds(&self.0)
    }

    /// Dot-separated letters, e.g. `1.0.1`; `⊤` prints as `T`.
    pub fn compact(&self) -> String {
        if self.0.is_empty() {
            return "T".into();
        }
        self.0
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(".")
    }

    /// Splits at every occurrence of the letter `n` into the blocks
    /// `A₁, …, A_k` of `A₁◇ₙA₂…◇ₙA_k`.
    pub fn blocks(&self, n: usize) -> Vec<Word> {
        self.0
            .split(|&l| l == n)
            .map(|b| Word(b.to_vec()))
            .collect()
    }
}

/// The order type `oₙ(w)`.
pub fn o(n: usize, w: &Word) -> Result<Ordinal> {
    w.require_level(n)?;
    Ok(order_type(n, &w.0))
}

fn order_type(n: usize, letters: &[usize]) -> Ordinal {
    if letters.iter().all(|&l| l == n) {
        return Ordinal::from_nat(letters.len());
    }
    let blocks: Vec<&[usize]> = letters.split(|&l| l == n).collect();
    Ordinal::sum_of_powers(blocks.iter().rev().map(|b| order_type(n + 1, b)))
}

/// The canonical word in `Wₙ` of order type `a`.
pub fn word_of(n: usize, a: &Ordinal) -> Word {
    let mut out = Vec::new();
    write_word(n, a, &mut out);
    Word(out)
}

fn write_word(n: usize, a: &Ordinal, out: &mut Vec<usize>) {
    if let Some(k) = a.as_nat() {
        out.extend(std::iter::repeat(n).take(k));
        return;
    }
    // The leftmost block carries the smallest exponent.
    for (j, g) in a.exponents().iter().rev().enumerate() {
        if j > 0 {
            out.push(n);
        }
        write_word(n + 1, g, out);
    }
}

/// The RC-canonical representative of `w` in `Wₙ`.
pub fn canonical(n: usize, w: &Word) -> Result<Word> {
    Ok(word_of(n, &o(n, w)?))
}

/// Adds `delta` to every letter.
pub fn shift(delta: i64, w: &Word) -> Result<Word> {
    w.0.iter()
        .map(|&l| shift_index(l, delta))
        .collect::<Result<Vec<_>>>()
        .map(Word)
}

/// The longest prefix of `w` whose letters are all `≥ i`.
pub fn head(i: usize, w: &Word) -> Word {
    let end = w.0.iter().position(|&l| l < i).unwrap_or(w.0.len());
    Word(w.0[..end].to_vec())
}

/// `a <ₙ b`, i.e. `oₙ(a) < oₙ(b)`.
pub fn lt(n: usize, a: &Word, b: &Word) -> Result<bool> {
    Ok(o(n, a)? < o(n, b)?)
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            write!(f, "<{l}>")?;
        }
        f.write_str("T")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Accepts `<1><0>T`, the compact `1.0`, and `T` for the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with(|c: char| c.is_ascii_digit()) {
            let mut letters = Vec::new();
            let mut offset = s.len() - s.trim_start().len();
            for part in t.split('.') {
                let n: u64 = part.trim().parse().map_err(|_| Error::Parse {
                    pos: offset,
                    message: "expected a letter".into(),
                })?;
                if n > MAX_INDEX as u64 {
                    return Err(Error::IndexOverflow {
                        index: n,
                        max: MAX_INDEX,
                    });
                }
                letters.push(n as usize);
                offset += part.len() + 1;
            }
            return Ok(Word(letters));
        }
        let f: Formula = s.parse()?;
        f.as_word_letters().map(Word).ok_or_else(|| Error::Parse {
            pos: 0,
            message: "not a word: expected nested diamonds ending in T".into(),
        })
    }
}

impl From<Vec<usize>> for Word {
    fn from(letters: Vec<usize>) -> Self {
        Word(letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[usize]) -> Word {
        Word::new(letters.to_vec())
    }

    fn ord(s: &str) -> Ordinal {
        s.parse().unwrap()
    }

    #[test]
    fn order_type_examples() {
        assert_eq!(o(0, &w(&[0, 0, 0])).unwrap(), ord("3"));
        assert_eq!(o(0, &w(&[1])).unwrap(), ord("w"));
        assert_eq!(o(0, &w(&[1, 0, 1])).unwrap(), ord("w+w"));
        assert_eq!(o(0, &w(&[0, 1])).unwrap(), ord("w+1"));
        assert_eq!(o(0, &w(&[1, 0])).unwrap(), ord("w"));
        assert_eq!(o(0, &w(&[2])).unwrap(), ord("w^w"));
        assert_eq!(o(1, &w(&[1])).unwrap(), ord("1"));
        assert_eq!(o(0, &Word::top()).unwrap(), Ordinal::zero());
        assert_eq!(
            o(1, &w(&[0])),
            Err(Error::LetterRange { letter: 0, min: 1 })
        );
    }

    #[test]
    fn word_of_examples() {
        assert_eq!(word_of(0, &ord("3")), w(&[0, 0, 0]));
        assert_eq!(word_of(0, &ord("w^w")), w(&[2]));
        assert_eq!(word_of(1, &ord("1")), w(&[1]));
        assert_eq!(word_of(0, &ord("w+w")), w(&[1, 0, 1]));
        assert_eq!(word_of(0, &ord("w+1")), w(&[0, 1]));
        assert_eq!(word_of(2, &Ordinal::zero()), Word::top());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(shift(-1, &w(&[2, 1])).unwrap(), w(&[1, 0]));
        assert_eq!(shift(1, &Word::top()).unwrap(), Word::top());
        assert!(shift(-1, &w(&[0])).is_err());
    }

    #[test]
    fn head_examples() {
        assert_eq!(head(1, &w(&[2, 1, 0, 1])), w(&[2, 1]));
        assert_eq!(head(0, &w(&[2, 1, 0, 1])), w(&[2, 1, 0, 1]));
        assert_eq!(head(3, &w(&[2, 1])), Word::top());
    }

    #[test]
    fn lt_examples() {
        assert!(lt(0, &Word::top(), &w(&[0])).unwrap());
        assert!(lt(0, &w(&[0, 0]), &w(&[1])).unwrap());
        assert!(!lt(1, &w(&[1]), &w(&[1])).unwrap());
        assert!(lt(1, &w(&[0]), &w(&[1])).is_err());
    }

    #[test]
    fn text_forms() {
        let a: Word = "<1><0><1>T".parse().unwrap();
        let b: Word = "1.0.1".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "<1><0><1>T");
        assert_eq!(a.compact(), "1.0.1");
        assert_eq!("T".parse::<Word>().unwrap(), Word::top());
        assert!("<0>T & <1>T".parse::<Word>().is_err());
        assert!("1..2".parse::<Word>().is_err());
    }

    #[test]
    fn blocks_split_on_letter() {
        assert_eq!(
            w(&[2, 0, 1, 0, 0]).blocks(0),
            vec![w(&[2]), w(&[1]), Word::top(), Word::top()]
        );
    }
}
