//! Strictly positive formulas over `⊤`, variables, `∧`, `◇ₙ` and `∇ₙ`.

mod ordered;
mod parser;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub use ordered::{is_ordered, ordered_form, ordered_form_with_steps, properly_ordered};
pub use parser::{parse, Parsed};

/// Largest modality index the parser accepts.
pub const MAX_INDEX: usize = 4096;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Top,
    Var(String),
    /// Flattened and holding at least two conjuncts when built through
    /// [`Formula::and`].
    And(Vec<Formula>),
    Dia(usize, Box<Formula>),
    Nab(usize, Box<Formula>),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sequent {
    pub lhs: Formula,
    pub rhs: Formula,
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Self {
        Formula::Var(name.into())
    }

    pub fn dia(n: usize, body: Formula) -> Self {
        Formula::Dia(n, Box::new(body))
    }

    pub fn nab(n: usize, body: Formula) -> Self {
        Formula::Nab(n, Box::new(body))
    }

    /// Conjunction with nested `And`s flattened. No conjuncts gives `⊤` and
    /// a single conjunct is returned as is.
    pub fn and<I: IntoIterator<Item = Formula>>(parts: I) -> Self {
        let mut flat = Vec::new();
        for p in parts {
            match p {
                Formula::And(cs) => flat.extend(cs),
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => Formula::Top,
            1 => flat.pop().unwrap(),
            _ => Formula::And(flat),
        }
    }

    /// `◇ᵢ₁…◇ᵢₖ⊤` for the given letters.
    pub fn diamonds(letters: &[usize]) -> Self {
        letters
            .iter()
            .rev()
            .fold(Formula::Top, |acc, &i| Formula::dia(i, acc))
    }

    /// Conjuncts of the top-level conjunction; `⊤` has none.
    pub fn conjuncts(&self) -> &[Formula] {
        match self {
            Formula::Top => &[],
            Formula::And(cs) => cs,
            other => std::slice::from_ref(other),
        }
    }

    /// Index of the outermost modality, if the formula is one.
    pub fn top_index(&self) -> Option<usize> {
        match self {
            Formula::Dia(n, _) | Formula::Nab(n, _) => Some(*n),
            _ => None,
        }
    }

    /// Number of syntax-tree nodes; an n-ary conjunction counts as `n - 1`
    /// binary connectives.
    pub fn size(&self) -> usize {
        match self {
            Formula::Top | Formula::Var(_) => 1,
            Formula::And(cs) => cs.len() - 1 + cs.iter().map(Formula::size).sum::<usize>(),
            Formula::Dia(_, b) | Formula::Nab(_, b) => 1 + b.size(),
        }
    }

    pub fn modality_count(&self) -> usize {
        match self {
            Formula::Top | Formula::Var(_) => 0,
            Formula::And(cs) => cs.iter().map(Formula::modality_count).sum(),
            Formula::Dia(_, b) | Formula::Nab(_, b) => 1 + b.modality_count(),
        }
    }

    /// Smallest and largest modality index occurring in the formula.
    pub fn index_range(&self) -> Option<(usize, usize)> {
        fn go(f: &Formula, acc: &mut Option<(usize, usize)>) {
            match f {
                Formula::Top | Formula::Var(_) => {}
                Formula::And(cs) => cs.iter().for_each(|c| go(c, acc)),
                Formula::Dia(n, b) | Formula::Nab(n, b) => {
                    *acc = Some(match *acc {
                        None => (*n, *n),
                        Some((lo, hi)) => (lo.min(*n), hi.max(*n)),
                    });
                    go(b, acc);
                }
            }
        }
        let mut acc = None;
        go(self, &mut acc);
        acc
    }

    pub fn variables(&self) -> BTreeSet<&str> {
        fn go<'a>(f: &'a Formula, out: &mut BTreeSet<&'a str>) {
            match f {
                Formula::Top => {}
                Formula::Var(v) => {
                    out.insert(v);
                }
                Formula::And(cs) => cs.iter().for_each(|c| go(c, out)),
                Formula::Dia(_, b) | Formula::Nab(_, b) => go(b, out),
            }
        }
        let mut out = BTreeSet::new();
        go(self, &mut out);
        out
    }

    fn first_variable(&self) -> Option<&str> {
        match self {
            Formula::Top => None,
            Formula::Var(v) => Some(v),
            Formula::And(cs) => cs.iter().find_map(Formula::first_variable),
            Formula::Dia(_, b) | Formula::Nab(_, b) => b.first_variable(),
        }
    }

    pub fn has_nab(&self) -> bool {
        match self {
            Formula::Top | Formula::Var(_) => false,
            Formula::And(cs) => cs.iter().any(Formula::has_nab),
            Formula::Dia(_, b) => b.has_nab(),
            Formula::Nab(..) => true,
        }
    }

    pub fn require_variable_free(&self) -> Result<()> {
        match self.first_variable() {
            Some(v) => Err(Error::Variable(v.to_string())),
            None => Ok(()),
        }
    }

    /// Variable-free and without `∇`: the closed fragment of RC.
    pub fn require_closed_rc(&self) -> Result<()> {
        self.require_variable_free()?;
        if self.has_nab() {
            Err(Error::Nabla)
        } else {
            Ok(())
        }
    }

    /// Letters of the formula if it is a word `◇ᵢ₁…◇ᵢₖ⊤`.
    pub fn as_word_letters(&self) -> Option<Vec<usize>> {
        let mut letters = Vec::new();
        let mut f = self;
        loop {
            match f {
                Formula::Top => return Some(letters),
                Formula::Dia(n, b) => {
                    letters.push(*n);
                    f = b;
                }
                _ => return None,
            }
        }
    }

    /// Adds `delta` to every modality index.
    pub fn shift(&self, delta: i64) -> Result<Formula> {
        Ok(match self {
            Formula::Top | Formula::Var(_) => self.clone(),
            Formula::And(cs) => {
                Formula::And(cs.iter().map(|c| c.shift(delta)).collect::<Result<_>>()?)
            }
            Formula::Dia(n, b) => Formula::dia(shift_index(*n, delta)?, b.shift(delta)?),
            Formula::Nab(n, b) => Formula::nab(shift_index(*n, delta)?, b.shift(delta)?),
        })
    }
}

pub(crate) fn shift_index(n: usize, delta: i64) -> Result<usize> {
    let shifted = n as i64 + delta;
    if shifted < 0 {
        Err(Error::Underflow { letter: n, delta })
    } else {
        Ok(shifted as usize)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Top => f.write_str("T"),
            Formula::Var(v) => f.write_str(v),
            Formula::And(cs) => {
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" & ")?;
                    }
                    write!(f, "{c}")?;
                }
                Ok(())
            }
            Formula::Dia(n, b) => {
                write!(f, "<{n}>")?;
                fmt_operand(b, f)
            }
            Formula::Nab(n, b) => {
                write!(f, "{{{n}}}")?;
                fmt_operand(b, f)
            }
        }
    }
}

fn fmt_operand(b: &Formula, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if matches!(b, Formula::And(_)) {
        write!(f, "({b})")
    } else {
        write!(f, "{b}")
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |- {}", self.lhs, self.rhs)
    }
}

impl fmt::Debug for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
