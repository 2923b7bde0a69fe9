//! Normal forms `∇ₙAₙ ∧ ∇ₙ₊₁Aₙ₊₁ ∧ … ∧ ∇ₙ₊ₖAₙ₊ₖ` with `Aᵢ ∈ Wᵢ`.
//!
//! * weak forms come from structural recursion and are not unique;
//! * the fat form takes each `Aᵢ` as large as possible and is read off the
//!   Ignatiev point;
//! * the thin form takes each `Aᵢ` as small as possible and is computed by
//!   a case analysis on two-word conjunctions `∇₀A ∧ ∇₁B`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ignatiev::{self, Point};
use crate::ordinal::Ordinal;
use crate::syntax::Formula;
use crate::word::{self, Word};

/// `∇_start W₀ ∧ ∇_{start+1} W₁ ∧ …`; `⊤` entries are kept so that
/// positions stay aligned with indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NabForm {
    start: usize,
    words: Vec<Word>,
}

impl NabForm {
    pub fn new(start: usize, words: Vec<Word>) -> Self {
        NabForm { start, words }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// The word at modality index `i`; `⊤` outside the stored range.
    pub fn word(&self, i: usize) -> Word {
        i.checked_sub(self.start)
            .and_then(|k| self.words.get(k))
            .cloned()
            .unwrap_or_default()
    }

    /// One past the largest stored index.
    pub fn end(&self) -> usize {
        self.start + self.words.len()
    }

    pub fn is_top(&self) -> bool {
        self.words.iter().all(Word::is_top)
    }

    pub fn to_formula(&self) -> Formula {
        Formula::and(
            self.words
                .iter()
                .enumerate()
                .map(|(k, w)| Formula::nab(self.start + k, w.to_formula())),
        )
    }

    /// `∇ᵢAᵢ ∧ … ∧ ∇ₖAₖ`.
    pub fn tail(&self, i: usize) -> Formula {
        tail_formula(self.start, &self.words, i)
    }

    fn trimmed(mut self) -> Self {
        while self.words.last().is_some_and(Word::is_top) {
            self.words.pop();
        }
        self
    }
}

impl fmt::Display for NabForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_formula())
    }
}

fn tail_formula(start: usize, words: &[Word], i: usize) -> Formula {
    let from = i.saturating_sub(start);
    Formula::and(
        words
            .iter()
            .enumerate()
            .skip(from)
            .map(|(k, w)| Formula::nab(start + k, w.to_formula())),
    )
}

/// The fat normal form: `Aᵢ = word_of(i, pᵢ)` for the point `p` of the formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FatNf(NabForm);

/// The thin normal form: every word `<ᵢ`-minimal given the words after it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThinNf(NabForm);

macro_rules! form_newtype {
    ($t:ident) => {
        impl $t {
            pub fn form(&self) -> &NabForm {
                &self.0
            }

            pub fn words(&self) -> &[Word] {
                self.0.words()
            }

            pub fn to_formula(&self) -> Formula {
                self.0.to_formula()
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(&self.0, f)
            }
        }
    };
}

form_newtype!(FatNf);
form_newtype!(ThinNf);

fn require_level(n: usize, f: &Formula) -> Result<()> {
    f.require_variable_free()?;
    match f.index_range() {
        Some((lo, _)) if lo < n => Err(Error::LetterRange { letter: lo, min: n }),
        _ => Ok(()),
    }
}

/// Checks the shape `pᵢ = ω^{p_{i+1}}` below `n` that the values of
/// formulas with indices `≥ n` have.
fn check_tower_below(n: usize, p: &Point) -> Result<()> {
    let ok = if p.coord(n).is_zero() {
        p.is_zero()
    } else {
        (0..n).all(|i| *p.coord(i) == p.coord(i + 1).omega_pow())
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Internal(format!(
            "value {p} of a formula above index {n} is not an omega tower below {n}"
        )))
    }
}

/// A word `W ∈ Wₙ` with `∇ₙf = ∇ₙW`, for `f` using only indices `≥ n`.
pub fn word_equiv(n: usize, f: &Formula) -> Result<Word> {
    require_level(n, f)?;
    let p = ignatiev::eval(f)?;
    check_tower_below(n, &p)?;
    Ok(word::word_of(n, p.coord(n)))
}

/// `a <ₙ b`, decided as `b ⊢ ◇ₙa`.
fn less_at(n: usize, a: &Word, b: &Word) -> Result<bool> {
    ignatiev::derives(&b.to_formula(), &a.prepend(n).to_formula())
}

fn nab_derives(i: usize, a: &Word, b: &Word) -> Result<bool> {
    ignatiev::derives(
        &Formula::nab(i, a.to_formula()),
        &Formula::nab(i, b.to_formula()),
    )
}

/// A weak normal form starting at index 0.
pub fn weak_nf(f: &Formula) -> Result<NabForm> {
    weak_nf_from(0, f)
}

/// A weak normal form starting at `n`, for `f` using only indices `≥ n`.
pub fn weak_nf_from(n: usize, f: &Formula) -> Result<NabForm> {
    require_level(n, f)?;
    Ok(NabForm::new(n, weak(n, f)?).trimmed())
}

fn weak(n: usize, f: &Formula) -> Result<Vec<Word>> {
    let at = |ws: &[Word], i: usize| ws.get(i - n).cloned().unwrap_or_default();
    match f {
        Formula::Top => Ok(Vec::new()),
        Formula::Var(v) => Err(Error::Variable(v.clone())),
        Formula::And(cs) => {
            let mut acc: Vec<Word> = Vec::new();
            for c in cs {
                let next = weak(n, c)?;
                let len = acc.len().max(next.len());
                let mut merged = Vec::with_capacity(len);
                for i in n..n + len {
                    let (x, y) = (at(&acc, i), at(&next, i));
                    // ∇ᵢ-words are linearly ordered; keep the stronger one.
                    merged.push(if nab_derives(i, &x, &y)? { x } else { y });
                }
                acc = merged;
            }
            Ok(trim(acc))
        }
        Formula::Nab(i, b) => {
            let bs = weak(n, b)?;
            let mut out: Vec<Word> = (n..*i).map(|j| at(&bs, j)).collect();
            out.push(word_equiv(*i, &tail_formula(n, &bs, *i))?);
            Ok(trim(out))
        }
        Formula::Dia(i, b) => {
            let bs = weak(n, b)?;
            let mut out: Vec<Word> = (n..*i).map(|j| at(&bs, j).prepend(j)).collect();
            out.push(word_equiv(*i, &tail_formula(n, &bs, *i))?.prepend(*i));
            Ok(trim(out))
        }
    }
}

fn trim(mut ws: Vec<Word>) -> Vec<Word> {
    while ws.last().is_some_and(Word::is_top) {
        ws.pop();
    }
    ws
}

/// The fat normal form starting at index 0.
pub fn fat_nf(f: &Formula) -> Result<FatNf> {
    fat_nf_from(0, f)
}

pub fn fat_nf_from(n: usize, f: &Formula) -> Result<FatNf> {
    require_level(n, f)?;
    let p = ignatiev::eval(f)?;
    check_tower_below(n, &p)?;
    let form = fat_of_point(n, &p);
    let g = form.to_formula();
    if !(ignatiev::derives(f, &g)? && ignatiev::derives(&g, f)?) {
        return Err(Error::Internal(format!("fat form {g} is not equivalent to {f}")));
    }
    Ok(FatNf(form))
}

fn fat_of_point(n: usize, p: &Point) -> NabForm {
    let words = (n..p.support().max(n))
        .map(|i| word::word_of(i, p.coord(i)))
        .collect();
    NabForm::new(n, words).trimmed()
}

/// The fat form of a valid point.
pub fn fat_nf_of_point(p: &Point) -> FatNf {
    FatNf(fat_of_point(0, p))
}

/// The fat form reached from a weak form by compressing each tail into a
/// single word, from the top index down.
pub fn fat_nf_from_weak(weak: &NabForm) -> Result<FatNf> {
    let words = (weak.start()..weak.end())
        .map(|i| word_equiv(i, &weak.tail(i)))
        .collect::<Result<Vec<_>>>()?;
    Ok(FatNf(NabForm::new(weak.start(), words).trimmed()))
}

/// Whether every word satisfies `∇ᵢAᵢ ⊢ ∇ᵢ(∇ᵢAᵢ ∧ … ∧ ∇ₖAₖ)`.
pub fn is_fat(form: &NabForm) -> Result<bool> {
    for i in form.start()..form.end() {
        let own = Formula::nab(i, form.word(i).to_formula());
        if !ignatiev::derives(&own, &Formula::nab(i, form.tail(i)))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `B|A`: the suffix of `a` starting at the first block `Aᵢ` (of the
/// decomposition `A₀◇₀A₁…◇₀Aₘ`) with `b ≤₁ Aᵢ`.
pub fn restrict(b: &Word, a: &Word) -> Result<Word> {
    b.require_level(1)?;
    let blocks = a.blocks(0);
    for (i, block) in blocks.iter().enumerate() {
        if !less_at(1, block, b)? {
            return Ok(join_blocks(&blocks[i..]));
        }
    }
    Err(Error::NoRestriction)
}

fn join_blocks(blocks: &[Word]) -> Word {
    let mut letters = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        if i > 0 {
            letters.push(0);
        }
        letters.extend_from_slice(b.letters());
    }
    Word::new(letters)
}

/// The least `A'` with `∇₀A' ∧ ∇₁B = ∇₀A ∧ ∇₁B`, for `A ∈ W₀` and a
/// nonempty `B ∈ W₁`.
pub fn thin_pair(a: &Word, b: &Word) -> Result<Word> {
    let a = word::canonical(0, a)?;
    b.require_level(1)?;
    if ignatiev::derives(&b.to_formula(), &Formula::nab(0, a.to_formula()))? {
        return Ok(Word::top());
    }
    let blocks = a.blocks(0);
    let first = &blocks[0];
    let out = if less_at(1, b, first)? {
        a.clone()
    } else if less_at(1, first, b)? {
        restrict(b, &a)?.prepend(0)
    } else {
        if blocks.len() < 2 {
            return Err(Error::Internal(format!(
                "single-block word {a} equal to {b} should have been absorbed"
            )));
        }
        join_blocks(&blocks[1..]).prepend(0)
    };
    word::canonical(0, &out)
}

/// The thin normal form; words are canonical representatives.
pub fn thin_nf(f: &Formula) -> Result<ThinNf> {
    let weak = weak_nf(f)?;
    let words = thin_words(weak.words())?;
    Ok(ThinNf(NabForm::new(0, words)))
}

/// Thin form of `∇₀W₀ ∧ ∇₁W₁ ∧ …` with `Wᵢ ∈ Wᵢ` and nonempty last word.
fn thin_words(words: &[Word]) -> Result<Vec<Word>> {
    match words {
        [] => Ok(Vec::new()),
        [a] => Ok(vec![word::canonical(0, a)?]),
        [a, rest @ ..] => {
            let lowered = rest
                .iter()
                .map(|w| word::shift(-1, w))
                .collect::<Result<Vec<_>>>()?;
            let thin_rest = thin_words(&lowered)?
                .iter()
                .map(|w| word::shift(1, w))
                .collect::<Result<Vec<_>>>()?;
            let b = word_equiv(1, &tail_formula(1, &thin_rest, 1))?;
            let mut out = vec![thin_pair(a, &b)?];
            out.extend(thin_rest);
            Ok(out)
        }
    }
}

/// `Qₙ⁰(σ) = ◇ₙσ`, `Qₙᵏ⁺¹(σ) = ◇ₙ(σ ∧ Qₙᵏ(σ))` for `σ = b`, together with the
/// word equal to it.
pub fn q_word(n: usize, k: usize, b: &Word) -> Result<(Formula, Word)> {
    b.require_level(n)?;
    let sigma = b.to_formula();
    let mut q = Formula::dia(n, sigma.clone());
    for _ in 0..k {
        q = Formula::dia(n, Formula::and([sigma.clone(), q]));
    }
    let w = ignatiev::word_of_point(&ignatiev::eval(&q)?)?;
    if !w.in_level(n) {
        return Err(Error::Internal(format!("word {w} for {q} leaves level {n}")));
    }
    Ok((q, w))
}

/// `oᵢ` of every word in the form, indexed from the form's start.
pub fn ordinals(form: &NabForm) -> Result<Vec<Ordinal>> {
    (form.start()..form.end())
        .map(|i| word::o(i, &form.word(i)))
        .collect()
}
