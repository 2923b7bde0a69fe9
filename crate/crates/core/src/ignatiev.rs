//! The Ignatiev algebra: finitely supported ordinal sequences
//! `(α₀, α₁, …)` with `α_{i+1} ≤ ℓ(αᵢ)`, ordered by `p ≤ q ⇔ ∀i pᵢ ≥ qᵢ`.
//!
//! Evaluating a variable-free formula to a [`Point`] and comparing points
//! decides entailment in RC∇.

use std::fmt;

use crate::error::{Error, Result};
use crate::ordinal::Ordinal;
use crate::syntax::Formula;
use crate::word::{self, Word};

/// Coordinates with trailing zeros trimmed; positions past the end are 0.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Point(Vec<Ordinal>);

impl Point {
    pub fn zero() -> Self {
        Point(Vec::new())
    }

    /// Validates the `α_{i+1} ≤ ℓ(αᵢ)` constraint.
    pub fn new(coords: Vec<Ordinal>) -> Result<Self> {
        let p = Self::trimmed(coords);
        match p.first_violation() {
            None => Ok(p),
            Some(i) => Err(Error::InvalidPoint(format!(
                "{p}: coordinate {} exceeds the last exponent of coordinate {i}",
                i + 1
            ))),
        }
    }

    fn trimmed(mut coords: Vec<Ordinal>) -> Self {
        while coords.last().is_some_and(Ordinal::is_zero) {
            coords.pop();
        }
        Point(coords)
    }

    pub fn coords(&self) -> &[Ordinal] {
        &self.0
    }

    pub fn coord(&self, i: usize) -> &Ordinal {
        static ZERO: Ordinal = Ordinal::ZERO;
        self.0.get(i).unwrap_or(&ZERO)
    }

    /// Number of coordinates up to the last nonzero one.
    pub fn support(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Index `i` of the first pair with `α_{i+1} > ℓ(αᵢ)`.
    fn first_violation(&self) -> Option<usize> {
        (0..self.0.len().saturating_sub(1)).find(|&i| self.0[i + 1] > self.0[i].ell())
    }

    pub fn is_valid(&self) -> bool {
        self.first_violation().is_none() && self.0.last().map_or(true, |c| !c.is_zero())
    }

    /// `α_{i+1} = ℓ(αᵢ)` for every `i`, including `ℓ(α_N) = 0` at the end of
    /// the support.
    pub fn is_main_axis(&self) -> bool {
        (0..self.0.len()).all(|i| *self.coord(i + 1) == self.0[i].ell())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `p ≤ q` in the algebra: every coordinate of `p` is at least that of `q`.
pub fn leq(p: &Point, q: &Point) -> bool {
    q.0.len() <= p.0.len() && q.0.iter().zip(&p.0).all(|(b, a)| a >= b)
}

/// Greatest lower bound: pointwise maxima, then closed downwards so that
/// every coordinate's last exponent dominates the next coordinate.
pub fn meet(p: &Point, q: &Point) -> Point {
    let len = p.0.len().max(q.0.len());
    let mut coords: Vec<Ordinal> = (0..len)
        .map(|i| p.coord(i).max(q.coord(i)).clone())
        .collect();
    for i in (0..len.saturating_sub(1)).rev() {
        if coords[i].ell() < coords[i + 1] {
            let bump = coords[i + 1].omega_pow();
            coords[i] = coords[i].plus(&bump);
        }
    }
    Point(coords)
}

/// `◇ₙ`: `βₙ = αₙ + 1`, `βᵢ = αᵢ + ω^{β_{i+1}}` below, zero above.
pub fn dia(n: usize, p: &Point) -> Point {
    let mut coords = vec![Ordinal::zero(); n + 1];
    let mut above = Ordinal::zero();
    for i in (0..=n).rev() {
        coords[i] = p.coord(i).plus(&above.omega_pow());
        above = coords[i].clone();
    }
    Point(coords)
}

/// `∇ₙ`: coordinates above `n` are dropped.
pub fn nab(n: usize, p: &Point) -> Point {
    let mut coords = p.0.clone();
    coords.truncate(n + 1);
    Point::trimmed(coords)
}

/// Value of a variable-free formula.
pub fn eval(f: &Formula) -> Result<Point> {
    Ok(match f {
        Formula::Top => Point::zero(),
        Formula::Var(v) => return Err(Error::Variable(v.clone())),
        Formula::And(cs) => {
            let mut acc = Point::zero();
            for c in cs {
                acc = meet(&acc, &eval(c)?);
            }
            acc
        }
        Formula::Dia(n, b) => dia(*n, &eval(b)?),
        Formula::Nab(n, b) => nab(*n, &eval(b)?),
    })
}

/// Decides `a ⊢ b` in RC∇ for variable-free formulas.
pub fn derives(a: &Formula, b: &Formula) -> Result<bool> {
    Ok(leq(&eval(a)?, &eval(b)?))
}

pub fn point_of_word(w: &Word) -> Point {
    w.letters()
        .iter()
        .rev()
        .fold(Point::zero(), |acc, &i| dia(i, &acc))
}

/// The word whose value is the given main-axis point.
pub fn word_of_point(p: &Point) -> Result<Word> {
    if !p.is_main_axis() {
        return Err(Error::OffAxis(p.to_string()));
    }
    Ok(word::word_of(0, p.coord(0)))
}

/// `p Rₙ q`: equal below `n`, strictly larger at `n`.
pub fn r_n(n: usize, p: &Point, q: &Point) -> bool {
    (0..n).all(|i| p.coord(i) == q.coord(i)) && p.coord(n) > q.coord(n)
}

/// The main-axis point `p'` agreeing with `p` at `n`, following last
/// exponents above `n` and absorbing them below. It satisfies
/// `dia(n, p') = dia(n, p)`, and `p' ≤ p` whenever the last-exponent chain
/// above `n` stays large enough.
pub fn main_axis_witness(n: usize, p: &Point) -> Point {
    let mut coords = vec![p.coord(n).clone()];
    while let Some(last) = coords.last().filter(|c| !c.is_zero()) {
        let next = last.ell();
        coords.push(next);
    }
    coords.pop();
    let mut below: Vec<Ordinal> = Vec::with_capacity(n);
    let mut above = p.coord(n).clone();
    for i in (0..n).rev() {
        let c = p.coord(i).plus(&above.omega_pow());
        above = c.clone();
        below.push(c);
    }
    below.reverse();
    below.extend(coords);
    Point::trimmed(below)
}
