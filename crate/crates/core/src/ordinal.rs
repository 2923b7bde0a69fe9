//! Ordinals below ε₀ in Cantor normal form.
//!
//! An [`Ordinal`] is the list of exponents `γ₁ ≥ γ₂ ≥ … ≥ γₖ` of
//! `ω^γ₁ + … + ω^γₖ`; the empty list is `0` and a natural number `n` is `n`
//! copies of the exponent `0`. Every constructor returns the canonical form,
//! so derived equality coincides with ordinal equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use crate::cursor::Cursor;
use crate::error::{Error, Result};

/// Largest natural accepted by the text parser. Naturals are stored as runs
/// of `ω⁰` terms, so this bounds memory for a single literal.
pub const MAX_NAT_LITERAL: u64 = 1 << 20;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Ordinal {
    exps: Vec<Ordinal>,
}

impl Ordinal {
    pub const ZERO: Ordinal = Ordinal { exps: Vec::new() };

    pub fn zero() -> Self {
        Ordinal { exps: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_nat(1)
    }

    pub fn omega() -> Self {
        Self::one().omega_pow()
    }

    pub fn from_nat(n: usize) -> Self {
        Ordinal {
            exps: vec![Ordinal::zero(); n],
        }
    }

    /// Builds `ω^e₁ + … + ω^eₖ` for arbitrary exponents, absorbing terms that
    /// are followed by a larger one.
    pub fn sum_of_powers<I: IntoIterator<Item = Ordinal>>(exps: I) -> Self {
        let mut out = Ordinal::zero();
        for e in exps {
            out.push_power(e);
        }
        out
    }

    /// The exponents of the normal form, largest first.
    pub fn exponents(&self) -> &[Ordinal] {
        &self.exps
    }

    pub fn is_zero(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.exps.iter().all(Ordinal::is_zero)
    }

    pub fn as_nat(&self) -> Option<usize> {
        self.is_finite().then_some(self.exps.len())
    }

    /// `ω^self`.
    pub fn omega_pow(&self) -> Ordinal {
        Ordinal {
            exps: vec![self.clone()],
        }
    }

    /// `self + ω^e`, in place.
    fn push_power(&mut self, e: Ordinal) {
        while self.exps.last().is_some_and(|last| *last < e) {
            self.exps.pop();
        }
        self.exps.push(e);
    }

    /// Ordinal addition; the terms of `self` below the leading exponent of
    /// `other` are absorbed.
    pub fn plus(&self, other: &Ordinal) -> Ordinal {
        let Some(lead) = other.exps.first() else {
            return self.clone();
        };
        let keep = self.exps.iter().take_while(|e| *e >= lead).count();
        let mut exps = Vec::with_capacity(keep + other.exps.len());
        exps.extend_from_slice(&self.exps[..keep]);
        exps.extend_from_slice(&other.exps);
        Ordinal { exps }
    }

    pub fn succ(&self) -> Ordinal {
        let mut exps = self.exps.clone();
        exps.push(Ordinal::zero());
        Ordinal { exps }
    }

    pub fn is_limit(&self) -> bool {
        self.exps.last().is_some_and(|e| !e.is_zero())
    }

    /// The last (smallest) exponent, or `0` for `0`.
    pub fn ell(&self) -> Ordinal {
        self.exps.last().cloned().unwrap_or_default()
    }

    /// Splits a nonzero ordinal as `δ + ω^γ` with `γ = ell(self)`.
    pub fn split_last(&self) -> Option<(Ordinal, Ordinal)> {
        let (last, init) = self.exps.split_last()?;
        Some((
            Ordinal {
                exps: init.to_vec(),
            },
            last.clone(),
        ))
    }

    /// `ω_k(a)`: `ω_0(a) = a`, `ω_{k+1}(a) = ω^{ω_k(a)}`.
    pub fn tower(k: usize, a: &Ordinal) -> Ordinal {
        (0..k).fold(a.clone(), |acc, _| acc.omega_pow())
    }

    /// Nesting depth of the exponent tree; `0` has depth 0 and `1` depth 1.
    pub fn depth(&self) -> usize {
        self.exps.iter().map(|e| e.depth() + 1).max().unwrap_or(0)
    }

    /// Number of nodes in the exponent tree.
    pub fn tree_size(&self) -> usize {
        1 + self.exps.iter().map(Ordinal::tree_size).sum::<usize>()
    }

    /// Checks that exponents are non-increasing at every level.
    pub fn is_canonical(&self) -> bool {
        self.exps.windows(2).all(|w| w[0] >= w[1]) && self.exps.iter().all(Ordinal::is_canonical)
    }
}

pub fn cmp_exponent_lists(a: &[Ordinal], b: &[Ordinal]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_exponent_lists(&self.exps, &other.exps)
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Ordinal {
    type Output = Ordinal;
    fn add(self, rhs: Ordinal) -> Ordinal {
        Ordinal::plus(&self, &rhs)
    }
}

impl<'a> Add<&'a Ordinal> for &'a Ordinal {
    type Output = Ordinal;
    fn add(self, rhs: &'a Ordinal) -> Ordinal {
        Ordinal::plus(self, rhs)
    }
}

impl From<usize> for Ordinal {
    fn from(n: usize) -> Self {
        Ordinal::from_nat(n)
    }
}

/// Writes an exponent in `atom` position: naturals and `w` bare, anything
/// else parenthesised.
fn fmt_atom(e: &Ordinal, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if let Some(n) = e.as_nat() {
        write!(f, "{n}")
    } else if *e == Ordinal::omega() {
        f.write_str("w")
    } else {
        write!(f, "({e})")
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.exps.len() {
            let e = &self.exps[i];
            let run = self.exps[i..].iter().take_while(|x| *x == e).count();
            if e.is_zero() {
                if !first {
                    f.write_str("+")?;
                }
                write!(f, "{run}")?;
                first = false;
            } else {
                for _ in 0..run {
                    if !first {
                        f.write_str("+")?;
                    }
                    first = false;
                    if e.as_nat() == Some(1) {
                        f.write_str("w")?;
                    } else {
                        f.write_str("w^")?;
                        fmt_atom(e, f)?;
                    }
                }
            }
            i += run;
        }
        Ok(())
    }
}

impl fmt::Debug for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Ordinal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        let o = c.ordinal()?;
        c.finish()?;
        Ok(o)
    }
}

// ord := term ('+' term)* ; term := 'w' '^' atom | 'w' | nat ;
// atom := nat | 'w' | '(' ord ')'
impl Cursor<'_> {
    fn omega_letter(&mut self) -> bool {
        self.eat('w') || self.eat('ω')
    }

    pub(crate) fn ordinal(&mut self) -> Result<Ordinal> {
        let mut acc = self.ordinal_term()?;
        while self.eat('+') {
            let t = self.ordinal_term()?;
            acc = &acc + &t;
        }
        Ok(acc)
    }

    fn ordinal_term(&mut self) -> Result<Ordinal> {
        if self.omega_letter() {
            if self.eat('^') {
                Ok(self.ordinal_atom()?.omega_pow())
            } else {
                Ok(Ordinal::omega())
            }
        } else {
            self.nat_ordinal()
        }
    }

    fn nat_ordinal(&mut self) -> Result<Ordinal> {
        let start = self.pos();
        let n = self.nat()?;
        if n > MAX_NAT_LITERAL {
            return Err(self.error_at(start, format!("natural literal exceeds {MAX_NAT_LITERAL}")));
        }
        Ok(Ordinal::from_nat(n as usize))
    }

    fn ordinal_atom(&mut self) -> Result<Ordinal> {
        if self.omega_letter() {
            Ok(Ordinal::omega())
        } else if self.eat('(') {
            let o = self.ordinal()?;
            self.expect(')')?;
            Ok(o)
        } else {
            self.nat_ordinal()
        }
    }
}
