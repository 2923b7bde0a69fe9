//! Conservativity spectra: sequences `(α₀, α₁, …)` with
//! `α_{i+1} ≤ ℓ(αᵢ)`, ending either in zeros or constantly in ε₀.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::cursor::Cursor;
use crate::error::{Error, Result};
use crate::ignatiev::{self, Point};
use crate::normal_form;
use crate::ordinal::{Ordinal, MAX_NAT_LITERAL};
use crate::syntax::Formula;

/// An ordinal in Cantor normal form whose exponents may mention ε₀.
/// `ω^ε₀` is identified with `Eps0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ExtOrdinal {
    Eps0,
    Cnf(Vec<ExtOrdinal>),
}

impl ExtOrdinal {
    pub fn zero() -> Self {
        ExtOrdinal::Cnf(Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtOrdinal::Cnf(v) if v.is_empty())
    }

    /// `ω^e`, folding `ω^ε₀` back to `ε₀`.
    pub fn omega_pow(e: ExtOrdinal) -> Self {
        match e {
            ExtOrdinal::Eps0 => ExtOrdinal::Eps0,
            e => ExtOrdinal::Cnf(vec![e]),
        }
    }

    fn exponents(&self) -> Vec<ExtOrdinal> {
        match self {
            ExtOrdinal::Eps0 => vec![ExtOrdinal::Eps0],
            ExtOrdinal::Cnf(v) => v.clone(),
        }
    }

    fn from_exponents(exps: Vec<ExtOrdinal>) -> Self {
        if let [ExtOrdinal::Eps0] = exps[..] {
            ExtOrdinal::Eps0
        } else {
            ExtOrdinal::Cnf(exps)
        }
    }

    /// `ε₀·k`.
    pub fn eps0_times(k: usize) -> Self {
        Self::from_exponents(vec![ExtOrdinal::Eps0; k])
    }

    /// `ω^{ε₀·k}`, which is `ε₀^k`.
    pub fn eps0_pow(k: usize) -> Self {
        Self::omega_pow(Self::eps0_times(k))
    }

    pub fn add(&self, other: &ExtOrdinal) -> ExtOrdinal {
        let b = other.exponents();
        let Some(lead) = b.first() else {
            return self.clone();
        };
        let mut exps: Vec<ExtOrdinal> = self.exponents().into_iter().take_while(|e| e >= lead).collect();
        exps.extend(b);
        Self::from_exponents(exps)
    }

    /// Last exponent; `ℓ(ε₀) = ε₀`.
    pub fn ell(&self) -> ExtOrdinal {
        match self {
            ExtOrdinal::Eps0 => ExtOrdinal::Eps0,
            ExtOrdinal::Cnf(v) => v.last().cloned().unwrap_or_else(Self::zero),
        }
    }

    pub fn mentions_eps0(&self) -> bool {
        match self {
            ExtOrdinal::Eps0 => true,
            ExtOrdinal::Cnf(v) => v.iter().any(ExtOrdinal::mentions_eps0),
        }
    }

    pub fn to_ordinal(&self) -> Option<Ordinal> {
        match self {
            ExtOrdinal::Eps0 => None,
            ExtOrdinal::Cnf(v) => v
                .iter()
                .map(ExtOrdinal::to_ordinal)
                .collect::<Option<Vec<_>>>()
                .map(Ordinal::sum_of_powers),
        }
    }

    fn as_nat(&self) -> Option<usize> {
        match self {
            ExtOrdinal::Cnf(v) if v.iter().all(ExtOrdinal::is_zero) => Some(v.len()),
            _ => None,
        }
    }

    /// `Some(k)` for `ε₀·k` with `k ≥ 1`.
    fn as_eps0_multiple(&self) -> Option<usize> {
        match self {
            ExtOrdinal::Eps0 => Some(1),
            ExtOrdinal::Cnf(v) if !v.is_empty() && v.iter().all(|e| *e == ExtOrdinal::Eps0) => {
                Some(v.len())
            }
            _ => None,
        }
    }
}

impl From<&Ordinal> for ExtOrdinal {
    fn from(a: &Ordinal) -> Self {
        ExtOrdinal::Cnf(a.exponents().iter().map(ExtOrdinal::from).collect())
    }
}

fn cmp_lists(a: &[ExtOrdinal], b: &[ExtOrdinal]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

impl Ord for ExtOrdinal {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtOrdinal::Eps0, ExtOrdinal::Eps0) => Ordering::Equal,
            (ExtOrdinal::Eps0, ExtOrdinal::Cnf(v)) => cmp_lists(&[ExtOrdinal::Eps0], v),
            (ExtOrdinal::Cnf(v), ExtOrdinal::Eps0) => cmp_lists(v, &[ExtOrdinal::Eps0]),
            (ExtOrdinal::Cnf(a), ExtOrdinal::Cnf(b)) => cmp_lists(a, b),
        }
    }
}

impl PartialOrd for ExtOrdinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn fmt_ext_atom(e: &ExtOrdinal, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if let Some(n) = e.as_nat() {
        write!(f, "{n}")
    } else if *e == ExtOrdinal::Eps0 || *e == ExtOrdinal::Cnf(vec![ExtOrdinal::Cnf(vec![ExtOrdinal::zero()])]) {
        write!(f, "{e}")
    } else {
        write!(f, "({e})")
    }
}

impl fmt::Display for ExtOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps = match self {
            ExtOrdinal::Eps0 => return f.write_str("e0"),
            ExtOrdinal::Cnf(v) if v.is_empty() => return f.write_str("0"),
            ExtOrdinal::Cnf(v) => v,
        };
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if !std::mem::take(&mut first) {
                f.write_str("+")?;
            }
            Ok(())
        };
        let mut i = 0;
        while i < exps.len() {
            let e = &exps[i];
            let run = exps[i..].iter().take_while(|x| *x == e).count();
            if e.is_zero() {
                sep(f)?;
                write!(f, "{run}")?;
            } else if *e == ExtOrdinal::Eps0 {
                sep(f)?;
                if run == 1 {
                    f.write_str("e0")?;
                } else {
                    write!(f, "e0*{run}")?;
                }
            } else {
                for _ in 0..run {
                    sep(f)?;
                    if let Some(k) = e.as_eps0_multiple() {
                        write!(f, "e0^{k}")?;
                    } else if e.as_nat() == Some(1) {
                        f.write_str("w")?;
                    } else {
                        f.write_str("w^")?;
                        fmt_ext_atom(e, f)?;
                    }
                }
            }
            i += run;
        }
        Ok(())
    }
}

impl fmt::Debug for ExtOrdinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ext := term ('+' term)* ; term := 'e0' ('*' nat | '^' nat)? | 'w' ('^' atom)? | nat ;
// atom := nat | 'w' | 'e0' | '(' ext ')'
impl Cursor<'_> {
    fn ext_ordinal(&mut self) -> Result<ExtOrdinal> {
        let mut acc = self.ext_term()?;
        while self.eat('+') {
            let t = self.ext_term()?;
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    fn small_nat(&mut self) -> Result<usize> {
        let start = self.pos();
        let n = self.nat()?;
        if n > MAX_NAT_LITERAL {
            return Err(self.error_at(start, format!("natural literal exceeds {MAX_NAT_LITERAL}")));
        }
        Ok(n as usize)
    }

    fn ext_term(&mut self) -> Result<ExtOrdinal> {
        if self.eat_str("e0") {
            if self.eat('*') {
                let k = self.small_nat()?;
                Ok(ExtOrdinal::eps0_times(k))
            } else if self.eat('^') {
                let k = self.small_nat()?;
                Ok(if k == 0 {
                    ExtOrdinal::Cnf(vec![ExtOrdinal::zero()])
                } else {
                    ExtOrdinal::eps0_pow(k)
                })
            } else {
                Ok(ExtOrdinal::Eps0)
            }
        } else if self.eat('w') || self.eat('ω') {
            if self.eat('^') {
                Ok(ExtOrdinal::omega_pow(self.ext_atom()?))
            } else {
                Ok(ExtOrdinal::Cnf(vec![ExtOrdinal::Cnf(vec![ExtOrdinal::zero()])]))
            }
        } else {
            Ok(ExtOrdinal::Cnf(vec![ExtOrdinal::zero(); self.small_nat()?]))
        }
    }

    fn ext_atom(&mut self) -> Result<ExtOrdinal> {
        if self.eat_str("e0") {
            Ok(ExtOrdinal::Eps0)
        } else if self.eat('w') || self.eat('ω') {
            Ok(ExtOrdinal::Cnf(vec![ExtOrdinal::Cnf(vec![ExtOrdinal::zero()])]))
        } else if self.eat('(') {
            let e = self.ext_ordinal()?;
            self.expect(')')?;
            Ok(e)
        } else {
            Ok(ExtOrdinal::Cnf(vec![ExtOrdinal::zero(); self.small_nat()?]))
        }
    }
}

impl FromStr for ExtOrdinal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        let e = c.ext_ordinal()?;
        c.finish()?;
        Ok(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tail {
    Zero,
    Eps0,
}

impl Tail {
    fn value(self) -> ExtOrdinal {
        match self {
            Tail::Zero => ExtOrdinal::zero(),
            Tail::Eps0 => ExtOrdinal::Eps0,
        }
    }
}

/// A finite prefix followed by a constant tail. Trailing prefix entries
/// equal to the tail are dropped, so equal sequences compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Spectrum {
    prefix: Vec<ExtOrdinal>,
    tail: Tail,
}

impl Spectrum {
    pub fn new(mut prefix: Vec<ExtOrdinal>, tail: Tail) -> Self {
        let t = tail.value();
        while prefix.last() == Some(&t) {
            prefix.pop();
        }
        Spectrum { prefix, tail }
    }

    pub fn zero() -> Self {
        Spectrum::new(Vec::new(), Tail::Zero)
    }

    pub fn prefix(&self) -> &[ExtOrdinal] {
        &self.prefix
    }

    pub fn tail(&self) -> Tail {
        self.tail
    }

    pub fn get(&self, i: usize) -> ExtOrdinal {
        self.prefix.get(i).cloned().unwrap_or_else(|| self.tail.value())
    }

    /// The first `i + 1` with `α_{i+1} > ℓ(αᵢ)`, if any.
    pub fn first_violation(&self) -> Option<usize> {
        (0..self.prefix.len()).find(|&i| self.get(i + 1) > self.prefix[i].ell()).map(|i| i + 1)
    }

    pub fn is_valid(&self) -> bool {
        self.first_violation().is_none()
    }

    /// The point with these coordinates, for valid zero-tailed spectra
    /// below ε₀.
    pub fn to_point(&self) -> Result<Point> {
        if self.tail == Tail::Eps0 {
            return Err(Error::Unrepresentable(format!("{self} has an epsilon_0 tail")));
        }
        if let Some(i) = self.first_violation() {
            return Err(Error::Unrepresentable(format!("{self} violates the constraint at index {i}")));
        }
        let coords = self
            .prefix
            .iter()
            .map(|e| {
                e.to_ordinal()
                    .ok_or_else(|| Error::Unrepresentable(format!("entry {e} is not below epsilon_0")))
            })
            .collect::<Result<Vec<_>>>()?;
        Point::new(coords)
    }

    pub fn of_point(p: &Point) -> Self {
        Spectrum::new(p.coords().iter().map(ExtOrdinal::from).collect(), Tail::Zero)
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<String> = self.prefix.iter().map(ToString::to_string).collect();
        match self.tail {
            Tail::Zero if items.is_empty() => items.push("0".into()),
            Tail::Zero => {}
            Tail::Eps0 => items.push("e0...".into()),
        }
        f.write_str(&items.join(", "))
    }
}

impl FromStr for Spectrum {
    type Err = Error;

    /// Comma-separated entries; a final `e0...` (or `0...`) sets the tail.
    fn from_str(s: &str) -> Result<Self> {
        let mut prefix = Vec::new();
        let mut tail = Tail::Zero;
        let parts: Vec<&str> = s.split(',').collect();
        let mut offset = 0;
        for (k, part) in parts.iter().enumerate() {
            let item = part.trim();
            if let Some(body) = item.strip_suffix("...") {
                if k + 1 != parts.len() {
                    return Err(Error::Parse {
                        pos: offset,
                        message: "`...` may only end the spectrum".into(),
                    });
                }
                tail = match body.trim() {
                    "e0" => Tail::Eps0,
                    "0" => Tail::Zero,
                    _ => {
                        return Err(Error::Parse {
                            pos: offset,
                            message: "a repeated tail must be `0...` or `e0...`".into(),
                        })
                    }
                };
            } else {
                let e: ExtOrdinal = item.parse().map_err(|err| match err {
                    Error::Parse { pos, message } => Error::Parse {
                        pos: offset + pos,
                        message,
                    },
                    other => other,
                })?;
                prefix.push(e);
            }
            offset += part.len() + 1;
        }
        Ok(Spectrum::new(prefix, tail))
    }
}

pub fn of_formula(f: &Formula) -> Result<Spectrum> {
    Ok(Spectrum::of_point(&ignatiev::eval(f)?))
}

/// The fat normal form with this spectrum.
pub fn to_formula(s: &Spectrum) -> Result<Formula> {
    Ok(normal_form::fat_nf_of_point(&s.to_point()?).to_formula())
}

pub fn nab_theory(n: usize, s: &Spectrum) -> Result<Spectrum> {
    Ok(Spectrum::of_point(&ignatiev::nab(n, &s.to_point()?)))
}

pub fn dia_theory(n: usize, s: &Spectrum) -> Result<Spectrum> {
    Ok(Spectrum::of_point(&ignatiev::dia(n, &s.to_point()?)))
}

/// Spectra of some standard arithmetical theories.
pub fn examples_table() -> Vec<(&'static str, Spectrum)> {
    let w = |s: &str| ExtOrdinal::from(&s.parse::<Ordinal>().expect("literal"));
    vec![
        ("ISigma1", Spectrum::new(vec![w("w^w"), w("w"), w("1")], Tail::Zero)),
        ("PRA", Spectrum::new(vec![w("w^w"), w("w")], Tail::Zero)),
        ("PA", Spectrum::new(Vec::new(), Tail::Eps0)),
        ("PA+Con(PA)", Spectrum::new(vec![ExtOrdinal::eps0_times(2)], Tail::Eps0)),
        (
            "PA+PH",
            Spectrum::new(vec![ExtOrdinal::eps0_pow(2), ExtOrdinal::eps0_times(2)], Tail::Eps0),
        ),
    ]
}

pub fn example(name: &str) -> Option<Spectrum> {
    examples_table()
        .into_iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|(_, s)| s)
}
