use std::str::FromStr;

use super::{Formula, Sequent, MAX_INDEX};
use crate::cursor::Cursor;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parsed {
    Formula(Formula),
    Sequent(Sequent),
}

/// Parses a formula, or a sequent when the text contains `|-`.
pub fn parse(text: &str) -> Result<Parsed> {
    let mut c = Cursor::new(text);
    let lhs = c.formula()?;
    if c.eat_str("|-") {
        let rhs = c.formula()?;
        c.finish()?;
        Ok(Parsed::Sequent(Sequent { lhs, rhs }))
    } else {
        c.finish()?;
        Ok(Parsed::Formula(lhs))
    }
}

impl FromStr for Formula {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut c = Cursor::new(s);
        let f = c.formula()?;
        c.finish()?;
        Ok(f)
    }
}

impl FromStr for Sequent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match parse(s)? {
            Parsed::Sequent(seq) => Ok(seq),
            Parsed::Formula(_) => Err(Error::Parse {
                pos: s.len(),
                message: "expected `|-`".into(),
            }),
        }
    }
}

// formula := term ('&' term)* ; term := 'T' | ident | '<' nat '>' term
//          | '{' nat '}' term | '(' formula ')'
impl Cursor<'_> {
    pub(crate) fn formula(&mut self) -> Result<Formula> {
        let mut parts = vec![self.formula_term()?];
        while self.eat('&') {
            parts.push(self.formula_term()?);
        }
        Ok(Formula::and(parts))
    }

    fn modality_index(&mut self) -> Result<usize> {
        let n = self.nat()?;
        if n > MAX_INDEX as u64 {
            return Err(Error::IndexOverflow {
                index: n,
                max: MAX_INDEX,
            });
        }
        Ok(n as usize)
    }

    fn formula_term(&mut self) -> Result<Formula> {
        if self.eat('<') {
            let n = self.modality_index()?;
            self.expect('>')?;
            Ok(Formula::dia(n, self.formula_term()?))
        } else if self.eat('{') {
            let n = self.modality_index()?;
            self.expect('}')?;
            Ok(Formula::nab(n, self.formula_term()?))
        } else if self.eat('(') {
            let f = self.formula()?;
            self.expect(')')?;
            Ok(f)
        } else if let Some(id) = self.ident() {
            Ok(if id == "T" {
                Formula::Top
            } else {
                Formula::var(id)
            })
        } else {
            Err(self.error("expected a formula"))
        }
    }
}
