//! Finite Kripke frames with relations `Rₙ` (for `◇ₙ`) and `Sₙ` (for `∇ₙ`).

mod canonical;
mod conditions;
mod enumerate;
mod sets;
mod text;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::syntax::{Formula, Sequent};

pub use canonical::{canonical_model, derives_km};
pub use conditions::{check_frame_conditions, check_rc_conditions, Violation};
pub use enumerate::{frames_up_to, SmallFrame, MAX_SMALL_NODES};
pub use sets::{NodeSet, Relation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    names: Vec<String>,
    rel_dia: BTreeMap<usize, Relation>,
    rel_nab: BTreeMap<usize, Relation>,
    root: Option<usize>,
}

impl Frame {
    pub fn with_nodes<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Frame {
            names: names.into_iter().map(Into::into).collect(),
            rel_dia: BTreeMap::new(),
            rel_nab: BTreeMap::new(),
            root: None,
        }
    }

    /// Nodes named `0, 1, …, n-1`.
    pub fn numbered(n: usize) -> Self {
        Self::with_nodes((0..n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn node(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn root(&self) -> Option<usize> {
        self.root
    }

    pub fn set_root(&mut self, x: usize) {
        self.root = Some(x);
    }

    pub fn add_dia(&mut self, n: usize, x: usize, y: usize) {
        let len = self.len();
        self.rel_dia
            .entry(n)
            .or_insert_with(|| Relation::new(len))
            .insert(x, y);
    }

    pub fn add_nab(&mut self, n: usize, x: usize, y: usize) {
        let len = self.len();
        self.rel_nab
            .entry(n)
            .or_insert_with(|| Relation::new(len))
            .insert(x, y);
    }

    /// Makes `n` count towards [`Frame::max_index`] even if `Rₙ` and `Sₙ`
    /// stay empty.
    pub fn declare_index(&mut self, n: usize) {
        let len = self.len();
        self.rel_dia.entry(n).or_insert_with(|| Relation::new(len));
        self.rel_nab.entry(n).or_insert_with(|| Relation::new(len));
    }

    /// `Rₙ`; `None` stands for the empty relation.
    pub fn dia(&self, n: usize) -> Option<&Relation> {
        self.rel_dia.get(&n)
    }

    /// `Sₙ`; `None` stands for the empty relation.
    pub fn nab(&self, n: usize) -> Option<&Relation> {
        self.rel_nab.get(&n)
    }

    pub fn dia_relations(&self) -> &BTreeMap<usize, Relation> {
        &self.rel_dia
    }

    pub fn nab_relations(&self) -> &BTreeMap<usize, Relation> {
        &self.rel_nab
    }

    /// Largest index carrying a relation of either kind, or 0.
    pub fn max_index(&self) -> usize {
        let d = self.rel_dia.keys().next_back().copied().unwrap_or(0);
        let s = self.rel_nab.keys().next_back().copied().unwrap_or(0);
        d.max(s)
    }

    /// Nodes where `f` holds under the given valuation.
    pub fn truth_set(&self, valuation: &BTreeMap<String, NodeSet>, f: &Formula) -> Result<NodeSet> {
        Ok(match f {
            Formula::Top => NodeSet::full(self.len()),
            Formula::Var(v) => match valuation.get(v) {
                Some(set) => set.clone(),
                None => {
                    return Err(Error::Unvalued {
                        node: self.names.first().cloned().unwrap_or_default(),
                        var: v.clone(),
                    })
                }
            },
            Formula::And(cs) => {
                let mut acc = NodeSet::full(self.len());
                for c in cs {
                    acc.intersect_with(&self.truth_set(valuation, c)?);
                }
                acc
            }
            Formula::Dia(n, b) => self.preimage(self.dia(*n), &self.truth_set(valuation, b)?),
            Formula::Nab(n, b) => self.preimage(self.nab(*n), &self.truth_set(valuation, b)?),
        })
    }

    fn preimage(&self, rel: Option<&Relation>, target: &NodeSet) -> NodeSet {
        match rel {
            Some(r) => r.preimage(target),
            None => NodeSet::empty(self.len()),
        }
    }
}

/// A frame together with the set of nodes where each variable holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Model {
    pub frame: Frame,
    valuation: BTreeMap<String, NodeSet>,
}

impl Model {
    pub fn new(frame: Frame) -> Self {
        Model {
            frame,
            valuation: BTreeMap::new(),
        }
    }

    /// Sets the value of `var` at `node`; other nodes default to false.
    pub fn set(&mut self, var: &str, node: usize, value: bool) {
        let len = self.frame.len();
        let set = self
            .valuation
            .entry(var.to_string())
            .or_insert_with(|| NodeSet::empty(len));
        if value {
            set.insert(node);
        } else {
            set.remove(node);
        }
    }

    pub fn truth_set(&self, f: &Formula) -> Result<NodeSet> {
        self.frame.truth_set(&self.valuation, f)
    }
}

/// `W, x ⊩ f`.
pub fn forces(m: &Model, x: usize, f: &Formula) -> Result<bool> {
    Ok(m.truth_set(f)?.contains(x))
}

/// Largest `|nodes| · |variables|` for which [`frame_validates`] enumerates
/// valuations.
pub const MAX_VALUATION_BITS: usize = 20;

/// Whether `lhs → rhs` holds at every node under every valuation.
pub fn frame_validates(frame: &Frame, s: &Sequent) -> Result<bool> {
    let mut vars: Vec<&str> = s.lhs.variables().into_iter().collect();
    vars.extend(s.rhs.variables());
    vars.sort_unstable();
    vars.dedup();
    let n = frame.len();
    let bits = n * vars.len();
    if bits > MAX_VALUATION_BITS {
        return Err(Error::TooManyValuations(bits));
    }
    for code in 0u64..(1u64 << bits) {
        let valuation: BTreeMap<String, NodeSet> = vars
            .iter()
            .enumerate()
            .map(|(k, v)| {
                let mut set = NodeSet::empty(n);
                for x in 0..n {
                    if code >> (k * n + x) & 1 == 1 {
                        set.insert(x);
                    }
                }
                (v.to_string(), set)
            })
            .collect();
        let lhs = frame.truth_set(&valuation, &s.lhs)?;
        let rhs = frame.truth_set(&valuation, &s.rhs)?;
        if !lhs.is_subset(&rhs) {
            return Ok(false);
        }
    }
    Ok(true)
}
