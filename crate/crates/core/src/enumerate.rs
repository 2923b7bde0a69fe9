//! Exhaustive generation of variable-free formulas, words and ordinals for
//! bounded checks.
//!
//! Formulas are listed once up to associativity and commutativity of `∧`:
//! a conjunction is a sorted multiset of at least two modal conjuncts.

use crate::ignatiev::{self, Point};
use crate::kripke::{Frame, NodeSet};
use crate::ordinal::Ordinal;
use crate::syntax::Formula;
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Measure {
    /// Number of `◇`/`∇` occurrences.
    Modalities,
    /// [`Formula::size`]: symbols including one per binary `∧`.
    Size,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub measure: Measure,
    pub max: usize,
    pub max_index: usize,
    /// Whether `∇ₙ` may occur.
    pub nabla: bool,
}

impl Bounds {
    pub fn modalities(max: usize, max_index: usize, nabla: bool) -> Self {
        Bounds {
            measure: Measure::Modalities,
            max,
            max_index,
            nabla,
        }
    }

    pub fn size(max: usize, max_index: usize, nabla: bool) -> Self {
        Bounds {
            measure: Measure::Size,
            max,
            max_index,
            nabla,
        }
    }

    fn top_weight(&self) -> usize {
        match self.measure {
            Measure::Modalities => 0,
            Measure::Size => 1,
        }
    }

    fn and_weight(&self) -> usize {
        self.top_weight()
    }
}

/// One catalog entry in terms of earlier entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Node {
    Top,
    Dia(usize, usize),
    Nab(usize, usize),
    And(Vec<usize>),
}

/// Every formula within some [`Bounds`], each subformula referring to an
/// earlier entry so values can be computed in one bottom-up pass.
#[derive(Clone, Debug)]
pub struct Catalog {
    formulas: Vec<Formula>,
    nodes: Vec<Node>,
    weights: Vec<usize>,
}

impl Catalog {
    pub fn new(bounds: Bounds) -> Self {
        let mut cat = Catalog {
            formulas: Vec::new(),
            nodes: Vec::new(),
            weights: Vec::new(),
        };
        let mut by_weight: Vec<Vec<usize>> = Vec::new();
        let mut modal: Vec<usize> = Vec::new();
        for w in 0..=bounds.max {
            let mut level = Vec::new();
            if w == bounds.top_weight() {
                level.push(cat.push(Formula::Top, Node::Top, w));
            }
            let mut new_modal = Vec::new();
            if w >= 1 {
                for &body in &by_weight[w - 1] {
                    for i in 0..=bounds.max_index {
                        let b = cat.formulas[body].clone();
                        new_modal.push(cat.push(Formula::dia(i, b.clone()), Node::Dia(i, body), w));
                        if bounds.nabla {
                            new_modal.push(cat.push(Formula::nab(i, b), Node::Nab(i, body), w));
                        }
                    }
                }
            }
            let mut conj = Vec::new();
            collect_multisets(&cat.weights, &modal, 0, w, bounds.and_weight(), &mut Vec::new(), &mut conj);
            level.extend(&new_modal);
            for parts in conj {
                let f = Formula::and(parts.iter().map(|&p| cat.formulas[p].clone()));
                level.push(cat.push(f, Node::And(parts), w));
            }
            modal.extend(new_modal);
            by_weight.push(level);
        }
        cat
    }

    fn push(&mut self, f: Formula, node: Node, weight: usize) -> usize {
        self.formulas.push(f);
        self.nodes.push(node);
        self.weights.push(weight);
        self.formulas.len() - 1
    }

    pub fn len(&self) -> usize {
        self.formulas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.formulas.is_empty()
    }

    pub fn formulas(&self) -> &[Formula] {
        &self.formulas
    }

    pub fn formula(&self, id: usize) -> &Formula {
        &self.formulas[id]
    }

    pub fn node(&self, id: usize) -> &Node {
        &self.nodes[id]
    }

    pub fn into_formulas(self) -> Vec<Formula> {
        self.formulas
    }

    /// Truth set of every entry in the frame (no variables occur).
    pub fn truth_sets(&self, frame: &Frame) -> Vec<NodeSet> {
        let len = frame.len();
        let mut out: Vec<NodeSet> = Vec::with_capacity(self.len());
        for node in &self.nodes {
            let set = match node {
                Node::Top => NodeSet::full(len),
                Node::Dia(i, b) => frame
                    .dia(*i)
                    .map_or_else(|| NodeSet::empty(len), |r| r.preimage(&out[*b])),
                Node::Nab(i, b) => frame
                    .nab(*i)
                    .map_or_else(|| NodeSet::empty(len), |r| r.preimage(&out[*b])),
                Node::And(parts) => {
                    let mut acc = NodeSet::full(len);
                    for &p in parts {
                        acc.intersect_with(&out[p]);
                    }
                    acc
                }
            };
            out.push(set);
        }
        out
    }

    /// Value of every entry in the algebra of points.
    pub fn points(&self) -> Vec<Point> {
        let mut out: Vec<Point> = Vec::with_capacity(self.len());
        for node in &self.nodes {
            let p = match node {
                Node::Top => Point::zero(),
                Node::Dia(i, b) => ignatiev::dia(*i, &out[*b]),
                Node::Nab(i, b) => ignatiev::nab(*i, &out[*b]),
                Node::And(parts) => parts
                    .iter()
                    .fold(Point::zero(), |acc, &p| ignatiev::meet(&acc, &out[p])),
            };
            out.push(p);
        }
        out
    }
}

/// Nondecreasing id sequences of length ≥ 2 drawn from `modal`, whose
/// weights plus `sep` per extra part sum to exactly `target`.
fn collect_multisets(
    weights: &[usize],
    modal: &[usize],
    from: usize,
    target: usize,
    sep: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if target == 0 && chosen.len() >= 2 {
        out.push(chosen.clone());
    }
    let extra = if chosen.is_empty() { 0 } else { sep };
    for (pos, &id) in modal.iter().enumerate().skip(from) {
        let cost = weights[id] + extra;
        if cost > target {
            // `modal` is ordered by weight.
            break;
        }
        chosen.push(id);
        collect_multisets(weights, modal, pos, target - cost, sep, chosen, out);
        chosen.pop();
    }
}

pub fn formulas(bounds: Bounds) -> Vec<Formula> {
    Catalog::new(bounds).into_formulas()
}

/// All words of length at most `max_len` with letters in `min..=max`.
pub fn words(max_len: usize, min: usize, max: usize) -> Vec<Word> {
    let mut out = vec![Word::top()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for l in min..=max {
                let mut v: Vec<usize> = Vec::clone(w);
                v.push(l);
                out.push(Word::new(v.clone()));
                next.push(v);
            }
        }
        frontier = next;
    }
    out
}

/// Canonical ordinals of nesting depth at most `depth` with at most `width`
/// terms at every level, whose innermost exponents come from `base`.
pub fn ordinals(depth: usize, width: usize, base: &[Ordinal]) -> Vec<Ordinal> {
    let mut exps: Vec<Ordinal> = base.to_vec();
    exps.sort();
    exps.dedup();
    let mut current = sums(&exps, width);
    for _ in 1..depth {
        current = sums(&current, width);
    }
    current
}

/// All `ω^e₁ + … + ω^eₖ` with `k ≤ width` and nonincreasing `eᵢ ∈ exps`.
fn sums(exps: &[Ordinal], width: usize) -> Vec<Ordinal> {
    let mut sorted = exps.to_vec();
    sorted.sort_by(|a, b| b.cmp(a));
    sorted.dedup();
    let mut out = vec![Ordinal::zero()];
    let mut frontier: Vec<(usize, Vec<Ordinal>)> = vec![(0, Vec::new())];
    for _ in 0..width {
        let mut next = Vec::new();
        for (from, terms) in &frontier {
            for (k, e) in sorted.iter().enumerate().skip(*from) {
                let mut t = terms.clone();
                t.push(e.clone());
                out.push(Ordinal::sum_of_powers(t.clone()));
                next.push((k, t));
            }
        }
        frontier = next;
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diamond_only_counts() {
        assert_eq!(formulas(Bounds::modalities(0, 2, false)), vec![Formula::Top]);
        assert_eq!(formulas(Bounds::modalities(1, 2, false)).len(), 4);
        assert_eq!(formulas(Bounds::modalities(3, 2, false)).len(), 101);
    }

    #[test]
    fn entries_are_distinct_and_within_bounds() {
        let b = Bounds::size(6, 1, true);
        let fs = formulas(b);
        let mut sorted = fs.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), fs.len());
        assert!(fs.iter().all(|f| f.size() <= 6));
        assert!(fs.iter().all(|f| f.index_range().map_or(true, |(_, hi)| hi <= 1)));
        let m = formulas(Bounds::modalities(3, 1, true));
        assert!(m.iter().all(|f| f.modality_count() <= 3));
    }

    #[test]
    fn size_measure_matches_formula_size() {
        let fs: Vec<String> = formulas(Bounds::size(5, 0, false))
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(fs, vec!["T", "<0>T", "<0><0>T", "<0><0><0>T", "<0><0><0><0>T", "<0>T & <0>T"]);
    }

    #[test]
    fn bulk_values_match_direct_evaluation() {
        let cat = Catalog::new(Bounds::modalities(3, 2, true));
        for (f, p) in cat.formulas().iter().zip(cat.points()) {
            assert_eq!(ignatiev::eval(f).unwrap(), p, "{f}");
        }
        let frame = crate::kripke::canonical_model(&"<1><0>T & <2>T".parse().unwrap()).unwrap();
        let sets = cat.truth_sets(&frame);
        let valuation = Default::default();
        for (f, s) in cat.formulas().iter().zip(&sets) {
            assert_eq!(&frame.truth_set(&valuation, f).unwrap(), s, "{f}");
        }
    }

    #[test]
    fn word_and_ordinal_generators() {
        assert_eq!(words(2, 0, 1).len(), 7);
        assert_eq!(words(0, 0, 5), vec![Word::top()]);
        let base = [Ordinal::zero(), Ordinal::one()];
        // 0, 1, 2, w, w+1, w*2
        assert_eq!(ordinals(1, 2, &base).len(), 6);
        assert!(ordinals(2, 2, &base).iter().all(Ordinal::is_canonical));
    }
}
