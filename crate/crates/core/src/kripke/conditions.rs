use std::fmt;

use super::{Frame, Relation};

/// A failed frame condition with the nodes witnessing the failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub condition: &'static str,
    pub m: Option<usize>,
    pub n: usize,
    pub witness: Vec<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [", self.condition)?;
        if let Some(m) = self.m {
            write!(f, "m={m}, ")?;
        }
        write!(f, "n={}]: {}", self.n, self.witness.join(" "))
    }
}

/// Checks the conditions under which a frame validates RC∇, for all
/// indices `m, n ≤ max_index`:
///
/// * `Rₙ` transitive, `Rₙ ⊆ Rₘ` and `Rₙ⁻¹Rₘ ⊆ Rₘ` for `m < n`;
/// * `Sₙ` a preorder, `Sₙ ⊆ Sₘ` and `Sₙ⁻¹Sₘ ⊆ Sₘ` for `m < n`;
/// * `Rₙ ⊆ Sₙ`, and `SₙRₘ ⊆ Rₘ`, `RₘSₙ ⊆ Rₘ` for `m ≤ n`.
///
/// Compositions read left to right: `x (AB) z` iff `x A y B z` for some `y`,
/// and `x (A⁻¹B) z` iff `y A x`, `y B z` for some `y`.
pub fn check_frame_conditions(frame: &Frame) -> Vec<Violation> {
    let mut out = check_rc_conditions(frame);
    let top = frame.max_index();
    let empty = Relation::new(frame.len());
    let r = |n: usize| frame.dia(n).unwrap_or(&empty);
    let s = |n: usize| frame.nab(n).unwrap_or(&empty);
    let mut push = |condition, m, n, w: Option<Vec<usize>>| {
        if let Some(w) = w {
            out.push(Violation {
                condition,
                m,
                n,
                witness: w.iter().map(|&x| frame.name(x).to_string()).collect(),
            });
        }
    };
    for n in 0..=top {
        push("(ii) S_n transitive", None, n, composed_outside(s(n), s(n), s(n)));
        push(
            "(ii) S_n reflexive",
            None,
            n,
            (0..frame.len()).find(|&x| !s(n).contains(x, x)).map(|x| vec![x]),
        );
        for m in 0..n {
            push("(ii) S_n ⊆ S_m", Some(m), n, not_included(s(n), s(m)));
            push("(ii) S_n^-1 S_m ⊆ S_m", Some(m), n, inverse_composed_outside(s(n), s(m), s(m)));
        }
    }
    for n in 0..=top {
        push("(iii) R_n ⊆ S_n", None, n, not_included(r(n), s(n)));
        for m in 0..=n {
            push("(iii) S_n R_m ⊆ R_m", Some(m), n, composed_outside(s(n), r(m), r(m)));
            push("(iii) R_m S_n ⊆ R_m", Some(m), n, composed_outside(r(m), s(n), r(m)));
        }
    }
    out
}

/// The `Rₙ` conditions alone, i.e. those of an RC-frame.
pub fn check_rc_conditions(frame: &Frame) -> Vec<Violation> {
    let mut out = Vec::new();
    let top = frame.max_index();
    let empty = Relation::new(frame.len());
    let r = |n: usize| frame.dia(n).unwrap_or(&empty);
    let mut push = |condition, m, n, w: Option<Vec<usize>>| {
        if let Some(w) = w {
            out.push(Violation {
                condition,
                m,
                n,
                witness: w.iter().map(|&x| frame.name(x).to_string()).collect(),
            });
        }
    };
    for n in 0..=top {
        push("(i) R_n transitive", None, n, composed_outside(r(n), r(n), r(n)));
        for m in 0..n {
            push("(i) R_n ⊆ R_m", Some(m), n, not_included(r(n), r(m)));
            push("(i) R_n^-1 R_m ⊆ R_m", Some(m), n, inverse_composed_outside(r(n), r(m), r(m)));
        }
    }
    out
}

/// A pair of `a` missing from `b`.
fn not_included(a: &Relation, b: &Relation) -> Option<Vec<usize>> {
    a.pairs().find(|&(x, y)| !b.contains(x, y)).map(|(x, y)| vec![x, y])
}

/// `x a y b z` with `not x c z`.
fn composed_outside(a: &Relation, b: &Relation, c: &Relation) -> Option<Vec<usize>> {
    for (x, y) in a.pairs() {
        if let Some(z) = b.successors(y).iter().find(|&z| !c.contains(x, z)) {
            return Some(vec![x, y, z]);
        }
    }
    None
}

/// `x a y`, `x b z` with `not y c z`; the witness lists `x, y, z`.
fn inverse_composed_outside(a: &Relation, b: &Relation, c: &Relation) -> Option<Vec<usize>> {
    for (x, y) in a.pairs() {
        if let Some(z) = b.successors(x).iter().find(|&z| !c.contains(y, z)) {
            return Some(vec![x, y, z]);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[Violation]) -> Vec<&'static str> {
        v.iter().map(|v| v.condition).collect()
    }

    #[test]
    fn singleton_needs_reflexive_s() {
        let fr = Frame::numbered(1);
        assert_eq!(names(&check_frame_conditions(&fr)), vec!["(ii) S_n reflexive"]);
    }

    #[test]
    fn r1_outside_r0() {
        let mut fr = Frame::numbered(2);
        for x in 0..2 {
            for y in 0..2 {
                fr.add_nab(0, x, y);
            }
            fr.add_nab(1, x, x);
        }
        fr.add_nab(1, 0, 1);
        fr.add_dia(1, 0, 1);
        let v = check_frame_conditions(&fr);
        assert_eq!(names(&v), vec!["(i) R_n ⊆ R_m"]);
        assert_eq!(v[0].witness, vec!["0", "1"]);
        assert_eq!(v[0].to_string(), "(i) R_n ⊆ R_m [m=0, n=1]: 0 1");
    }

    #[test]
    fn missing_transitivity_is_reported_with_a_path() {
        let mut fr = Frame::numbered(3);
        fr.add_dia(0, 0, 1);
        fr.add_dia(0, 1, 2);
        let v = check_rc_conditions(&fr);
        assert_eq!(names(&v), vec!["(i) R_n transitive"]);
        assert_eq!(v[0].witness, vec!["0", "1", "2"]);
    }
}
