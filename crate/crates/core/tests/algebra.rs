mod common;

use common::{formula, ord, point_set};
use proptest::prelude::*;
use rcn_core::enumerate::{formulas, words, Bounds};
use rcn_core::ignatiev::{self, dia, leq, meet, nab, Point};
use rcn_core::Formula;

fn derives(a: &Formula, b: &Formula) -> bool {
    ignatiev::derives(a, b).unwrap()
}

#[test]
fn operations_stay_inside_the_point_set() {
    let ps = point_set();
    // 0; 1; 2; w, (w, 1); w+1; w*2, (w*2, 1); w^w with second coordinate
    // 0, 1, 2, w and (w^w, w, 1).
    assert_eq!(ps.len(), 13);
    for p in &ps {
        for n in 0..=3 {
            assert!(dia(n, p).is_valid(), "dia {n} {p}");
            assert!(nab(n, p).is_valid(), "nab {n} {p}");
        }
        for q in &ps {
            assert!(meet(p, q).is_valid(), "{p} meet {q}");
        }
    }
}

#[test]
fn meet_is_a_greatest_lower_bound() {
    let ps = point_set();
    for p in &ps {
        assert_eq!(&meet(p, p), p);
        for q in &ps {
            let m = meet(p, q);
            assert_eq!(m, meet(q, p));
            assert!(leq(&m, p) && leq(&m, q));
            for r in &ps {
                if leq(r, p) && leq(r, q) {
                    assert!(leq(r, &m), "{r} below {p} and {q} but not {m}");
                }
            }
        }
    }
}

#[test]
fn meet_is_associative() {
    let ps = point_set();
    for p in &ps {
        for q in &ps {
            let pq = meet(p, q);
            for r in &ps {
                assert_eq!(meet(&pq, r), meet(p, &meet(q, r)));
            }
        }
    }
}

/// Every instance of the axioms over the given formulas is sound, and the
/// rules preserve soundness.
#[test]
fn axioms_hold_in_the_algebra() {
    let fs = formulas(Bounds::size(4, 2, true));
    let idx = 0..=2usize;
    for a in &fs {
        assert!(derives(a, a));
        assert!(derives(a, &Formula::Top));
        for n in idx.clone() {
            for op in [Formula::dia, Formula::nab] {
                assert!(derives(&op(n, op(n, a.clone())), &op(n, a.clone())), "transitivity {n} {a}");
                for m in 0..n {
                    assert!(derives(&op(n, a.clone()), &op(m, a.clone())), "monotonicity {n} {m} {a}");
                }
            }
            assert!(derives(a, &Formula::nab(n, a.clone())));
            assert!(derives(&Formula::dia(n, a.clone()), &Formula::nab(n, a.clone())));
            for m in 0..=n {
                let lhs = Formula::dia(m, Formula::nab(n, a.clone()));
                assert!(derives(&lhs, &Formula::dia(m, a.clone())), "{lhs}");
                let lhs = Formula::nab(n, Formula::dia(m, a.clone()));
                assert!(derives(&lhs, &Formula::dia(m, a.clone())), "{lhs}");
            }
        }
        for b in &fs {
            let ab = Formula::and([a.clone(), b.clone()]);
            assert!(derives(&ab, a) && derives(&ab, b));
            for n in idx.clone() {
                for op in [Formula::dia, Formula::nab] {
                    if derives(a, b) {
                        assert!(derives(&op(n, a.clone()), &op(n, b.clone())));
                    }
                    for m in 0..n {
                        let lhs = Formula::and([op(n, a.clone()), op(m, b.clone())]);
                        let rhs = op(n, Formula::and([a.clone(), op(m, b.clone())]));
                        assert!(derives(&lhs, &rhs), "{lhs} |- {rhs}");
                    }
                }
            }
        }
    }
}

#[test]
fn cut_and_conjunction_rules_preserve_derivability() {
    let fs = formulas(Bounds::size(3, 1, true));
    for a in &fs {
        for b in &fs {
            for c in &fs {
                if derives(a, b) && derives(b, c) {
                    assert!(derives(a, c));
                }
                if derives(a, b) && derives(a, c) {
                    assert!(derives(a, &Formula::and([b.clone(), c.clone()])));
                }
            }
        }
    }
}

#[test]
fn conservativity_extends_by_lower_diamonds() {
    let fs = formulas(Bounds::size(3, 2, true));
    for n in 1..=2 {
        for a in &fs {
            for b in &fs {
                if !derives(a, &Formula::nab(n, b.clone())) {
                    continue;
                }
                for c in &fs {
                    for m in 0..n {
                        let lhs = Formula::and([a.clone(), Formula::dia(m, c.clone())]);
                        let rhs = Formula::nab(n, Formula::and([b.clone(), Formula::dia(m, c.clone())]));
                        assert!(derives(&lhs, &rhs), "{lhs} |- {rhs}");
                    }
                }
            }
        }
    }
}

#[test]
fn diamonds_and_nablas_of_words_are_linearly_ordered() {
    for n in 0..=2 {
        let mut fs = Vec::new();
        for w in words(3, n, n + 2) {
            fs.push(Formula::dia(n, w.to_formula()));
            fs.push(Formula::nab(n, w.to_formula()));
        }
        for a in &fs {
            for b in &fs {
                assert!(derives(a, b) || derives(b, a), "{a} and {b}");
            }
        }
    }
}

#[test]
fn diamond_entailment_reduces_to_nabla() {
    let fs = formulas(Bounds::size(4, 2, true));
    for n in 0..=2 {
        let shifted: Vec<Formula> = fs.iter().map(|f| f.shift(n as i64).unwrap()).collect();
        for a in &shifted {
            for b in &shifted {
                let lhs = derives(&Formula::dia(n, a.clone()), &Formula::dia(n, b.clone()));
                assert_eq!(lhs, derives(a, &Formula::nab(n, b.clone())), "{a}, {b} at {n}");
            }
        }
    }
}

#[test]
fn no_formula_derives_its_own_diamond() {
    for a in formulas(Bounds::size(6, 2, true)) {
        for n in 0..=2 {
            assert!(!derives(&a, &Formula::dia(n, a.clone())), "{a} at {n}");
        }
    }
}

/// For main-axis `a`, `dia(n, a)` is the weakest point with an `Rₙ`
/// successor below `a`.
#[test]
fn diamond_is_the_weakest_predecessor() {
    let ps = point_set();
    for a in ps.iter().filter(|p| p.is_main_axis()) {
        for n in 0..=2 {
            let d = dia(n, a);
            let mut witness: Vec<_> = (0..n).map(|i| d.coord(i).clone()).collect();
            witness.extend((n..=3).map(|i| a.coord(i).clone()));
            let witness = Point::new(witness).unwrap();
            assert!(ignatiev::r_n(n, &d, &witness) && leq(&witness, a));
            for g in &ps {
                if ps.iter().any(|b| ignatiev::r_n(n, g, b) && leq(b, a)) {
                    assert!(leq(g, &d), "{g} reaches below {a} but is weaker than {d}");
                }
            }
        }
    }
}

#[test]
fn main_axis_witnesses_on_the_point_set() {
    for p in point_set() {
        for n in 0..=2 {
            let w = ignatiev::main_axis_witness(n, &p);
            assert!(w.is_main_axis(), "{w}");
            assert!(leq(&w, &p), "{w} not below {p} at {n}");
            assert_eq!(dia(n, &w), dia(n, &p));
        }
    }
}

#[test]
fn main_axis_witness_needs_a_long_enough_chain() {
    let p = Point::new(vec![ord("w^(w+1)"), ord("w"), ord("1")]).unwrap();
    let w = ignatiev::main_axis_witness(0, &p);
    assert_eq!(dia(0, &w), dia(0, &p));
    assert!(!leq(&w, &p));
}

#[test]
fn values_of_words_lie_on_the_main_axis() {
    for w in words(5, 0, 3) {
        let p = ignatiev::point_of_word(&w);
        assert!(p.is_main_axis());
        assert_eq!(ignatiev::eval(&w.to_formula()).unwrap(), p);
        let back = ignatiev::word_of_point(&p).unwrap();
        assert_eq!(ignatiev::point_of_word(&back), p);
    }
}

proptest! {
    #[test]
    fn conjunction_is_meet(a in formula(3, false), b in formula(3, false)) {
        let ab = Formula::and([a.clone(), b.clone()]);
        let pa = ignatiev::eval(&a).unwrap();
        let pb = ignatiev::eval(&b).unwrap();
        prop_assert_eq!(ignatiev::eval(&ab).unwrap(), meet(&pa, &pb));
    }

    #[test]
    fn meet_laws_on_random_values(a in formula(3, false), b in formula(3, false), c in formula(3, false)) {
        let [p, q, r] = [a, b, c].map(|f| ignatiev::eval(&f).unwrap());
        let m = meet(&p, &q);
        prop_assert_eq!(meet(&m, &r), meet(&p, &meet(&q, &r)));
        prop_assert_eq!(&m, &meet(&q, &p));
        prop_assert_eq!(meet(&p, &p), p.clone());
        prop_assert!(leq(&m, &p) && leq(&m, &q));
        if leq(&r, &p) && leq(&r, &q) {
            prop_assert!(leq(&r, &m));
        }
    }

    #[test]
    fn values_are_valid_points(a in formula(4, false)) {
        prop_assert!(ignatiev::eval(&a).unwrap().is_valid());
    }

    #[test]
    fn random_irreflexivity(a in formula(3, false), n in 0usize..4) {
        prop_assert!(!derives(&a, &Formula::dia(n, a.clone())));
    }
}
