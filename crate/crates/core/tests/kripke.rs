mod common;

use proptest::prelude::*;
use rcn_core::enumerate::{formulas, Bounds};
use rcn_core::ignatiev;
use rcn_core::kripke::{self, check_frame_conditions, derives_km, frame_validates, frames_up_to, Frame};
use rcn_core::selftest;
use rcn_core::{Formula, Sequent};

#[test]
fn canonical_models_agree_with_the_algebra() {
    let fs = formulas(Bounds::size(5, 2, false));
    for a in &fs {
        for b in &fs {
            let km = derives_km(a, b).unwrap();
            assert_eq!(km, ignatiev::derives(a, b).unwrap(), "{a} |- {b}");
        }
    }
}

#[test]
fn canonical_models_refute_self_diamonds() {
    for a in formulas(Bounds::size(8, 2, false)) {
        assert!(!derives_km(&a, &Formula::dia(0, a.clone())).unwrap(), "{a}");
    }
}

#[test]
fn canonical_models_are_rc_frames() {
    for a in formulas(Bounds::size(6, 2, false)) {
        let fr = kripke::canonical_model(&a).unwrap();
        let v = kripke::check_rc_conditions(&fr);
        assert!(v.is_empty(), "{a}: {}", v[0]);
    }
}

#[test]
fn incompleteness_on_three_nodes() {
    let r = selftest::frame_incompleteness(3);
    assert!(r.passed(), "{r}");
}

#[test]
fn frame_counts() {
    let counts: Vec<usize> = (1..=3)
        .map(|n| frames_up_to(n).iter().filter(|f| f.nodes == n).count())
        .collect();
    assert_eq!(counts, vec![3, 49, 1488]);
}

/// The incompleteness sequent does fail on frames that break the
/// conditions, so its validity above is not vacuous.
#[test]
fn incompleteness_sequent_fails_without_the_conditions() {
    let fr: Frame = "node a\nnode b\nR 0 a b\nR 1 a b\nS 0 a a\nS 0 b b\nS 1 a a\nS 1 b b\n"
        .parse()
        .unwrap();
    let v = check_frame_conditions(&fr);
    assert!(v.iter().any(|v| v.condition == "(iii) R_n ⊆ S_n"));
    let s: Sequent = "<1>p & {0}q |- <1>(p & {0}q)".parse().unwrap();
    assert!(!frame_validates(&fr, &s).unwrap());
}

#[test]
fn axioms_are_frame_valid_on_small_frames() {
    let axioms: Vec<Sequent> = [
        "<1><1>p |- <1>p",
        "<1>p |- <0>p",
        "{1}{1}p |- {1}p",
        "{1}p |- {0}p",
        "p |- {0}p",
        "<1>p |- {1}p",
        "<0>{1}p |- <0>p",
        "{1}<0>p |- <0>p",
        "<1>p & <0>q |- <1>(p & <0>q)",
        "{1}p & {0}q |- {1}(p & {0}q)",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect();
    for sf in frames_up_to(3) {
        let fr = sf.to_frame();
        for s in &axioms {
            assert!(frame_validates(&fr, s).unwrap(), "{s} fails on\n{fr}");
        }
    }
}

fn small_frame() -> impl Strategy<Value = Frame> {
    (1usize..5).prop_flat_map(|n| {
        let edge = (0..2usize, any::<bool>(), 0..n, 0..n);
        prop::collection::vec(edge, 0..12).prop_map(move |edges| {
            let mut fr = Frame::numbered(n);
            for (i, is_dia, x, y) in edges {
                if is_dia {
                    fr.add_dia(i, x, y);
                } else {
                    fr.add_nab(i, x, y);
                }
            }
            fr.set_root(0);
            fr
        })
    })
}

proptest! {
    #[test]
    fn frame_text_round_trips(fr in small_frame()) {
        let back: Frame = fr.to_string().parse().unwrap();
        prop_assert_eq!(back.to_string(), fr.to_string());
    }

    #[test]
    fn checker_accepts_exactly_the_generated_frames(fr in small_frame()) {
        // Generated frames declare both indices, so compare after doing the same.
        let mut fr = fr;
        fr.declare_index(0);
        fr.declare_index(1);
        let ok = check_frame_conditions(&fr).is_empty();
        let generated = frames_up_to(fr.len()).iter().any(|sf| {
            let g = sf.to_frame();
            g.len() == fr.len()
                && (0..2).all(|i| g.dia(i) == fr.dia(i) && g.nab(i) == fr.nab(i))
        });
        prop_assert_eq!(ok, generated);
    }
}
