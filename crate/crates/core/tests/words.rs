mod common;

use common::ordinal;
use proptest::prelude::*;
use rcn_core::enumerate;
use rcn_core::ignatiev;
use rcn_core::word::{self, Word};
use rcn_core::{Formula, Ordinal};

#[test]
fn order_type_inverts_canonical_words() {
    let base = [Ordinal::zero(), Ordinal::one(), Ordinal::from_nat(2), Ordinal::omega()];
    for a in enumerate::ordinals(3, 2, &base) {
        for n in 0..=2 {
            let w = word::word_of(n, &a);
            assert!(w.in_level(n));
            assert_eq!(word::o(n, &w).unwrap(), a, "{w}");
        }
    }
}

#[test]
fn canonical_words_are_equal_to_their_source() {
    for w in enumerate::words(5, 0, 2) {
        let back = word::canonical(0, &w).unwrap();
        assert_eq!(ignatiev::point_of_word(&back), ignatiev::point_of_word(&w), "{w}");
    }
}

#[test]
fn order_agrees_with_derivability() {
    for n in 0..=2 {
        let ws = enumerate::words(4, n, 3);
        for a in &ws {
            for b in &ws {
                let expected = ignatiev::derives(&b.to_formula(), &Formula::dia(n, a.to_formula())).unwrap();
                assert_eq!(word::lt(n, a, b).unwrap(), expected, "{a} <_{n} {b}");
            }
        }
    }
}

#[test]
fn coordinates_are_order_types_of_heads() {
    for w in enumerate::words(5, 0, 3) {
        let p = ignatiev::eval(&w.to_formula()).unwrap();
        for i in 0..=4 {
            assert_eq!(word::o(i, &word::head(i, &w)).unwrap(), *p.coord(i), "{w} at {i}");
        }
    }
}

fn word_strategy(min: usize, max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(min..=max, 0..7).prop_map(Word::new)
}

proptest! {
    #[test]
    fn text_forms_round_trip(w in word_strategy(0, 4)) {
        prop_assert_eq!(w.to_string().parse::<Word>().unwrap(), w.clone());
        if !w.is_top() {
            prop_assert_eq!(w.compact().parse::<Word>().unwrap(), w);
        }
    }

    #[test]
    fn word_of_inverts_order_type(a in ordinal(), n in 0usize..3) {
        prop_assert_eq!(word::o(n, &word::word_of(n, &a)).unwrap(), a);
    }

    #[test]
    fn shifting_matches_levels(w in word_strategy(1, 4), n in 1usize..3) {
        // oₙ of a word in Wₙ equals oₙ₋₁ of its shift down.
        prop_assume!(w.in_level(n));
        let down = word::shift(-1, &w).unwrap();
        prop_assert_eq!(word::o(n, &w).unwrap(), word::o(n - 1, &down).unwrap());
    }

    #[test]
    fn letters_below_the_level_are_rejected(w in word_strategy(0, 3), n in 1usize..3) {
        prop_assert_eq!(word::o(n, &w).is_ok(), w.in_level(n));
    }
}
