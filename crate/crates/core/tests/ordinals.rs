mod common;

use std::cmp::Ordering;

use common::{ord, ordinal};
use proptest::prelude::*;
use rcn_core::enumerate;
use rcn_core::Ordinal;

/// `Σ cᵢ·ωⁱ` from a coefficient list indexed by exponent.
fn polynomial(coeffs: &[usize]) -> Ordinal {
    let mut exps = Vec::new();
    for (e, &c) in coeffs.iter().enumerate().rev() {
        exps.extend(std::iter::repeat_n(Ordinal::from_nat(e), c));
    }
    Ordinal::sum_of_powers(exps)
}

/// Below ω^ω, comparison is lexicographic on coefficients from the top.
fn polynomial_cmp(a: &[usize], b: &[usize]) -> Ordering {
    let len = a.len().max(b.len());
    for e in (0..len).rev() {
        let (x, y) = (a.get(e).copied().unwrap_or(0), b.get(e).copied().unwrap_or(0));
        if x != y {
            return x.cmp(&y);
        }
    }
    Ordering::Equal
}

#[test]
fn comparison_is_a_total_order_on_small_terms() {
    let mut all = enumerate::ordinals(3, 3, &[Ordinal::zero()]);
    all.sort();
    for (i, a) in all.iter().enumerate() {
        assert!(a.is_canonical());
        assert_eq!(a.cmp(a), Ordering::Equal);
        for b in &all[i + 1..] {
            assert_eq!(a.cmp(b), Ordering::Less, "{a} vs {b}");
            assert_eq!(b.cmp(a), Ordering::Greater, "{b} vs {a}");
        }
    }
}

#[test]
fn enumerated_terms_print_and_parse_back() {
    for a in enumerate::ordinals(3, 2, &[Ordinal::zero(), Ordinal::omega()]) {
        assert_eq!(ord(&a.to_string()), a);
    }
}

proptest! {
    #[test]
    fn comparison_matches_cantor_polynomials(
        a in prop::collection::vec(0usize..4, 0..5),
        b in prop::collection::vec(0usize..4, 0..5),
    ) {
        prop_assert_eq!(polynomial(&a).cmp(&polynomial(&b)), polynomial_cmp(&a, &b));
    }

    #[test]
    fn addition_of_polynomials_absorbs_lower_terms(
        a in prop::collection::vec(0usize..4, 0..5),
        b in prop::collection::vec(0usize..4, 0..5),
    ) {
        // a + b keeps the terms of a at or above b's leading exponent.
        let lead = b.iter().rposition(|&c| c > 0);
        let mut expected = vec![0; a.len().max(b.len())];
        for (e, c) in expected.iter_mut().enumerate() {
            *c = match lead {
                Some(l) if e > l => a.get(e).copied().unwrap_or(0),
                Some(l) if e == l => a.get(e).copied().unwrap_or(0) + b[e],
                Some(_) => b[e],
                None => a.get(e).copied().unwrap_or(0),
            };
        }
        prop_assert_eq!(&polynomial(&a) + &polynomial(&b), polynomial(&expected));
    }

    #[test]
    fn addition_is_associative(a in ordinal(), b in ordinal(), c in ordinal()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn zero_is_neutral_and_sums_grow(a in ordinal(), b in ordinal()) {
        prop_assert_eq!(&a + &Ordinal::zero(), a.clone());
        prop_assert_eq!(&Ordinal::zero() + &a, a.clone());
        prop_assert!(&a + &b >= a);
        prop_assert!(&a + &b >= b);
    }

    #[test]
    fn last_exponent_laws(a in ordinal(), g in ordinal()) {
        prop_assert_eq!(a.omega_pow().ell(), a.clone());
        prop_assert_eq!((&a + &g.omega_pow()).ell(), g);
        if let Some((d, last)) = a.split_last() {
            prop_assert_eq!(last.clone(), a.ell());
            prop_assert_eq!(&d + &last.omega_pow(), a);
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn operations_preserve_canonical_form(a in ordinal(), b in ordinal()) {
        prop_assert!(a.is_canonical());
        prop_assert!((&a + &b).is_canonical());
        prop_assert!(a.omega_pow().is_canonical());
        prop_assert!(a.succ().is_canonical());
        prop_assert!(a.succ() > a);
    }

    #[test]
    fn printing_round_trips(a in ordinal()) {
        prop_assert_eq!(ord(&a.to_string()), a);
    }
}
