#![allow(dead_code)]

use proptest::prelude::*;
use rcn_core::ignatiev::Point;
use rcn_core::{Formula, Ordinal};

/// Canonical ordinals of depth at most 3; unsorted exponent lists are
/// normalized by absorption.
pub fn ordinal() -> impl Strategy<Value = Ordinal> {
    Just(Ordinal::zero()).prop_recursive(3, 24, 4, |inner| {
        prop::collection::vec(inner, 0..4).prop_map(Ordinal::sum_of_powers)
    })
}

pub fn formula(max_index: usize, vars: bool) -> BoxedStrategy<Formula> {
    let leaf = if vars {
        prop_oneof![
            3 => Just(Formula::Top),
            1 => prop::sample::select(vec!["p", "q", "r"]).prop_map(Formula::var),
        ]
        .boxed()
    } else {
        Just(Formula::Top).boxed()
    };
    leaf.prop_recursive(5, 24, 3, move |inner| {
        prop_oneof![
            (0..=max_index, inner.clone()).prop_map(|(i, b)| Formula::dia(i, b)),
            (0..=max_index, inner.clone()).prop_map(|(i, b)| Formula::nab(i, b)),
            prop::collection::vec(inner, 2..4).prop_map(Formula::and),
        ]
    })
    .boxed()
}

pub fn ord(s: &str) -> Ordinal {
    s.parse().unwrap()
}

/// Coordinates used by the exhaustive point checks.
pub fn coordinate_values() -> Vec<Ordinal> {
    ["0", "1", "2", "w", "w+1", "w+w", "w^w"].iter().map(|s| ord(s)).collect()
}

/// Every valid point with coordinates from [`coordinate_values`] and
/// support at most 3.
pub fn point_set() -> Vec<Point> {
    let vals = coordinate_values();
    let mut out = Vec::new();
    for a in &vals {
        for b in &vals {
            for c in &vals {
                if let Ok(p) = Point::new(vec![a.clone(), b.clone(), c.clone()]) {
                    out.push(p);
                }
            }
        }
    }
    out.sort_by_key(|p| p.to_string());
    out.dedup();
    out
}
