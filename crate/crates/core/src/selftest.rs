//! Bounded exhaustive checks of the main theorems, shared by the test suite
//! and the `selftest` command.

use std::collections::HashMap;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::enumerate::{self, Bounds, Catalog};
use crate::error::Result;
use crate::ignatiev::{self, Point};
use crate::kripke::{self, frame_validates, frames_up_to, Frame};
use crate::normal_form::{self, NabForm};
use crate::ordinal::Ordinal;
use crate::spectrum;
use crate::syntax::{Formula, Sequent};
use crate::word::{self, Word};

const MAX_SAMPLES: usize = 5;

/// Outcome of one suite. `Display` leaves out the timing so output is
/// reproducible.
#[derive(Clone, Debug)]
pub struct Report {
    pub name: String,
    pub checked: u64,
    pub failed: u64,
    /// The first few failures, in enumeration order.
    pub samples: Vec<String>,
    pub elapsed: Duration,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.failed == 0 && self.checked > 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "PASS {} ({} checks)", self.name, self.checked)
        } else {
            write!(f, "FAIL {} ({} of {} checks failed)", self.name, self.failed, self.checked)?;
            for s in &self.samples {
                write!(f, "\n    {s}")?;
            }
            Ok(())
        }
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    failed: u64,
    samples: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(describe());
        }
    }

    /// An `Err` counts as a failure carrying the error text.
    fn check_result(&mut self, r: Result<bool>, describe: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, describe),
            Err(e) => {
                self.checked += 1;
                self.fail(format!("{}: {e}", describe()));
            }
        }
    }

    fn fail(&mut self, msg: String) {
        self.failed += 1;
        if self.samples.len() < MAX_SAMPLES {
            self.samples.push(msg);
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.failed += other.failed;
        for s in other.samples {
            if self.samples.len() < MAX_SAMPLES {
                self.samples.push(s);
            }
        }
        self
    }

    fn report(self, name: String, start: Instant) -> Report {
        Report {
            name,
            checked: self.checked,
            failed: self.failed,
            samples: self.samples,
            elapsed: start.elapsed(),
        }
    }
}

/// Runs `check` on every item in parallel; failures keep item order.
fn par_tally<T: Sync>(items: &[T], check: impl Fn(&T, &mut Tally) + Sync) -> Tally {
    items
        .par_iter()
        .map(|x| {
            let mut t = Tally::default();
            check(x, &mut t);
            t
        })
        .reduce(Tally::default, Tally::merge)
}

/// The algebra and the canonical-model semantics agree on `a ⊢ b` for all
/// `◇`-only formulas with at most `max_modalities` modalities.
pub fn oracle_agreement(max_modalities: usize, max_index: usize) -> Report {
    let start = Instant::now();
    let cat = Catalog::new(Bounds::modalities(max_modalities, max_index, false));
    let points = cat.points();
    let ids: Vec<usize> = (0..cat.len()).collect();
    let tally = par_tally(&ids, |&a, t| {
        let fa = cat.formula(a);
        t.check_result(ignatiev::eval(fa).map(|p| p == points[a]), || format!("bulk value of {fa}"));
        let frame = match kripke::canonical_model(fa) {
            Ok(fr) => fr,
            Err(e) => return t.fail(format!("canonical model of {fa}: {e}")),
        };
        let root = frame.root().unwrap_or(0);
        let sets = cat.truth_sets(&frame);
        for (b, set) in sets.iter().enumerate() {
            let km = set.contains(root);
            let alg = ignatiev::leq(&points[a], &points[b]);
            t.check(km == alg, || {
                format!("{fa} |- {}: algebra says {alg}, canonical model says {km}", cat.formula(b))
            });
        }
    });
    tally.report(
        format!("algebra and canonical models agree (diamonds only, <= {max_modalities} modalities, indices <= {max_index})"),
        start,
    )
}

/// Fat normal forms are equivalent to their input, and equivalent inputs
/// share the same fat form.
pub fn fat_nf_soundness(max_modalities: usize, max_index: usize) -> Report {
    let start = Instant::now();
    let cat = Catalog::new(Bounds::modalities(max_modalities, max_index, true));
    let points = cat.points();
    let ids: Vec<usize> = (0..cat.len()).collect();
    let fats: Vec<Result<normal_form::FatNf>> = ids.par_iter().map(|&i| normal_form::fat_nf(cat.formula(i))).collect();

    let mut tally = par_tally(&ids, |&i, t| {
        let f = cat.formula(i);
        let fat = match &fats[i] {
            Ok(fat) => fat,
            Err(e) => return t.fail(format!("fat_nf({f}): {e}")),
        };
        let g = fat.to_formula();
        t.check_result(ignatiev::derives(f, &g), || format!("{f} |- {g}"));
        t.check_result(ignatiev::derives(&g, f), || format!("{g} |- {f}"));
        t.check_result(normal_form::is_fat(fat.form()), || format!("{g} has the fat shape"));
    });

    let mut classes: HashMap<&Point, Vec<usize>> = HashMap::new();
    for (i, p) in points.iter().enumerate() {
        classes.entry(p).or_default().push(i);
    }
    let mut classes: Vec<Vec<usize>> = classes.into_values().collect();
    classes.sort();
    let uniqueness = par_tally(&classes, |class, t| {
        let first = class[0];
        for &i in &class[1..] {
            let (f, g) = (cat.formula(first), cat.formula(i));
            t.check_result(
                ignatiev::derives(f, g).and_then(|ab| Ok(ab && ignatiev::derives(g, f)?)),
                || format!("{f} and {g} have equal values but are not interderivable"),
            );
            let same = matches!((&fats[first], &fats[i]), (Ok(x), Ok(y)) if x == y);
            t.check(same, || format!("{f} and {g} are equal but have different fat forms"));
        }
    });
    tally = tally.merge(uniqueness);
    tally.report(
        format!("fat normal forms are sound and unique (<= {max_modalities} modalities, indices <= {max_index})"),
        start,
    )
}

/// Words strictly below `w` in `<ᵢ`, one per order type, among words of
/// length at most `|w|` with letters in `i..=max(w)`.
fn smaller_words(i: usize, w: &Word) -> Result<Vec<Word>> {
    let Some(&top) = w.letters().iter().max() else {
        return Ok(Vec::new());
    };
    let bound = word::o(i, w)?;
    let mut seen: HashMap<Ordinal, Word> = HashMap::new();
    for cand in enumerate::words(w.len(), i, top) {
        let a = word::o(i, &cand)?;
        if a < bound {
            seen.entry(a).or_insert(cand);
        }
    }
    let mut out: Vec<(Ordinal, Word)> = seen.into_iter().collect();
    out.sort();
    Ok(out.into_iter().map(|(_, w)| w).collect())
}

/// Thin normal forms are equivalent to their input, and lowering any thin
/// word's order type breaks the equivalence.
pub fn thin_nf_minimality(max_modalities: usize, max_index: usize) -> Report {
    let start = Instant::now();
    let cat = Catalog::new(Bounds::modalities(max_modalities, max_index, true));
    let points = cat.points();
    let ids: Vec<usize> = (0..cat.len()).collect();
    let tally = par_tally(&ids, |&id, t| {
        let f = cat.formula(id);
        let thin = match normal_form::thin_nf(f) {
            Ok(thin) => thin,
            Err(e) => return t.fail(format!("thin_nf({f}): {e}")),
        };
        let g = thin.to_formula();
        t.check_result(ignatiev::eval(&g).map(|p| p == points[id]), || format!("{g} equals {f}"));
        let words = thin.words();
        for (i, a) in words.iter().enumerate() {
            t.check(a.in_level(i), || format!("word {a} of {g} has a letter below {i}"));
            let smaller = match smaller_words(i, a) {
                Ok(s) => s,
                Err(e) => return t.fail(format!("words below {a}: {e}")),
            };
            for w in smaller {
                let mut changed = words.to_vec();
                changed[i] = w.clone();
                let h = NabForm::new(0, changed).to_formula();
                t.check_result(ignatiev::eval(&h).map(|p| p != points[id]), || {
                    format!("replacing {a} by {w} in {g} still equals {f}")
                });
            }
        }
    });
    tally.report(
        format!("thin normal forms are equivalent and minimal (<= {max_modalities} modalities, indices <= {max_index})"),
        start,
    )
}

/// `A ⊬ ◇ₙA` for all variable-free formulas up to the given size.
pub fn irreflexivity(max_size: usize, max_index: usize) -> Report {
    let start = Instant::now();
    let fs = enumerate::formulas(Bounds::size(max_size, max_index, true));
    let tally = par_tally(&fs, |a, t| {
        for n in 0..=max_index {
            let da = Formula::dia(n, a.clone());
            t.check_result(ignatiev::derives(a, &da).map(|d| !d), || format!("{a} |- {da}"));
        }
    });
    tally.report(
        format!("no formula derives its own diamond (size <= {max_size}, indices <= {max_index})"),
        start,
    )
}

/// `◇₁p ∧ ∇₀q ⊢ ◇₁(p ∧ ∇₀q)` is valid on every small frame satisfying the
/// frame conditions, yet refuted in the algebra for `p := ⊤, q := ◇₁⊤`.
pub fn frame_incompleteness(max_nodes: usize) -> Report {
    let start = Instant::now();
    let instance = |a: Formula, b: Formula| Sequent {
        lhs: Formula::and([Formula::dia(1, a.clone()), Formula::nab(0, b.clone())]),
        rhs: Formula::dia(1, Formula::and([a, Formula::nab(0, b)])),
    };
    let schema = instance(Formula::var("p"), Formula::var("q"));
    let frames: Vec<Frame> = frames_up_to(max_nodes).iter().map(|sf| sf.to_frame()).collect();
    let mut tally = par_tally(&frames, |fr, t| {
        t.check_result(frame_validates(fr, &schema), || format!("{schema} fails on\n{fr}"));
    });
    let ground = instance(Formula::Top, Formula::dia(1, Formula::Top));
    tally.check_result(ignatiev::derives(&ground.lhs, &ground.rhs).map(|d| !d), || {
        format!("{ground} should be underivable")
    });
    tally.report(
        format!("{schema} is frame-valid on {} frames (<= {max_nodes} nodes) but not derivable", frames.len()),
        start,
    )
}

/// The innermost exponents used by [`word_ordinal_isomorphism`].
pub fn base_exponents() -> Vec<Ordinal> {
    vec![Ordinal::zero(), Ordinal::one(), Ordinal::from_nat(2), Ordinal::omega()]
}

/// `oₙ ∘ word_of = id` on ordinals and `word_of ∘ oₙ = id` up to equality
/// on words, for `n ≤ 2`.
pub fn word_ordinal_isomorphism(depth: usize, width: usize, max_len: usize, max_letter: usize) -> Report {
    let start = Instant::now();
    let ords = enumerate::ordinals(depth, width, &base_exponents());
    let mut tally = par_tally(&ords, |a, t| {
        for n in 0..=2 {
            let w = word::word_of(n, a);
            t.check_result(word::o(n, &w).map(|b| b == *a), || format!("o({n}, word_of({n}, {a}) = {w})"));
        }
    });
    let words = enumerate::words(max_len, 0, max_letter);
    let back = par_tally(&words, |w, t| {
        let p = ignatiev::point_of_word(w);
        for n in 0..=2.min(max_letter) {
            if !w.in_level(n) {
                continue;
            }
            t.check_result(
                word::o(n, w).map(|a| ignatiev::point_of_word(&word::word_of(n, &a)) == p),
                || format!("word_of({n}, o({n}, {w}))"),
            );
        }
    });
    tally = tally.merge(back);
    tally.report(
        format!(
            "words and ordinals correspond ({} ordinals of depth <= {depth}, words of length <= {max_len} over 0..={max_letter})",
            ords.len()
        ),
        start,
    )
}

/// `eval(w)ᵢ = oᵢ(headᵢ(w))`.
pub fn coordinate_law(max_len: usize, max_letter: usize) -> Report {
    let start = Instant::now();
    let words = enumerate::words(max_len, 0, max_letter);
    let tally = par_tally(&words, |w, t| {
        let p = match ignatiev::eval(&w.to_formula()) {
            Ok(p) => p,
            Err(e) => return t.fail(format!("eval({w}): {e}")),
        };
        for i in 0..=max_letter + 1 {
            let h = word::head(i, w);
            t.check_result(word::o(i, &h).map(|a| a == *p.coord(i)), || {
                format!("coordinate {i} of {w} is {}, head {h}", p.coord(i))
            });
        }
    });
    tally.report(
        format!("point coordinates are order types of heads (length <= {max_len}, letters <= {max_letter})"),
        start,
    )
}

/// For `σ := B ∈ Wₙ`: `Qₙᵏ⁺¹ ⊢ Qₙᵏ ∧ ◇ₙQₙᵏ`, `Qₙᵏ <ₙ ◇ₙ₊₁B`, and the
/// computed word equals `Qₙᵏ`.
pub fn q_properties(max_n: usize, max_k: usize, max_len: usize) -> Report {
    let start = Instant::now();
    let mut cases = Vec::new();
    for n in 0..=max_n {
        for b in enumerate::words(max_len, n, max_n + 1) {
            cases.push((n, b));
        }
    }
    let tally = par_tally(&cases, |(n, b), t| {
        let n = *n;
        let mut qs = Vec::with_capacity(max_k + 2);
        for k in 0..=max_k + 1 {
            match normal_form::q_word(n, k, b) {
                Ok(q) => qs.push(q),
                Err(e) => return t.fail(format!("q_word({n}, {k}, {b}): {e}")),
            }
        }
        let above = b.prepend(n + 1);
        for k in 0..=max_k {
            let (q, w) = &qs[k];
            let (next, _) = &qs[k + 1];
            let rhs = Formula::and([q.clone(), Formula::dia(n, q.clone())]);
            t.check_result(ignatiev::derives(next, &rhs), || format!("{next} |- {rhs}"));
            t.check_result(word::lt(n, w, &above), || format!("{w} <_{n} {above}"));
            t.check_result(
                ignatiev::eval(q).map(|p| p == ignatiev::point_of_word(w)),
                || format!("{q} = {w}"),
            );
        }
    });
    tally.report(
        format!("iterated reflection formulas (n <= {max_n}, k <= {max_k}, base length <= {max_len})"),
        start,
    )
}

/// The named spectra are valid and the finite one round-trips through its
/// fat normal form.
pub fn example_spectra() -> Report {
    let start = Instant::now();
    let mut t = Tally::default();
    for (name, s) in spectrum::examples_table() {
        t.check(s.is_valid(), || format!("{name} spectrum {s} is invalid"));
    }
    let prefix = spectrum::example("ISigma1").expect("table entry");
    let back = spectrum::to_formula(&prefix).and_then(|f| spectrum::of_formula(&f));
    t.check_result(back.map(|b| b == prefix), || format!("{prefix} round trip"));
    t.report("example spectra are valid and round-trip".into(), start)
}

/// A formula with exactly `modalities` modalities mixing nesting and
/// conjunction, for timing.
pub fn wide_formula(modalities: usize, max_index: usize, seed: usize) -> Formula {
    let mut f = Formula::Top;
    for k in 0..modalities {
        let i = (k * 7 + seed * 3 + k / 5) % (max_index + 1);
        f = match k % 4 {
            0 => Formula::dia(i, f),
            1 => Formula::and([Formula::dia(i, Formula::Top), f]),
            2 => Formula::nab(i, f),
            _ => Formula::dia(max_index - i, f),
        };
    }
    f
}

/// Deciding sequents between 50-modality formulas stays under 100 ms each.
pub fn decide_speed(modalities: usize, pairs: usize) -> Report {
    let start = Instant::now();
    let mut t = Tally::default();
    for seed in 0..pairs {
        let a = wide_formula(modalities, 3, seed);
        let b = wide_formula(modalities, 3, seed + 1);
        let begin = Instant::now();
        let r = ignatiev::derives(&a, &b);
        let took = begin.elapsed();
        t.check_result(r.map(|_| took < Duration::from_millis(100)), || {
            format!("deciding pair {seed} took {took:?}")
        });
    }
    t.report(format!("deciding {modalities}-modality sequents takes < 100 ms"), start)
}

/// Every suite with bounds derived from `max_size` (5 reproduces the
/// default acceptance bounds).
pub fn run_all(max_size: usize) -> Vec<Report> {
    let k = max_size.max(1);
    vec![
        oracle_agreement(k, 2),
        fat_nf_soundness(k - 1, 2),
        thin_nf_minimality(k - 1, 2),
        irreflexivity(k + 1, 2),
        frame_incompleteness((k - 1).clamp(1, kripke::MAX_SMALL_NODES)),
        word_ordinal_isomorphism(3, 2, k, 3),
        coordinate_law(k, 3),
        q_properties(2, k - 1, 2),
        example_spectra(),
        decide_speed(50, 20),
    ]
}
