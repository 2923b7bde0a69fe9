use super::Formula;
use crate::error::Result;
use crate::ignatiev;

/// Rewrites `f` so that no modality occurs inside one of larger index, by
/// pulling lower-indexed conjuncts out of modal bodies (innermost first):
///
/// * `◇ₙ(A ∧ ◇ₘB) → ◇ₙA ∧ ◇ₘB` and `◇ₙ(A ∧ ∇ₘB) → ◇ₙA ∧ ◇ₘB`,
/// * `∇ₙ(A ∧ ∇ₘB) → ∇ₙA ∧ ∇ₘB` and `∇ₙ(A ∧ ◇ₘB) → ∇ₙA ∧ ◇ₘB`,
///
/// all for `m < n`.
pub fn ordered_form(f: &Formula) -> Formula {
    ordered_form_with_steps(f).0
}

/// [`ordered_form`] together with the number of rule applications.
pub fn ordered_form_with_steps(f: &Formula) -> (Formula, usize) {
    let mut steps = 0;
    let g = order(f, &mut steps);
    (g, steps)
}

fn order(f: &Formula, steps: &mut usize) -> Formula {
    match f {
        Formula::Top | Formula::Var(_) => f.clone(),
        Formula::And(cs) => Formula::and(cs.iter().map(|c| order(c, steps))),
        Formula::Dia(n, b) | Formula::Nab(n, b) => {
            let n = *n;
            let is_dia = matches!(f, Formula::Dia(..));
            let body = order(b, steps);
            let mut kept = Vec::new();
            let mut pulled = Vec::new();
            for c in body.conjuncts() {
                match c {
                    Formula::Dia(m, _) if *m < n => pulled.push(c.clone()),
                    Formula::Nab(m, inner) if *m < n => {
                        pulled.push(if is_dia {
                            Formula::Dia(*m, inner.clone())
                        } else {
                            c.clone()
                        })
                    }
                    _ => kept.push(c.clone()),
                }
            }
            if pulled.is_empty() {
                return if is_dia {
                    Formula::dia(n, body)
                } else {
                    Formula::nab(n, body)
                };
            }
            *steps += pulled.len();
            let rest = Formula::and(kept);
            let head = if is_dia {
                Formula::dia(n, rest)
            } else {
                Formula::nab(n, rest)
            };
            Formula::and(std::iter::once(head).chain(pulled))
        }
    }
}

/// No modality of smaller index occurs in the scope of one of larger index.
pub fn is_ordered(f: &Formula) -> bool {
    fn go(f: &Formula, floor: usize) -> bool {
        match f {
            Formula::Top | Formula::Var(_) => true,
            Formula::And(cs) => cs.iter().all(|c| go(c, floor)),
            Formula::Dia(n, b) | Formula::Nab(n, b) => *n >= floor && go(b, *n),
        }
    }
    go(f, 0)
}

/// The properly ordered form `⋀ ◇_{mᵢ}Aᵢ` of a closed RC formula: indices
/// strictly decreasing, each `Aᵢ` using only indices `≥ mᵢ`, and no
/// conjunct deriving a later one. `⊤` yields the empty list.
pub fn properly_ordered(f: &Formula) -> Result<Vec<(usize, Formula)>> {
    f.require_closed_rc()?;
    let g = ordered_form(f);
    let mut best: Vec<(usize, Formula)> = Vec::new();
    for c in g.conjuncts() {
        let Formula::Dia(m, body) = c else { continue };
        let candidate = (*m, (**body).clone());
        match best.iter_mut().find(|(k, _)| k == m) {
            None => best.push(candidate),
            Some(slot) => {
                // Same-index diamonds are linearly ordered; keep the stronger.
                let current = Formula::Dia(slot.0, Box::new(slot.1.clone()));
                if !ignatiev::derives(&current, c)? {
                    *slot = candidate;
                }
            }
        }
    }
    best.sort_by(|a, b| b.0.cmp(&a.0));
    let mut out: Vec<(usize, Formula)> = Vec::new();
    for (m, body) in best {
        let conjunct = Formula::dia(m, body.clone());
        let mut redundant = false;
        for (k, kb) in &out {
            if ignatiev::derives(&Formula::dia(*k, kb.clone()), &conjunct)? {
                redundant = true;
                break;
            }
        }
        if !redundant {
            out.push((m, body));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        s.parse().unwrap()
    }

    #[test]
    fn rewrite_examples() {
        assert_eq!(ordered_form(&f("<1><0>T")), f("<1>T & <0>T"));
        assert_eq!(ordered_form(&f("{1}<0>T")), f("{1}T & <0>T"));
        assert_eq!(ordered_form(&f("<0>T")), f("<0>T"));
        assert_eq!(ordered_form(&f("<1>{0}p")), f("<1>T & <0>p"));
        assert_eq!(ordered_form(&f("{1}{0}p")), f("{1}T & {0}p"));
    }

    #[test]
    fn nested_rewrites_reach_a_fixpoint() {
        let (g, steps) = ordered_form_with_steps(&f("<2>(<1>(<0>T & q) & p)"));
        assert!(is_ordered(&g));
        assert_eq!(g, f("<2>p & <1>q & <0>T"));
        assert_eq!(steps, 3);
        assert!(!is_ordered(&f("<2>(<1>T)")));
    }

    #[test]
    fn properly_ordered_examples() {
        assert_eq!(properly_ordered(&Formula::Top).unwrap(), vec![]);
        assert_eq!(
            properly_ordered(&f("<0>T & <1>T")).unwrap(),
            vec![(1, Formula::Top)]
        );
        assert_eq!(
            properly_ordered(&f("<0><1>T")).unwrap(),
            vec![(0, f("<1>T"))]
        );
        assert_eq!(
            properly_ordered(&f("<0>T & <0><0>T")).unwrap(),
            vec![(0, f("<0>T"))]
        );
        assert!(properly_ordered(&f("{0}T")).is_err());
        assert!(properly_ordered(&f("<0>p")).is_err());
    }
}
