use super::{forces, Frame, Model};
use crate::error::Result;
use crate::syntax::{properly_ordered, Formula};

/// A node tree before flattening: relation pairs refer to local indices.
struct Tree {
    len: usize,
    pairs: Vec<(usize, usize, usize)>,
}

/// The canonical model `RC[f]` of a closed RC formula, rooted at node 0.
///
/// For `⊤` it is an irreflexive point. For a properly ordered
/// `⋀ᵢ ◇_{mᵢ}Aᵢ` it is the disjoint union of the `RC[Aᵢ]` under a fresh
/// root `a`, with in addition
/// 1. `a Rₙ x` for `n ≤ mᵢ` and `x ∈ RC[Aᵢ]`;
/// 2. `x Rₙ y` for `n < mᵢ` and `x, y ∈ ⋃_{j≤i} RC[Aⱼ]`;
/// 3. `x Rₙ y` for `n ≤ mᵢ`, `y ∈ RC[Aᵢ]` and `x ∈ ⋃_{j<i} RC[Aⱼ]`.
pub fn canonical_model(f: &Formula) -> Result<Frame> {
    let tree = build(f)?;
    let mut frame = Frame::with_nodes((0..tree.len).map(|i| format!("a{i}")));
    for (n, x, y) in tree.pairs {
        frame.add_dia(n, x, y);
    }
    frame.set_root(0);
    Ok(frame)
}

fn build(f: &Formula) -> Result<Tree> {
    let parts = properly_ordered(f)?;
    let mut len = 1;
    let mut pairs = Vec::new();
    let mut ranges = Vec::with_capacity(parts.len());
    for (_, body) in &parts {
        let sub = build(body)?;
        pairs.extend(sub.pairs.iter().map(|&(n, x, y)| (n, x + len, y + len)));
        ranges.push(len..len + sub.len);
        len += sub.len;
    }
    for (i, (m, _)) in parts.iter().enumerate() {
        let m = *m;
        let own = ranges[i].clone();
        let before = 1..own.start;
        for n in 0..=m {
            for x in own.clone() {
                pairs.push((n, 0, x));
            }
            for x in before.clone() {
                for y in own.clone() {
                    pairs.push((n, x, y));
                }
            }
        }
        for n in 0..m {
            for x in 1..own.end {
                for y in 1..own.end {
                    pairs.push((n, x, y));
                }
            }
        }
    }
    Ok(Tree { len, pairs })
}

/// Decides `a ⊢ b` for closed RC formulas by model checking `b` at the
/// root of `RC[a]`.
pub fn derives_km(a: &Formula, b: &Formula) -> Result<bool> {
    b.require_closed_rc()?;
    let frame = canonical_model(a)?;
    let root = frame.root().unwrap_or(0);
    forces(&Model::new(frame), root, b)
}
