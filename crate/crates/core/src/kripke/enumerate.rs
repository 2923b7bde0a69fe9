//! Exhaustive generation of small RC∇-frames over the indices 0 and 1.
//!
//! Relations on at most four nodes are 16-bit masks with bit `4x + y` for
//! the pair `(x, y)`.

use super::Frame;

pub const MAX_SMALL_NODES: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SmallFrame {
    pub nodes: usize,
    pub r: [u16; 2],
    pub s: [u16; 2],
}

impl SmallFrame {
    pub fn to_frame(&self) -> Frame {
        let mut frame = Frame::numbered(self.nodes);
        for n in 0..2 {
            frame.declare_index(n);
            for (x, y) in pairs(self.r[n]) {
                frame.add_dia(n, x, y);
            }
            for (x, y) in pairs(self.s[n]) {
                frame.add_nab(n, x, y);
            }
        }
        frame
    }
}

fn bit(x: usize, y: usize) -> u16 {
    1 << (4 * x + y)
}

fn pairs(rel: u16) -> impl Iterator<Item = (usize, usize)> {
    (0..16).filter(move |b| rel >> b & 1 == 1).map(|b| (b / 4, b % 4))
}

fn row(rel: u16, x: usize) -> u16 {
    (rel >> (4 * x)) & 0xF
}

/// All pairs over `n` nodes.
pub(crate) fn full_mask(n: usize) -> u16 {
    (0..n)
        .flat_map(|x| (0..n).map(move |y| bit(x, y)))
        .fold(0, |a, b| a | b)
}

fn diagonal(n: usize) -> u16 {
    (0..n).map(|x| bit(x, x)).fold(0, |a, b| a | b)
}

/// `x a y b z` gives `x (ab) z`.
fn compose(a: u16, b: u16) -> u16 {
    pairs(a).fold(0, |acc, (x, y)| acc | row(b, y) << (4 * x))
}

fn within(a: u16, b: u16) -> bool {
    a & !b == 0
}

fn transitive(a: u16) -> bool {
    within(compose(a, a), a)
}

/// `x a y` and `x b z` give `y c z`.
fn inverse_composed_within(a: u16, b: u16, c: u16) -> bool {
    pairs(a).all(|(x, y)| within(row(b, x), row(c, y)))
}

fn submasks(mask: u16) -> impl Iterator<Item = u16> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

/// Every frame on `1..=max_nodes` nodes (at most four) with relations
/// `R₀, R₁, S₀, S₁` satisfying the RC∇ frame conditions.
pub fn frames_up_to(max_nodes: usize) -> Vec<SmallFrame> {
    assert!(max_nodes <= MAX_SMALL_NODES, "at most {MAX_SMALL_NODES} nodes");
    let mut out = Vec::new();
    for nodes in 1..=max_nodes {
        frames_with(nodes, &mut out);
    }
    out
}

fn frames_with(nodes: usize, out: &mut Vec<SmallFrame>) {
    let diag = diagonal(nodes);
    let preorders: Vec<u16> = submasks(full_mask(nodes))
        .filter(|&p| within(diag, p) && transitive(p))
        .collect();
    for &s0 in &preorders {
        let s1s: Vec<u16> = preorders
            .iter()
            .copied()
            .filter(|&s1| within(s1, s0) && inverse_composed_within(s1, s0, s0))
            .collect();
        let r0s: Vec<u16> = submasks(s0)
            .filter(|&r0| {
                transitive(r0) && within(compose(s0, r0), r0) && within(compose(r0, s0), r0)
            })
            .collect();
        for &s1 in &s1s {
            for &r0 in &r0s {
                if !(within(compose(s1, r0), r0) && within(compose(r0, s1), r0)) {
                    continue;
                }
                for r1 in submasks(r0 & s1) {
                    if transitive(r1)
                        && inverse_composed_within(r1, r0, r0)
                        && within(compose(s1, r1), r1)
                        && within(compose(r1, s1), r1)
                    {
                        out.push(SmallFrame {
                            nodes,
                            r: [r0, r1],
                            s: [s0, s1],
                        });
                    }
                }
            }
        }
    }
}
