use smallvec::SmallVec;

/// A subset of `{0, …, n-1}` as a bitset.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NodeSet {
    len: usize,
    bits: SmallVec<[u64; 2]>,
}

impl NodeSet {
    pub fn empty(len: usize) -> Self {
        NodeSet {
            len,
            bits: SmallVec::from_elem(0, len.div_ceil(64)),
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for (k, word) in s.bits.iter_mut().enumerate() {
            let remaining = len - 64 * k;
            *word = if remaining >= 64 {
                u64::MAX
            } else {
                (1u64 << remaining) - 1
            };
        }
        s
    }

    /// Size of the universe.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn contains(&self, x: usize) -> bool {
        self.bits[x / 64] >> (x % 64) & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        self.bits[x / 64] |= 1 << (x % 64);
    }

    pub fn remove(&mut self, x: usize) {
        self.bits[x / 64] &= !(1 << (x % 64));
    }

    pub fn intersect_with(&mut self, other: &NodeSet) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &NodeSet) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn intersects(&self, other: &NodeSet) -> bool {
        self.bits.iter().zip(&other.bits).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &NodeSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(|&x| self.contains(x))
    }
}

/// A binary relation on `{0, …, n-1}` stored as successor sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    succ: Vec<NodeSet>,
}

impl Relation {
    pub fn new(len: usize) -> Self {
        Relation {
            succ: vec![NodeSet::empty(len); len],
        }
    }

    pub fn len(&self) -> usize {
        self.succ.len()
    }

    pub fn is_empty(&self) -> bool {
        self.succ.iter().all(NodeSet::is_empty)
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.succ[x].contains(y)
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        self.succ[x].insert(y);
    }

    pub fn successors(&self, x: usize) -> &NodeSet {
        &self.succ[x]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(x, s)| s.iter().map(move |y| (x, y)))
    }

    /// `{x : x R y for some y ∈ target}`.
    pub fn preimage(&self, target: &NodeSet) -> NodeSet {
        let mut out = NodeSet::empty(self.len());
        for (x, s) in self.succ.iter().enumerate() {
            if s.intersects(target) {
                out.insert(x);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bitset_basics() {
        let mut s = NodeSet::empty(70);
        s.insert(3);
        s.insert(69);
        assert!(s.contains(69) && !s.contains(68));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 69]);
        assert!(s.is_subset(&NodeSet::full(70)));
        assert_eq!(NodeSet::full(70).count(), 70);
        s.remove(3);
        assert_eq!(s.count(), 1);
    }

    #[test]
    fn relation_preimage() {
        let mut r = Relation::new(3);
        r.insert(0, 1);
        r.insert(1, 2);
        let mut t = NodeSet::empty(3);
        t.insert(2);
        assert_eq!(r.preimage(&t).iter().collect::<Vec<_>>(), vec![1]);
        assert_eq!(r.pairs().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }
}
