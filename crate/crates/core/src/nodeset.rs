//! Fixed-width node sets over the 1-based node labels `1..=64`.

use std::cmp::Ordering;
use std::fmt;

/// Largest node label a [`NodeSet`] can hold.
pub const MAX_NODES: usize = 64;

/// A subset of `{1, ..., 64}` stored as a bit mask (bit `i - 1` is node `i`).
///
/// Sets are ordered by size first and then lexicographically on their sorted
/// elements, which is the canonical order used for tubes throughout the crate.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct NodeSet(u64);

impl NodeSet {
    pub const EMPTY: NodeSet = NodeSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        NodeSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_NODES, "node count {n} exceeds {MAX_NODES}");
        if n == MAX_NODES {
            NodeSet(u64::MAX)
        } else {
            NodeSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(node: usize) -> Self {
        NodeSet(Self::bit(node))
    }

    fn bit(node: usize) -> u64 {
        assert!(
            (1..=MAX_NODES).contains(&node),
            "node label {node} outside 1..={MAX_NODES}"
        );
        1u64 << (node - 1)
    }

    pub fn contains(self, node: usize) -> bool {
        (1..=MAX_NODES).contains(&node) && self.0 & (1u64 << (node - 1)) != 0
    }

    pub fn insert(&mut self, node: usize) {
        self.0 |= Self::bit(node);
    }

    pub fn remove(&mut self, node: usize) {
        self.0 &= !Self::bit(node);
    }

    pub fn with(self, node: usize) -> Self {
        NodeSet(self.0 | Self::bit(node))
    }

    pub fn without(self, node: usize) -> Self {
        NodeSet(self.0 & !Self::bit(node))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & other.0)
    }

    pub fn difference(self, other: NodeSet) -> NodeSet {
        NodeSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: NodeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: NodeSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for NodeSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut set = NodeSet::EMPTY;
        for node in iter {
            set.insert(node);
        }
        set
    }
}

impl<const K: usize> From<[usize; K]> for NodeSet {
    fn from(nodes: [usize; K]) -> Self {
        nodes.into_iter().collect()
    }
}

impl IntoIterator for NodeSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Iterator over the elements of a [`NodeSet`] in increasing order.
#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let node = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(node)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let len = self.0.count_ones() as usize;
        (len, Some(len))
    }
}

impl ExactSizeIterator for Iter {}

impl Ord for NodeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & (diff & diff.wrapping_neg()) != 0 {
                // the lowest differing element belongs to self
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for NodeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Formats as `{1,2,5}`.
impl fmt::Display for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, node) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{node}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for NodeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
