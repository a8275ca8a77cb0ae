//! Word-sized vertex sets.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

/// A set of vertex indices in `[0, 62)`, stored as a single bitmask.
///
/// Bit `i` is set iff vertex `i` is a member. Every set operation is a
/// single word operation, so results never depend on insertion order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    /// Largest number of distinct vertices a set can hold.
    pub const CAPACITY: usize = 62;

    const MASK: u64 = (1 << Self::CAPACITY) - 1;

    pub const fn new() -> Self {
        VertexSet(0)
    }

    /// Builds a set from raw bits. Bits at or above [`Self::CAPACITY`] are dropped.
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits & Self::MASK)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::CAPACITY, "vertex set capacity is {}", Self::CAPACITY);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u64::MAX >> (64 - n))
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet::new().with(v)
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < Self::CAPACITY && (self.0 >> v) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < Self::CAPACITY, "vertex {v} exceeds capacity");
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < Self::CAPACITY {
            self.0 &= !(1 << v);
        }
    }

    /// Returns a copy of `self` with `v` added.
    #[must_use]
    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    #[must_use]
    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compares the ascending member lists lexicographically, so that
    /// `{0, 1, 3} < {0, 2}` and `{0} < {0, 1}`.
    pub fn lex_cmp(self, other: Self) -> Ordering {
        self.iter().cmp(other.iter())
    }

    /// All `size`-element subsets of `{0, ..., n-1}` in lexicographic order
    /// of their ascending member lists.
    pub fn subsets_of_size(n: usize, size: usize) -> SubsetsOfSize {
        SubsetsOfSize::new(n, size)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::new();
        for v in iter {
            set.insert(v);
        }
        set
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Fixed-size subsets of `{0, ..., n-1}` in lexicographic order.
#[derive(Clone, Debug)]
pub struct SubsetsOfSize {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl SubsetsOfSize {
    fn new(n: usize, size: usize) -> Self {
        assert!(n <= VertexSet::CAPACITY);
        SubsetsOfSize {
            n,
            idx: (0..size).collect(),
            done: size > n,
        }
    }
}

impl Iterator for SubsetsOfSize {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let current = self.idx.iter().copied().collect();
        let k = self.idx.len();
        // advance the rightmost index that still has room
        match (0..k).rev().find(|&i| self.idx[i] < self.n - k + i) {
            Some(i) => {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(current)
    }
}
