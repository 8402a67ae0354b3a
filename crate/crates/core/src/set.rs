//! Fixed-width bitset over vertex indices.
//!
//! All oracle and construction code is set-intersection heavy, so vertex
//! sets are stored as packed 64-bit words. Sets are kept in canonical form
//! (no trailing zero words) so that derived equality and hashing are
//! semantic.

use std::fmt;

const WORD: usize = 64;

/// A set of vertex indices backed by packed `u64` words.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    blocks: Vec<u64>,
}

impl VertexSet {
    /// The empty set.
    pub fn new() -> Self {
        VertexSet { blocks: Vec::new() }
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut blocks = vec![u64::MAX; n.div_ceil(WORD)];
        if !n.is_multiple_of(WORD) {
            if let Some(last) = blocks.last_mut() {
                *last = (1u64 << (n % WORD)) - 1;
            }
        }
        let mut s = VertexSet { blocks };
        s.normalize();
        s
    }

    /// The set `{v}`.
    pub fn singleton(v: usize) -> Self {
        let mut s = VertexSet::new();
        s.insert(v);
        s
    }

    fn normalize(&mut self) {
        while self.blocks.last() == Some(&0) {
            self.blocks.pop();
        }
    }

    pub fn insert(&mut self, v: usize) {
        let (w, b) = (v / WORD, v % WORD);
        if w >= self.blocks.len() {
            self.blocks.resize(w + 1, 0);
        }
        self.blocks[w] |= 1u64 << b;
    }

    pub fn remove(&mut self, v: usize) {
        let (w, b) = (v / WORD, v % WORD);
        if w < self.blocks.len() {
            self.blocks[w] &= !(1u64 << b);
            self.normalize();
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        let (w, b) = (v / WORD, v % WORD);
        w < self.blocks.len() && self.blocks[w] >> b & 1 == 1
    }

    /// Number of members.
    pub fn len(&self) -> usize {
        self.blocks.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Least member, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, w) in self.blocks.iter().enumerate() {
            if *w != 0 {
                return Some(i * WORD + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word: 0,
            bits: self.blocks.first().copied().unwrap_or(0),
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let (long, short) = if self.blocks.len() >= other.blocks.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut blocks = long.blocks.clone();
        for (i, w) in short.blocks.iter().enumerate() {
            blocks[i] |= w;
        }
        VertexSet { blocks }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let len = self.blocks.len().min(other.blocks.len());
        let mut s = VertexSet {
            blocks: (0..len).map(|i| self.blocks[i] & other.blocks[i]).collect(),
        };
        s.normalize();
        s
    }

    /// Members of `self` not in `other`.
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut blocks = self.blocks.clone();
        for (i, w) in other.blocks.iter().enumerate().take(blocks.len()) {
            blocks[i] &= !w;
        }
        let mut s = VertexSet { blocks };
        s.normalize();
        s
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.blocks
            .iter()
            .zip(other.blocks.iter())
            .all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.blocks.iter().enumerate().all(|(i, w)| {
            let o = other.blocks.get(i).copied().unwrap_or(0);
            w & !o == 0
        })
    }

    /// `{0..n} \ self`; members of `self` at or beyond `n` are dropped.
    pub fn complement_within(&self, n: usize) -> VertexSet {
        VertexSet::full(n).difference(self)
    }

    /// Members strictly greater than `v`.
    pub fn above(&self, v: usize) -> VertexSet {
        let (w, b) = (v / WORD, v % WORD);
        let mut blocks = self.blocks.clone();
        for blk in blocks.iter_mut().take(w) {
            *blk = 0;
        }
        if w < blocks.len() && b + 1 < WORD {
            blocks[w] &= !((1u64 << (b + 1)) - 1);
        } else if w < blocks.len() {
            blocks[w] = 0;
        }
        let mut s = VertexSet { blocks };
        s.normalize();
        s
    }

    /// Ascending member list.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

pub struct Iter<'a> {
    set: &'a VertexSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let b = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * WORD + b);
            }
            self.word += 1;
            if self.word >= self.set.blocks.len() {
                return None;
            }
            self.bits = self.set.blocks[self.word];
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
