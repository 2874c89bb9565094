//! Fixed-capacity vertex bitsets.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Number of 64-bit words in a [`VertexSet`].
pub const WORDS: usize = 4;

/// Largest vertex count supported by [`crate::Graph`].
pub const MAX_VERTICES: usize = WORDS * 64;

/// A set of vertex indices below [`MAX_VERTICES`], stored as a bitmask.
///
/// A `VertexSet` carries no reference to the graph it belongs to; callers keep
/// it within `0..n` of the graph they use it with.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const fn empty() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex set capacity exceeded");
        let mut s = VertexSet::empty();
        for (w, word) in s.words.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = VertexSet::empty();
        s.insert(v);
        s
    }

    /// Builds a set from a `u64` mask over vertices `0..64`.
    pub fn from_mask(mask: u64) -> Self {
        let mut s = VertexSet::empty();
        s.words[0] = mask;
        s
    }

    /// The low 64 bits of the set.
    pub fn low_mask(&self) -> u64 {
        self.words[0]
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.words[v >> 6] >> (v & 63) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < MAX_VERTICES, "vertex {v} exceeds set capacity");
        self.words[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < MAX_VERTICES {
            self.words[v >> 6] &= !(1u64 << (v & 63));
        }
    }

    #[inline]
    pub fn toggle(&mut self, v: usize) {
        assert!(v < MAX_VERTICES, "vertex {v} exceeds set capacity");
        self.words[v >> 6] ^= 1u64 << (v & 63);
    }

    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = *self;
        for i in 0..WORDS {
            s.words[i] |= other.words[i];
        }
        s
    }

    #[inline]
    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = *self;
        for i in 0..WORDS {
            s.words[i] &= other.words[i];
        }
        s
    }

    #[inline]
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = *self;
        for i in 0..WORDS {
            s.words[i] &= !other.words[i];
        }
        s
    }

    #[inline]
    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = *self;
        for i in 0..WORDS {
            s.words[i] ^= other.words[i];
        }
        s
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        (0..WORDS).all(|i| self.words[i] & !other.words[i] == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        (0..WORDS).all(|i| self.words[i] & other.words[i] == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    /// Smallest element, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Largest element, if any.
    pub fn last(&self) -> Option<usize> {
        for i in (0..WORDS).rev() {
            let w = self.words[i];
            if w != 0 {
                return Some(i * 64 + 63 - w.leading_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            index: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the elements of a [`VertexSet`].
pub struct Iter {
    words: [u64; WORDS],
    index: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.index < WORDS {
            let w = self.words[self.index];
            if w != 0 {
                let bit = w.trailing_zeros() as usize;
                self.words[self.index] = w & (w - 1);
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
        }
        None
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = items.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex {v} exceeds capacity {MAX_VERTICES}"
            )));
        }
        Ok(items.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_len() {
        assert_eq!(VertexSet::full(0).len(), 0);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(65).len(), 65);
        assert_eq!(VertexSet::full(256).len(), 256);
        assert_eq!(VertexSet::full(130).last(), Some(129));
    }

    #[test]
    fn set_algebra() {
        let a: VertexSet = [1, 5, 70, 200].iter().collect();
        let b: VertexSet = [5, 70, 3].iter().collect();
        assert_eq!(a.intersection(&b).to_vec(), vec![5, 70]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 200]);
        assert_eq!(a.symmetric_difference(&b).to_vec(), vec![1, 3, 200]);
        assert!(a.intersection(&b).is_subset(&a));
        assert_eq!(a.first(), Some(1));
        assert_eq!(a.last(), Some(200));
        assert!(!a.contains(2));
        assert!(a.contains(200));
    }
}
