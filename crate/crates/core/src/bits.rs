//! Fixed-length membership bit vectors.
//!
//! Frames of up to 64 elements fit in a single inline word, so the common
//! case never touches the heap.

use smallvec::{smallvec, SmallVec};
use std::cmp::Ordering;

const WORD: usize = 64;

/// Membership bits for a subset of an `n`-element frame.
///
/// Ordering is by the numeric value of the bit pattern (bit `i` has weight
/// `2^i`), so the empty set sorts first and the full set last.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: SmallVec<[u64; 1]>,
}

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD).max(1)
}

impl BitSet {
    pub fn empty(len: usize) -> Self {
        BitSet {
            words: smallvec![0; words_for(len)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    /// Builds a set from the low `len` bits of `mask`. Only valid for `len <= 64`.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        debug_assert!(len <= WORD);
        let keep = if len == WORD { u64::MAX } else { (1u64 << len) - 1 };
        BitSet {
            words: smallvec![mask & keep],
        }
    }

    /// The single-word value, if the set fits in one word.
    pub fn as_mask(&self) -> Option<u64> {
        (self.words.len() == 1).then(|| self.words[0])
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / WORD] &= !(1 << (i % WORD));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words.get(i / WORD).is_some_and(|w| w & (1 << (i % WORD)) != 0)
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn intersection(&self, other: &Self) -> Self {
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        BitSet {
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// Complement relative to a frame of `len` elements.
    pub fn complement(&self, len: usize) -> Self {
        let mut out = Self::empty(len);
        for i in 0..len {
            if !self.contains(i) {
                out.insert(i);
            }
        }
        out
    }

    /// Indices of the members, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + tz)
            })
        })
    }
}

impl Ord for BitSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for BitSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for BitSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.ones()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wide_sets_span_words() {
        let mut s = BitSet::empty(130);
        s.insert(0);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(s.count(), 3);
        assert_eq!(s.complement(130).count(), 127);
        assert!(s.as_mask().is_none());
    }

    #[test]
    fn ordering_is_numeric() {
        let a = BitSet::from_mask(3, 0b001);
        let b = BitSet::from_mask(3, 0b110);
        assert!(a < b);
        let mut lo = BitSet::empty(70);
        lo.insert(63);
        let mut hi = BitSet::empty(70);
        hi.insert(64);
        assert!(lo < hi);
    }

    #[test]
    fn subset_and_intersection() {
        let a = BitSet::from_mask(4, 0b0011);
        let b = BitSet::from_mask(4, 0b0111);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.intersection(&b), a);
        assert_eq!(a.union(&b), b);
        assert!(!a.intersects(&BitSet::from_mask(4, 0b1000)));
        assert_eq!(BitSet::full(4).as_mask(), Some(0b1111));
    }
}
