//! Fixed-length bitsets backed by `u64` words.
//!
//! Bits past `len` are always zero; every mutating operation re-masks the
//! trailing word so that equality and popcount stay exact.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(len: usize) -> usize {
    len.div_ceil(64)
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            len,
            words: vec![0; word_count(len)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = BitSet {
            len,
            words: vec![!0; word_count(len)],
        };
        s.trim();
        s
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = BitSet::new(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    #[inline]
    fn trim(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1u64 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn union_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn complement(&self) -> BitSet {
        let mut s = BitSet {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn intersects(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// `|self ∩ other|` without allocating.
    pub fn intersection_count(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// True when `self ∩ other ∩ !exclude` is nonempty.
    pub fn intersects_excluding(&self, other: &BitSet, exclude: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .zip(&exclude.words)
            .any(|((a, b), c)| a & b & !c != 0)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    fn shifted_up(&self, p: usize) -> BitSet {
        let mut out = BitSet::new(self.len);
        let (ws, bs) = (p / 64, p % 64);
        for w in ws..out.words.len() {
            let mut v = self.words[w - ws] << bs;
            if bs > 0 && w > ws {
                v |= self.words[w - ws - 1] >> (64 - bs);
            }
            out.words[w] = v;
        }
        out.trim();
        out
    }

    fn shifted_down(&self, p: usize) -> BitSet {
        let mut out = BitSet::new(self.len);
        let (ws, bs) = (p / 64, p % 64);
        let n = self.words.len();
        for w in 0..n.saturating_sub(ws) {
            let mut v = self.words[w + ws] >> bs;
            if bs > 0 && w + ws + 1 < n {
                v |= self.words[w + ws + 1] << (64 - bs);
            }
            out.words[w] = v;
        }
        out
    }

    /// Cyclic shift: bit `i` moves to `(i + p) mod len`.
    pub fn rotated(&self, p: usize) -> BitSet {
        if self.len == 0 {
            return self.clone();
        }
        let p = p % self.len;
        if p == 0 {
            return self.clone();
        }
        let mut out = self.shifted_up(p);
        out.union_with(&self.shifted_down(self.len - p));
        out
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * 64 + tz);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_is_trimmed() {
        let s = BitSet::full(70);
        assert_eq!(s.count(), 70);
        assert_eq!(s.complement().count(), 0);
    }

    proptest! {
        #[test]
        fn rotation_matches_naive(len in 1usize..200, p in 0usize..400, bits in proptest::collection::vec(any::<bool>(), 200)) {
            let s = BitSet::from_indices(len, (0..len).filter(|&i| bits[i]));
            let r = s.rotated(p);
            let expect = BitSet::from_indices(len, s.iter().map(|i| (i + p) % len));
            prop_assert_eq!(r, expect);
        }
    }
}
