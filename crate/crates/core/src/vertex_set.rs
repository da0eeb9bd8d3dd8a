use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const WORD: usize = u64::BITS as usize;

/// A subset of the vertices `0..universe` of some graph, stored as a bitset.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for w in s.words.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    /// Builds a set from vertex indices, rejecting anything outside the universe.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, it: I) -> Result<Self> {
        let mut s = Self::empty(universe);
        for v in it {
            if v >= universe {
                return Err(Error::InvalidSet {
                    vertex: v,
                    vertex_count: universe,
                });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Interprets the low `universe` bits of `mask` as membership flags.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= WORD, "mask form needs universe <= 64");
        let mut s = Self::empty(universe);
        if let Some(w) = s.words.first_mut() {
            *w = mask;
        }
        s.trim();
        s
    }

    /// The set as a bitmask, if the universe fits in one word.
    pub fn to_mask(&self) -> Option<u64> {
        if self.universe > WORD {
            return None;
        }
        Some(self.words.first().copied().unwrap_or(0))
    }

    fn trim(&mut self) {
        let rem = self.universe % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: usize) -> bool {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        let (w, b) = (v / WORD, v % WORD);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] |= 1 << b;
        !was
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, b) = (v / WORD, v % WORD);
        let was = self.words[w] >> b & 1 == 1;
        self.words[w] &= !(1 << b);
        was
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * WORD + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter().chain(std::iter::repeat(&0)))
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn complement(&self) -> VertexSet {
        let mut s = VertexSet {
            universe: self.universe,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        assert_eq!(
            self.universe, other.universe,
            "vertex sets over different graphs"
        );
        VertexSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_and_len() {
        let mut s = VertexSet::empty(130);
        assert!(s.is_empty());
        assert!(s.insert(0));
        assert!(s.insert(64));
        assert!(s.insert(129));
        assert!(!s.insert(64));
        assert_eq!(s.len(), 3);
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        assert!(s.remove(64));
        assert!(!s.contains(64));
        assert!(!s.contains(500));
    }

    #[test]
    fn full_and_complement() {
        let s = VertexSet::full(70);
        assert_eq!(s.len(), 70);
        assert!(s.complement().is_empty());
        let t = VertexSet::from_vertices(70, [1, 2, 69]).unwrap();
        assert_eq!(t.complement().len(), 67);
        assert_eq!(t.union(&t.complement()), s);
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(matches!(
            VertexSet::from_vertices(3, [0, 3]),
            Err(Error::InvalidSet { vertex: 3, .. })
        ));
    }

    #[test]
    fn mask_roundtrip() {
        let s = VertexSet::from_mask(9, 0b1_0000_0101);
        assert_eq!(s.to_vec(), vec![0, 2, 8]);
        assert_eq!(s.to_mask(), Some(0b1_0000_0101));
        assert_eq!(VertexSet::from_mask(3, u64::MAX).len(), 3);
        assert_eq!(VertexSet::empty(65).to_mask(), None);
    }

    #[test]
    fn subset() {
        let a = VertexSet::from_vertices(5, [1, 2]).unwrap();
        let b = VertexSet::from_vertices(5, [1, 2, 4]).unwrap();
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(b.difference(&a).to_vec(), vec![4]);
        assert_eq!(b.intersection(&a), a);
    }
}
