//! Fixed-width point sets.
//!
//! Every structure handled by this crate has at most [`MAX_POINTS`] points
//! (the Veldkamp space of `G2(9)` has 255), so a point set is a 256-bit mask
//! and all set algebra is a handful of word operations.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Sub};

const WORDS: usize = 4;

/// Largest number of points a [`PointSet`] can index.
pub const MAX_POINTS: usize = WORDS * 64;

/// A set of point indices `< MAX_POINTS`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet([u64; WORDS]);

impl PointSet {
    pub const EMPTY: PointSet = PointSet([0; WORDS]);

    /// The set `{0, 1, ..., n - 1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_POINTS, "point set capacity exceeded: {n}");
        let mut words = [0u64; WORDS];
        for (w, word) in words.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        PointSet(words)
    }

    pub fn singleton(p: usize) -> Self {
        let mut s = Self::EMPTY;
        s.insert(p);
        s
    }

    #[inline]
    pub fn insert(&mut self, p: usize) {
        assert!(p < MAX_POINTS, "point index out of range: {p}");
        self.0[p / 64] |= 1 << (p % 64);
    }

    #[inline]
    pub fn remove(&mut self, p: usize) {
        if p < MAX_POINTS {
            self.0[p / 64] &= !(1 << (p % 64));
        }
    }

    #[inline]
    pub fn contains(&self, p: usize) -> bool {
        p < MAX_POINTS && self.0[p / 64] & (1 << (p % 64)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a & !b == 0)
    }

    /// Complement relative to the universe `{0, ..., n - 1}`.
    pub fn complement(&self, n: usize) -> Self {
        PointSet::full(n) - *self
    }

    /// Smallest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter {
        Iter { words: self.0, word: 0 }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::EMPTY;
        for p in iter {
            s.insert(p);
        }
        s
    }
}

impl<'a> FromIterator<&'a usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

/// Ascending iterator over the members of a [`PointSet`].
pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = &mut self.words[self.word];
            if *w != 0 {
                let bit = w.trailing_zeros() as usize;
                *w &= *w - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
        }
        None
    }
}

impl IntoIterator for PointSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl IntoIterator for &PointSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

macro_rules! word_op {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for PointSet {
            type Output = PointSet;
            #[inline]
            fn $method(self, rhs: PointSet) -> PointSet {
                let mut out = [0u64; WORDS];
                for i in 0..WORDS {
                    out[i] = self.0[i] $op rhs.0[i];
                }
                PointSet(out)
            }
        }
    };
}

word_op!(BitAnd, bitand, &);
word_op!(BitOr, bitor, |);
word_op!(BitXor, bitxor, ^);

impl Sub for PointSet {
    type Output = PointSet;
    #[inline]
    fn sub(self, rhs: PointSet) -> PointSet {
        PointSet(std::array::from_fn(|i| self.0[i] & !rhs.0[i]))
    }
}

impl BitAndAssign for PointSet {
    fn bitand_assign(&mut self, rhs: PointSet) {
        *self = *self & rhs;
    }
}

impl BitOrAssign for PointSet {
    fn bitor_assign(&mut self, rhs: PointSet) {
        *self = *self | rhs;
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_complement() {
        assert_eq!(PointSet::full(0), PointSet::EMPTY);
        assert_eq!(PointSet::full(64).len(), 64);
        assert_eq!(PointSet::full(65).len(), 65);
        assert_eq!(PointSet::full(256).len(), 256);
        let s: PointSet = [1, 3, 70].iter().collect();
        let c = s.complement(100);
        assert_eq!(c.len(), 97);
        assert!(!c.contains(70));
        assert!(c.contains(99));
        assert!(!c.contains(100));
    }

    #[test]
    fn iterates_in_order_across_words() {
        let s: PointSet = [200, 5, 64, 63, 0].iter().collect();
        assert_eq!(s.to_vec(), vec![0, 5, 63, 64, 200]);
        assert_eq!(s.first(), Some(0));
        assert_eq!(PointSet::EMPTY.first(), None);
    }

    proptest! {
        #[test]
        fn algebra_matches_btreeset(
            a in proptest::collection::btree_set(0usize..256, 0..40),
            b in proptest::collection::btree_set(0usize..256, 0..40),
        ) {
            let sa: PointSet = a.iter().collect();
            let sb: PointSet = b.iter().collect();
            let inter: Vec<_> = a.intersection(&b).copied().collect();
            let uni: Vec<_> = a.union(&b).copied().collect();
            let sym: Vec<_> = a.symmetric_difference(&b).copied().collect();
            let diff: Vec<_> = a.difference(&b).copied().collect();
            prop_assert_eq!((sa & sb).to_vec(), inter);
            prop_assert_eq!((sa | sb).to_vec(), uni);
            prop_assert_eq!((sa ^ sb).to_vec(), sym);
            prop_assert_eq!((sa - sb).to_vec(), diff);
            prop_assert_eq!(sa.len(), a.len());
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
        }
    }
}
