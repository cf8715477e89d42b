//! Fixed-width bitsets over small integer ids.
//!
//! Vertices and edge indices are dense integers below [`IdSet::CAPACITY`];
//! every subset in the crate (edges, matchings, decomposition parts, stars)
//! is one machine word, which keeps the set algebra in the solvers cheap.

use std::cmp::Ordering;
use std::fmt;

/// A set of ids drawn from `0..IdSet::CAPACITY`, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IdSet(u64);

impl IdSet {
    pub const CAPACITY: usize = 64;
    pub const EMPTY: IdSet = IdSet(0);

    #[inline]
    pub fn from_bits(bits: u64) -> Self {
        IdSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(id: usize) -> Self {
        debug_assert!(id < Self::CAPACITY);
        IdSet(1u64 << id)
    }

    /// Ids `0..n`.
    pub fn first_n(n: usize) -> Self {
        debug_assert!(n <= Self::CAPACITY);
        if n == Self::CAPACITY {
            IdSet(u64::MAX)
        } else {
            IdSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn insert(&mut self, id: usize) {
        debug_assert!(id < Self::CAPACITY);
        self.0 |= 1u64 << id;
    }

    #[inline]
    pub fn remove(&mut self, id: usize) {
        debug_assert!(id < Self::CAPACITY);
        self.0 &= !(1u64 << id);
    }

    #[inline]
    pub fn contains(self, id: usize) -> bool {
        id < Self::CAPACITY && self.0 & (1u64 << id) != 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: IdSet) -> IdSet {
        IdSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersect(self, other: IdSet) -> IdSet {
        IdSet(self.0 & other.0)
    }

    #[inline]
    pub fn minus(self, other: IdSet) -> IdSet {
        IdSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: IdSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: IdSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest id in the set.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Ids in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic order on the ascending id sequences, the canonical
    /// tie-break used by the solvers (a proper prefix sorts first).
    pub fn cmp_lex(self, other: IdSet) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

impl FromIterator<usize> for IdSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut set = IdSet::EMPTY;
        for id in iter {
            set.insert(id);
        }
        set
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let id = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(id)
        }
    }
}

impl fmt::Debug for IdSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a: IdSet = [1, 3, 5].into_iter().collect();
        let b: IdSet = [3, 4].into_iter().collect();
        assert_eq!(a.len(), 3);
        assert!(a.contains(3));
        assert!(!a.contains(2));
        assert_eq!(a.intersect(b).to_vec(), vec![3]);
        assert_eq!(a.union(b).to_vec(), vec![1, 3, 4, 5]);
        assert_eq!(a.minus(b).to_vec(), vec![1, 5]);
        assert!(IdSet::singleton(3).is_subset(a));
        assert_eq!(a.min(), Some(1));
    }

    #[test]
    fn lex_order_prefers_prefix() {
        let zero = IdSet::singleton(0);
        let zero_two: IdSet = [0, 2].into_iter().collect();
        let one = IdSet::singleton(1);
        assert_eq!(zero.cmp_lex(zero_two), Ordering::Less);
        assert_eq!(zero_two.cmp_lex(one), Ordering::Less);
        assert_eq!(one.cmp_lex(one), Ordering::Equal);
    }
}
