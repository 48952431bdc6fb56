//! Fixed-width bitmask sets over the dense indices of an ambient poset.

use std::cmp::Ordering;
use std::fmt;

#[cfg(not(feature = "wide"))]
type Bits = u64;
#[cfg(feature = "wide")]
type Bits = u128;

/// A set of element indices `0..Subset::CAPACITY`.
///
/// Ordering is lexicographic on the ascending member list, so `{0, 1}` sorts
/// before `{1}` and the empty set sorts first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(Bits);

impl Subset {
    /// Largest ground set a `Subset` can address.
    pub const CAPACITY: usize = Bits::BITS as usize;

    pub const fn empty() -> Self {
        Subset(0)
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < Self::CAPACITY);
        Subset(1 << i)
    }

    /// The set `{0, 1, .., n - 1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= Self::CAPACITY);
        if n == Self::CAPACITY {
            Subset(Bits::MAX)
        } else {
            Subset((1 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(Self::empty(), |s, i| s.with(i))
    }

    /// Build from raw bits, used by exhaustive sweeps over `0..2^n`.
    pub fn from_bits(bits: u64) -> Self {
        Subset(bits as Bits)
    }

    /// Low 64 bits of the mask.
    #[allow(clippy::unnecessary_cast)]
    pub fn bits(self) -> u64 {
        self.0 as u64
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < Self::CAPACITY && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        debug_assert!(i < Self::CAPACITY);
        Subset(self.0 | 1 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        if i < Self::CAPACITY {
            Subset(self.0 & !(1 << i))
        } else {
            self
        }
    }

    pub fn insert(&mut self, i: usize) {
        *self = self.with(i);
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
    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, in increasing bit order, starting with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_indices(iter)
    }
}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending member iterator.
#[derive(Clone)]
pub struct Iter(Bits);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Submask enumeration of a fixed mask.
pub struct Subsets {
    mask: Bits,
    next: Option<Bits>,
}

impl Iterator for Subsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            // standard submask increment
            Some(cur.wrapping_sub(self.mask) & self.mask)
        };
        Some(Subset(cur))
    }
}
