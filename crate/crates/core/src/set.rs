//! Dense vertex sets over at most 64 vertices.

use core::fmt;
use core::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, Not, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::graph::VertexId;

/// Largest vertex count any graph in this crate may have.
pub const MAX_VERTICES: usize = 64;

/// A subset of `0..64`, stored as a single machine word.
///
/// Iteration is always in increasing vertex order, which is the fixed total
/// order on vertices used throughout the crate.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "alloc::vec::Vec<usize>", from = "alloc::vec::Vec<usize>")]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: VertexId) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn contains(self, v: VertexId) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: VertexId) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: VertexId) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn with(self, v: VertexId) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    #[inline]
    pub const fn without(self, v: VertexId) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// The ≺-minimum member.
    #[inline]
    pub fn first(self) -> Option<VertexId> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as VertexId)
    }

    /// The ≺-maximum member.
    #[inline]
    pub fn last(self) -> Option<VertexId> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as VertexId)
    }

    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Members in decreasing order.
    pub fn iter_rev(self) -> impl Iterator<Item = VertexId> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = 63 - bits.leading_zeros() as VertexId;
                bits &= !(1u64 << v);
                Some(v)
            }
        })
    }

    /// All subsets of `self`, in increasing order of their bit patterns.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        core::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(VertexSet(cur))
        })
    }
}

#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = VertexId;

    #[inline]
    fn next(&mut self) -> Option<VertexId> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as VertexId;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = VertexId;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl From<alloc::vec::Vec<usize>> for VertexSet {
    fn from(v: alloc::vec::Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl From<VertexSet> for alloc::vec::Vec<usize> {
    fn from(s: VertexSet) -> Self {
        s.iter().collect()
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $op:tt) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $f(self, rhs: VertexSet) -> VertexSet {
                VertexSet(self.0 $op rhs.0)
            }
        }
    };
}

binop!(BitOr, bitor, |);
binop!(BitAnd, bitand, &);
binop!(BitXor, bitxor, ^);

impl Sub for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    #[inline]
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl BitOrAssign for VertexSet {
    #[inline]
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAndAssign for VertexSet {
    #[inline]
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl SubAssign for VertexSet {
    #[inline]
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// A set of events, indexed by `2 * vertex + kind` (begin = 0, end = 1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct EventSet(u128);

impl EventSet {
    pub const EMPTY: EventSet = EventSet(0);

    #[inline]
    fn bit(e: crate::model::Event) -> u128 {
        1u128 << e.index()
    }

    #[inline]
    pub fn contains(self, e: crate::model::Event) -> bool {
        self.0 & Self::bit(e) != 0
    }

    #[inline]
    pub fn insert(&mut self, e: crate::model::Event) {
        self.0 |= Self::bit(e);
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: EventSet) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub const fn union(self, other: EventSet) -> EventSet {
        EventSet(self.0 | other.0)
    }

    /// Begin events of every member of `s`.
    pub fn begins(s: VertexSet) -> EventSet {
        s.iter().map(crate::model::Event::begin).collect()
    }

    /// End events of every member of `s`.
    pub fn ends(s: VertexSet) -> EventSet {
        s.iter().map(crate::model::Event::end).collect()
    }

    /// Both events of every member of `s`.
    pub fn both(s: VertexSet) -> EventSet {
        EventSet::begins(s).union(EventSet::ends(s))
    }

    pub fn iter(self) -> impl Iterator<Item = crate::model::Event> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(crate::model::Event::from_index(i))
        })
    }
}

impl FromIterator<crate::model::Event> for EventSet {
    fn from_iter<I: IntoIterator<Item = crate::model::Event>>(iter: I) -> Self {
        let mut s = EventSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl fmt::Debug for EventSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn set_algebra() {
        let a: VertexSet = [0, 2, 5].into_iter().collect();
        let b: VertexSet = [2, 3].into_iter().collect();
        assert_eq!((a | b).iter().collect::<Vec<_>>(), [0, 2, 3, 5]);
        assert_eq!((a & b).iter().collect::<Vec<_>>(), [2]);
        assert_eq!((a - b).iter().collect::<Vec<_>>(), [0, 5]);
        assert_eq!((a ^ b).iter().collect::<Vec<_>>(), [0, 3, 5]);
        assert_eq!(a.first(), Some(0));
        assert_eq!(a.last(), Some(5));
        assert_eq!(a.iter_rev().collect::<Vec<_>>(), [5, 2, 0]);
        assert!(VertexSet::EMPTY.first().is_none());
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s: VertexSet = [1, 4, 6].into_iter().collect();
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|x| x.is_subset(s)));
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
        assert_eq!(VertexSet::full(64).len(), 64);
    }
}
