use std::fmt;

use fixedbitset::FixedBitSet;

use super::{Elem, RingId};

/// A subset of the elements of one ring, stored as a bit-vector over handles.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    ring: RingId,
    bits: FixedBitSet,
}

impl ElementSet {
    pub fn empty(ring: RingId, size: usize) -> Self {
        Self { ring, bits: FixedBitSet::with_capacity(size) }
    }

    pub fn full(ring: RingId, size: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(size);
        bits.insert_range(..);
        Self { ring, bits }
    }

    pub fn from_elems(ring: RingId, size: usize, elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut set = Self::empty(ring, size);
        for e in elems {
            set.insert(e);
        }
        set
    }

    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    /// Width of the underlying bit-vector, i.e. the size of the ring.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.bits.contains(e)
    }

    pub fn insert(&mut self, e: Elem) -> bool {
        !self.bits.put(e)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// True when the set is exactly `{0}` (handle 0 is always the zero element).
    pub fn is_zero_only(&self) -> bool {
        self.bits.contains(0) && self.bits.ones().nth(1).is_none()
    }

    /// True when the set contains some element other than zero.
    pub fn has_nonzero(&self) -> bool {
        self.bits.ones().any(|e| e != 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Elem> + '_ {
        self.bits.ones()
    }

    pub fn first_nonzero(&self) -> Option<Elem> {
        self.bits.ones().find(|&e| e != 0)
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.ring, other.ring, "element sets belong to different rings");
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Self { ring: self.ring, bits }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check_same(other);
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Self { ring: self.ring, bits }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_same(other);
        self.bits.intersect_with(&other.bits);
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_same(other);
        self.bits.union_with(&other.bits);
    }

    pub fn complement(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        Self { ring: self.ring, bits }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_same(other);
        self.bits.is_subset(&other.bits)
    }

    /// True when the two sets share an element other than zero.
    pub fn meets_nontrivially(&self, other: &Self) -> bool {
        self.check_same(other);
        self.bits.intersection(&other.bits).any(|e| e != 0)
    }

    /// Re-label the set as a subset of another ring with the same handles
    /// (used when moving between a ring and its opposite).
    pub fn rebind(&self, ring: RingId) -> Self {
        Self { ring, bits: self.bits.clone() }
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.bits.ones()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_only_and_nonzero() {
        let id = RingId::fresh();
        let z = ElementSet::from_elems(id, 8, [0]);
        assert!(z.is_zero_only());
        assert!(!z.has_nonzero());
        let s = ElementSet::from_elems(id, 8, [0, 4]);
        assert!(!s.is_zero_only());
        assert_eq!(s.first_nonzero(), Some(4));
        assert!(ElementSet::empty(id, 8).is_empty());
        assert_eq!(ElementSet::full(id, 8).len(), 8);
    }

    #[test]
    fn set_algebra() {
        let id = RingId::fresh();
        let a = ElementSet::from_elems(id, 8, [0, 2, 4, 6]);
        let b = ElementSet::from_elems(id, 8, [0, 4, 5]);
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), vec![0, 4]);
        assert_eq!(a.union(&b).len(), 5);
        assert_eq!(a.complement().iter().collect::<Vec<_>>(), vec![1, 3, 5, 7]);
        assert!(a.meets_nontrivially(&b));
        assert!(a.intersection(&b).is_subset(&a));
    }

    #[test]
    #[should_panic(expected = "different rings")]
    fn mixing_rings_panics() {
        let a = ElementSet::full(RingId::fresh(), 4);
        let b = ElementSet::full(RingId::fresh(), 4);
        let _ = a.union(&b);
    }
}
