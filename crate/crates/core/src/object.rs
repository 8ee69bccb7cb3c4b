//! Objects up to the equivalence visible to thick ideals.
//!
//! A thick subcategory contains an object iff it contains every indecomposable
//! summand, so an object is recorded as the set of its summand classes
//! ("atoms"). Direct sum is set union and the zero object is the empty set.
//! Multiplicities are dropped.

use std::collections::BTreeSet;
use std::fmt;

/// Largest number of atoms a presentation may declare.
pub const MAX_ATOMS: usize = 64;

/// A finite set of atom indices, stored as a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectClass(u64);

impl ObjectClass {
    /// The zero object.
    pub const ZERO: ObjectClass = ObjectClass(0);

    pub const fn from_bits(bits: u64) -> Self {
        ObjectClass(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn atom(index: usize) -> Self {
        debug_assert!(index < MAX_ATOMS);
        ObjectClass(1 << index)
    }

    /// All atoms `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= MAX_ATOMS {
            ObjectClass(u64::MAX)
        } else {
            ObjectClass((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(ObjectClass::ZERO, |acc, i| acc.union(ObjectClass::atom(i)))
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, index: usize) -> bool {
        index < MAX_ATOMS && (self.0 >> index) & 1 == 1
    }

    pub const fn union(self, other: ObjectClass) -> ObjectClass {
        ObjectClass(self.0 | other.0)
    }

    pub const fn intersection(self, other: ObjectClass) -> ObjectClass {
        ObjectClass(self.0 & other.0)
    }

    pub const fn difference(self, other: ObjectClass) -> ObjectClass {
        ObjectClass(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: ObjectClass) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn insert(&mut self, index: usize) {
        self.0 |= 1 << index;
    }

    pub fn remove(&mut self, index: usize) {
        self.0 &= !(1 << index);
    }

    /// Atom indices in increasing order.
    pub fn iter(self) -> Atoms {
        Atoms(self.0)
    }

    /// Every subset of `0..n`, ordered by mask value.
    pub fn all(n: usize) -> impl Iterator<Item = ObjectClass> {
        assert!(n < MAX_ATOMS, "cannot enumerate subsets of {n} atoms");
        (0..1u64 << n).map(ObjectClass)
    }

    /// Every subset of `self`.
    pub fn subsets(self) -> impl Iterator<Item = ObjectClass> {
        // Standard submask walk, emitted in increasing order.
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some(((cur | !full).wrapping_add(1)) & full)
            };
            Some(ObjectClass(cur))
        })
    }
}

impl fmt::Debug for ObjectClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for ObjectClass {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        ObjectClass::from_indices(iter)
    }
}

/// Iterator over the atom indices of an [`ObjectClass`].
#[derive(Clone, Debug)]
pub struct Atoms(u64);

impl Iterator for Atoms {
    type Item = usize;

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

impl ExactSizeIterator for Atoms {}

/// A finite collection of objects.
///
/// A family is ⊗-multiplicative when it contains the unit and is closed under
/// the tensor product; see [`crate::ideals::multiplicative_closure`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ObjectFamily(BTreeSet<ObjectClass>);

impl ObjectFamily {
    pub fn new() -> Self {
        ObjectFamily(BTreeSet::new())
    }

    pub fn insert(&mut self, a: ObjectClass) -> bool {
        self.0.insert(a)
    }

    pub fn contains(&self, a: ObjectClass) -> bool {
        self.0.contains(&a)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Members in their canonical (mask) order.
    pub fn iter(&self) -> impl Iterator<Item = ObjectClass> + '_ {
        self.0.iter().copied()
    }

    /// Union of the atoms of all members.
    pub fn atom_union(&self) -> ObjectClass {
        self.iter().fold(ObjectClass::ZERO, ObjectClass::union)
    }
}

impl FromIterator<ObjectClass> for ObjectFamily {
    fn from_iter<T: IntoIterator<Item = ObjectClass>>(iter: T) -> Self {
        ObjectFamily(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[ObjectClass; N]> for ObjectFamily {
    fn from(members: [ObjectClass; N]) -> Self {
        members.into_iter().collect()
    }
}
