//! Finite topological spaces given by the closures of their points.
//!
//! On a finite space a set is closed iff it contains the closure of each of
//! its points, so a space is fully described by the map `i -> cl{i}`. Both
//! the prime spectrum and user-supplied support-data spaces implement
//! [`FiniteTopology`] and share the derived notions here.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

/// A set of point indices.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PointSet(BTreeSet<usize>);

impl PointSet {
    pub fn new() -> Self {
        PointSet(BTreeSet::new())
    }

    pub fn singleton(i: usize) -> Self {
        PointSet(BTreeSet::from([i]))
    }

    /// `{0, ..., n-1}`.
    pub fn all(n: usize) -> Self {
        (0..n).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn insert(&mut self, i: usize) -> bool {
        self.0.insert(i)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn union(&self, other: &PointSet) -> PointSet {
        PointSet(&self.0 | &other.0)
    }

    pub fn intersection(&self, other: &PointSet) -> PointSet {
        PointSet(&self.0 & &other.0)
    }

    pub fn difference(&self, other: &PointSet) -> PointSet {
        PointSet(&self.0 - &other.0)
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &PointSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    /// Complement inside `{0, ..., n-1}`.
    pub fn complement(&self, n: usize) -> PointSet {
        (0..n).filter(|i| !self.contains(*i)).collect()
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        PointSet(iter.into_iter().collect())
    }
}

impl<const N: usize> From<[usize; N]> for PointSet {
    fn from(points: [usize; N]) -> Self {
        points.into_iter().collect()
    }
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter())
    }
}

/// Sort key for canonical listings of subsets: size, then members.
pub fn set_key(s: &PointSet) -> (usize, Vec<usize>) {
    (s.len(), s.iter().collect())
}

/// A finite space presented by point closures.
pub trait FiniteTopology {
    fn point_count(&self) -> usize;

    /// `cl{i}`, which contains `i`.
    fn point_closure(&self, i: usize) -> &PointSet;

    fn all_points(&self) -> PointSet {
        PointSet::all(self.point_count())
    }

    /// Union of the closures of the points of `w`.
    fn down_closure(&self, w: &PointSet) -> PointSet {
        w.iter()
            .fold(PointSet::new(), |acc, i| acc.union(self.point_closure(i)))
    }

    fn is_closed(&self, w: &PointSet) -> bool {
        w.iter().all(|i| self.point_closure(i).is_subset(w))
    }

    /// `j` is a specialization of `i`.
    fn specializes_to(&self, i: usize, j: usize) -> bool {
        self.point_closure(i).contains(j)
    }

    /// All closed subsets, sorted by size and then members. On a finite
    /// space these are exactly the specialization-closed subsets.
    fn closed_sets(&self) -> Vec<PointSet> {
        let mut seen: BTreeSet<PointSet> = BTreeSet::new();
        let mut queue = VecDeque::from([PointSet::new()]);
        seen.insert(PointSet::new());
        while let Some(z) = queue.pop_front() {
            for i in 0..self.point_count() {
                if z.contains(i) {
                    continue;
                }
                let bigger = z.union(self.point_closure(i));
                if seen.insert(bigger.clone()) {
                    queue.push_back(bigger);
                }
            }
        }
        let mut out: Vec<PointSet> = seen.into_iter().collect();
        out.sort_by_key(set_key);
        out
    }

    fn is_t0(&self) -> bool {
        let n = self.point_count();
        (0..n).all(|i| (i + 1..n).all(|j| self.point_closure(i) != self.point_closure(j)))
    }

    /// Points whose closure is a singleton.
    fn closed_points(&self) -> PointSet {
        (0..self.point_count())
            .filter(|&i| self.point_closure(i).len() == 1)
            .collect()
    }

    /// Points whose closure is exactly `z`.
    fn generic_points(&self, z: &PointSet) -> PointSet {
        (0..self.point_count())
            .filter(|&i| self.point_closure(i) == z)
            .collect()
    }

    /// Nonempty, closed, and not a union of two proper closed subsets.
    fn is_irreducible(&self, z: &PointSet) -> bool {
        if z.is_empty() || !self.is_closed(z) {
            return false;
        }
        let proper: Vec<PointSet> = self
            .closed_sets()
            .into_iter()
            .filter(|c| c.is_subset(z) && c != z)
            .collect();
        !proper
            .iter()
            .any(|a| proper.iter().any(|b| a.union(b) == *z))
    }

    /// Every irreducible closed set has exactly one generic point.
    fn is_sober(&self) -> bool {
        self.closed_sets()
            .iter()
            .filter(|z| self.is_irreducible(z))
            .all(|z| self.generic_points(z).len() == 1)
    }

    /// Maximal irreducible closed subsets, each with its generic point,
    /// ordered by generic point.
    fn irreducible_components(&self) -> Vec<(PointSet, usize)> {
        let n = self.point_count();
        (0..n)
            .filter(|&i| {
                let ci = self.point_closure(i);
                !(0..n).any(|j| {
                    let cj = self.point_closure(j);
                    ci.is_subset(cj) && ci != cj
                })
            })
            .filter(|&i| {
                // keep one representative per closure
                let ci = self.point_closure(i);
                !(0..i).any(|j| self.point_closure(j) == ci)
            })
            .map(|i| (self.point_closure(i).clone(), i))
            .collect()
    }

    /// Whether `map` is continuous into `to`. On finite spaces this is
    /// monotonicity for specialization.
    fn is_continuous_into<T: FiniteTopology + ?Sized>(&self, to: &T, map: &[usize]) -> bool {
        (0..self.point_count()).all(|i| {
            self.point_closure(i)
                .iter()
                .all(|j| to.specializes_to(map[i], map[j]))
        })
    }
}

/// Preimage of `w` under a point map.
pub fn preimage(map: &[usize], w: &PointSet) -> PointSet {
    (0..map.len()).filter(|&i| w.contains(map[i])).collect()
}

/// Image of `w` under a point map.
pub fn image(map: &[usize], w: &PointSet) -> PointSet {
    w.iter().map(|i| map[i]).collect()
}
