//! The prime spectrum as a finite topological space.
//!
//! Points are the primes, indexed in lexicographic order of their sorted atom
//! names. The closed basis is the family of supports
//! `supp(a) = {P : a ∉ P}`, and the closure of a point `P` is the set of
//! primes contained in `P`.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::exec::{self, Execution};
use crate::ideals::{self, Ideal};
use crate::model::{ModelError, Presentation};
use crate::object::{ObjectClass, ObjectFamily};
pub use crate::topology::{FiniteTopology, PointSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("no representing object for the open set {0:?}")]
    NoRepresentingObject(PointSet),
}

#[derive(Clone, Debug)]
pub struct Spectrum<'p> {
    model: &'p Presentation,
    points: Vec<Ideal>,
    /// Support of each atom.
    supports: Vec<PointSet>,
    closures: Vec<PointSet>,
}

impl<'p> Spectrum<'p> {
    pub fn new(p: &'p Presentation) -> Self {
        Spectrum::new_with(p, Execution::default())
    }

    pub fn new_with(p: &'p Presentation, exec: Execution) -> Self {
        let points = ideals::all_primes_with(p, exec);
        let supports = (0..p.atom_count())
            .map(|x| {
                (0..points.len())
                    .filter(|&i| !points[i].atoms().contains(x))
                    .collect()
            })
            .collect();
        let closures = points
            .iter()
            .map(|q| {
                (0..points.len())
                    .filter(|&i| points[i].is_subset(q))
                    .collect()
            })
            .collect();
        Spectrum {
            model: p,
            points,
            supports,
            closures,
        }
    }

    pub fn model(&self) -> &'p Presentation {
        self.model
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Ideal] {
        &self.points
    }

    pub fn point(&self, i: usize) -> Ideal {
        self.points[i]
    }

    /// Index of the point equal to `prime`, if it is one.
    pub fn index_of(&self, prime: &Ideal) -> Option<usize> {
        self.points.iter().position(|q| q == prime)
    }

    /// Sorted atom names of point `i`.
    pub fn point_names(&self, i: usize) -> Vec<&'p str> {
        self.model.names_of(self.points[i].atoms())
    }

    /// `{1,3}` style label of point `i`.
    pub fn point_label(&self, i: usize) -> String {
        format!("{{{}}}", self.point_names(i).join(","))
    }

    pub fn atom_support(&self, x: usize) -> &PointSet {
        &self.supports[x]
    }

    /// `supp(a)` for an object already known to be in range.
    pub(crate) fn supp(&self, a: ObjectClass) -> PointSet {
        a.iter()
            .fold(PointSet::new(), |acc, x| acc.union(&self.supports[x]))
    }

    pub fn supp_obj(&self, a: ObjectClass) -> Result<PointSet, SpectrumError> {
        self.model.check_class(a)?;
        Ok(self.supp(a))
    }

    /// `U(a)`, the complement of the support.
    pub fn u(&self, a: ObjectClass) -> PointSet {
        self.supp(a).complement(self.len())
    }

    /// Points meeting no member of `s`.
    pub fn z_family(&self, s: &ObjectFamily) -> Result<PointSet, SpectrumError> {
        for a in s.iter() {
            self.model.check_class(a)?;
        }
        Ok((0..self.len())
            .filter(|&i| s.iter().all(|a| !self.points[i].contains(a)))
            .collect())
    }

    /// Points meeting some member of `s`.
    pub fn u_family(&self, s: &ObjectFamily) -> Result<PointSet, SpectrumError> {
        for a in s.iter() {
            self.model.check_class(a)?;
        }
        Ok(s.iter()
            .fold(PointSet::new(), |acc, a| acc.union(&self.u(a))))
    }

    /// Closure as the intersection of all supports containing `w`.
    pub fn closure(&self, w: &PointSet) -> PointSet {
        ObjectClass::all(self.model.atom_count())
            .map(|a| self.supp(a))
            .filter(|s| w.is_subset(s))
            .fold(self.all_points(), |acc, s| acc.intersection(&s))
    }

    /// Pairs `(i, j)` with point `i` a proper subset of point `j`, so that
    /// `i` lies in the closure of `j`.
    pub fn specialization(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for j in 0..n {
            for i in 0..n {
                if i != j && self.closures[j].contains(i) {
                    out.push((i, j));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Specialization pairs with nothing strictly in between.
    pub fn covering_pairs(&self) -> Vec<(usize, usize)> {
        let pairs = self.specialization();
        let set: HashSet<(usize, usize)> = pairs.iter().copied().collect();
        pairs
            .iter()
            .copied()
            .filter(|&(i, j)| {
                !(0..self.len()).any(|k| set.contains(&(i, k)) && set.contains(&(k, j)))
            })
            .collect()
    }

    pub fn minimal_primes(&self) -> PointSet {
        (0..self.len())
            .filter(|&i| {
                !(0..self.len()).any(|j| j != i && self.points[j].is_subset(&self.points[i]))
            })
            .collect()
    }

    /// Factors `b1..bn` from `s` whose product lies in `⟨a⟩`, or `None` when
    /// `U(a)` is not inside `U(s)`.
    ///
    /// Factors are taken in nondecreasing position in `s` (sorted by size,
    /// then names), repetition allowed. The shortest list wins, ties broken
    /// lexicographically. An empty `s` is covered only by the empty product.
    pub fn covering_witness(
        &self,
        a: ObjectClass,
        s: &ObjectFamily,
    ) -> Result<Option<Vec<ObjectClass>>, SpectrumError> {
        self.model.check_class(a)?;
        if !self.u(a).is_subset(&self.u_family(s)?) {
            return Ok(None);
        }
        let p = self.model;
        let target = ideals::generated(p, a);
        let mut members: Vec<ObjectClass> = s.iter().collect();
        members.sort_by(|x, y| ideals::canonical_key(p, *x).cmp(&ideals::canonical_key(p, *y)));
        if members.is_empty() {
            return Ok(target.contains(p.unit()).then(Vec::new));
        }
        // Breadth-first over (product, last position); the first path to a
        // state is the lexicographically least one.
        let mut seen: HashSet<(ObjectClass, usize)> = HashSet::new();
        let mut level: Vec<(ObjectClass, usize, Vec<usize>)> = Vec::new();
        for (k, &b) in members.iter().enumerate() {
            if seen.insert((b, k)) {
                level.push((b, k, vec![k]));
            }
        }
        while !level.is_empty() {
            if let Some((_, _, path)) = level.iter().find(|(prod, _, _)| target.contains(*prod)) {
                return Ok(Some(path.iter().map(|&k| members[k]).collect()));
            }
            let mut next = Vec::new();
            for (prod, last, path) in &level {
                for (k, &b) in members.iter().enumerate().skip(*last) {
                    let q = p.tensor(*prod, b);
                    if seen.insert((q, k)) {
                        let mut longer = path.clone();
                        longer.push(k);
                        next.push((q, k, longer));
                    }
                }
            }
            level = next;
        }
        unreachable!("U(a) ⊆ U(S) but no product of members of S lies in ⟨a⟩")
    }

    /// For each open set (complements of the closed sets, in the same order)
    /// an object `a` with `U(a)` equal to it: the unit for the empty open,
    /// `0` for the whole space, otherwise the least object by size and names.
    pub fn quasicompact_open_as_u(&self) -> Result<Vec<(PointSet, ObjectClass)>, SpectrumError> {
        let p = self.model;
        let mut objects: Vec<ObjectClass> = ObjectClass::all(p.atom_count()).collect();
        objects.sort_by(|x, y| ideals::canonical_key(p, *x).cmp(&ideals::canonical_key(p, *y)));
        let mut out = Vec::new();
        for z in self.closed_sets() {
            let open = z.complement(self.len());
            let rep = if open.is_empty() {
                Some(p.unit())
            } else if open.len() == self.len() {
                Some(ObjectClass::ZERO)
            } else {
                objects.iter().copied().find(|&a| self.u(a) == open)
            };
            match rep {
                Some(a) if self.u(a) == open => out.push((open, a)),
                _ => return Err(SpectrumError::NoRepresentingObject(open)),
            }
        }
        Ok(out)
    }

    /// The prime `{a : U(a) ∩ z ≠ ∅}` when that collection is a prime ideal.
    ///
    /// As a collection of objects it is the union of the points of `z`; it is
    /// an ideal exactly when one point of `z` contains all the others.
    pub fn prime_of_closed(&self, z: &PointSet) -> Option<Ideal> {
        let union = z.iter().fold(ObjectClass::ZERO, |acc, i| {
            acc.union(self.points[i].atoms())
        });
        z.iter()
            .map(|i| self.points[i])
            .find(|q| q.atoms() == union)
    }

    pub fn verify_spectral(&self) -> SpectralReport {
        let mut failures = Vec::new();
        let p = self.model;
        let t0 = self.is_t0();
        if !t0 {
            failures.push("two points share a closure".to_string());
        }

        let atoms: ObjectFamily = (0..p.atom_count()).map(ObjectClass::atom).collect();
        let whole_is_u0 = self.u(ObjectClass::ZERO) == self.all_points();
        let atom_cover = self.u_family(&atoms).expect("atoms are in range");
        let cover_ok = atom_cover != self.all_points()
            || matches!(
                self.covering_witness(ObjectClass::ZERO, &atoms),
                Ok(Some(_))
            );
        let quasi_compact = whole_is_u0 && cover_ok;
        if !quasi_compact {
            failures.push("the whole space has no finite cover by basic opens".to_string());
        }

        let opens = self.quasicompact_open_as_u();
        let mut open_basis = opens.is_ok();
        if let Err(e) = &opens {
            failures.push(e.to_string());
        }
        'pairs: for a in ObjectClass::all(p.atom_count()) {
            for b in ObjectClass::all(p.atom_count()) {
                if self.u(a).intersection(&self.u(b)) != self.u(a.union(b)) {
                    failures.push(format!(
                        "U({}) ∩ U({}) differs from U({})",
                        p.format_class(a),
                        p.format_class(b),
                        p.format_class(a.union(b))
                    ));
                    open_basis = false;
                    break 'pairs;
                }
            }
        }

        let sober = self.is_sober();
        if !sober {
            failures.push("an irreducible closed set lacks a unique generic point".to_string());
        }

        let supports: HashSet<PointSet> = ObjectClass::all(p.atom_count())
            .map(|a| self.supp(a))
            .collect();
        let noetherian = self.closed_sets().iter().all(|z| supports.contains(z));
        if !noetherian {
            failures.push("some closed set is not a support".to_string());
        }

        SpectralReport {
            t0,
            quasi_compact,
            open_basis,
            sober,
            noetherian,
            failures,
        }
    }

    /// JSON export: points as atom lists, atom supports, specialization
    /// pairs.
    pub fn to_json(&self) -> SpectrumJson {
        let p = self.model;
        SpectrumJson {
            points: (0..self.len())
                .map(|i| self.point_names(i).into_iter().map(String::from).collect())
                .collect(),
            supports: (0..p.atom_count())
                .map(|x| {
                    (
                        p.atom_name(x).to_string(),
                        self.supports[x].iter().collect(),
                    )
                })
                .collect(),
            specialization: self
                .specialization()
                .into_iter()
                .map(|(i, j)| [i, j])
                .collect(),
        }
    }

    /// Graphviz export with one node per point and one edge per covering
    /// pair, drawn from the generic point to its specialization.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph spc {\n");
        for i in 0..self.len() {
            writeln!(out, "  p{i} [label=\"{}\"];", self.point_label(i)).unwrap();
        }
        for (i, j) in self.covering_pairs() {
            writeln!(out, "  p{j} -> p{i};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

impl FiniteTopology for Spectrum<'_> {
    fn point_count(&self) -> usize {
        self.len()
    }

    fn point_closure(&self, i: usize) -> &PointSet {
        &self.closures[i]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumJson {
    pub points: Vec<Vec<String>>,
    pub supports: BTreeMap<String, Vec<usize>>,
    pub specialization: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralReport {
    pub t0: bool,
    pub quasi_compact: bool,
    pub open_basis: bool,
    pub sober: bool,
    pub noetherian: bool,
    pub failures: Vec<String>,
}

impl SpectralReport {
    pub fn ok(&self) -> bool {
        self.t0 && self.quasi_compact && self.open_basis && self.sober && self.noetherian
    }
}

/// Supports of every object, computed in parallel when asked. Index `m` holds
/// `supp` of the object with mask `m`.
pub fn all_supports(spc: &Spectrum<'_>, exec: Execution) -> Vec<PointSet> {
    let count = 1u64 << spc.model().atom_count();
    exec::map_masks(count, exec, |m| spc.supp(ObjectClass::from_bits(m)))
}
