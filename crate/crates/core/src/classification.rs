//! Radical ideals versus specialization-closed subsets of the spectrum.
//!
//! A finite spectrum is noetherian, so the subsets to classify by are simply
//! the specialization-closed ones, which on a finite space are the closed
//! sets. The quasi-compactness condition needed for infinite spaces holds
//! automatically.

use serde::Serialize;

use crate::exec::{self, Execution};
use crate::ideals::{self, Ideal};
use crate::model::Presentation;
use crate::object::{ObjectClass, ObjectFamily};
use crate::spectrum::{FiniteTopology, PointSet, Spectrum, SpectrumError};

/// Union of the supports of the members of `e`.
pub fn supp_family(spc: &Spectrum<'_>, e: &ObjectFamily) -> Result<PointSet, SpectrumError> {
    for a in e.iter() {
        spc.model().check_class(a)?;
    }
    let out = e
        .iter()
        .fold(PointSet::new(), |acc, a| acc.union(&spc.supp(a)));
    debug_assert_eq!(out, supp_family_direct(spc, e));
    Ok(out)
}

/// `{P : some member of e is not in P}`.
pub fn supp_family_direct(spc: &Spectrum<'_>, e: &ObjectFamily) -> PointSet {
    (0..spc.len())
        .filter(|&i| e.iter().any(|a| !spc.point(i).contains(a)))
        .collect()
}

/// Support of an ideal: the union of the supports of its objects, which is
/// the union over its atoms.
pub fn supp_ideal(spc: &Spectrum<'_>, j: &Ideal) -> PointSet {
    spc.supp(j.atoms())
}

/// `K_Y`: the atoms whose support lies in `y`.
pub fn category_supported_on(spc: &Spectrum<'_>, y: &PointSet) -> Ideal {
    let p = spc.model();
    let atoms: ObjectClass = (0..p.atom_count())
        .filter(|&x| spc.atom_support(x).is_subset(y))
        .collect();
    let k = Ideal::from_closed(atoms);
    debug_assert_eq!(k, category_supported_on_via_primes(spc, y));
    k
}

/// The intersection of the primes outside `y`.
pub fn category_supported_on_via_primes(spc: &Spectrum<'_>, y: &PointSet) -> Ideal {
    (0..spc.len())
        .filter(|i| !y.contains(*i))
        .fold(Ideal::whole(spc.model()), |acc, i| {
            acc.intersection(&spc.point(i))
        })
}

/// Specialization-closed subsets, sorted by size and then point lists.
pub fn specialization_closed_subsets(spc: &Spectrum<'_>) -> Vec<PointSet> {
    // Point indices follow the lexicographic order of point names, so
    // sorting by indices sorts by point lists.
    spc.closed_sets()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub radical_ideals: Vec<Ideal>,
    pub spec_closed_sets: Vec<PointSet>,
    /// `Y -> K_Y`, in the order of `spec_closed_sets`.
    pub forward: Vec<(PointSet, Ideal)>,
    /// `J -> supp(J)`, in the order of `radical_ideals`.
    pub backward: Vec<(Ideal, PointSet)>,
    pub roundtrip_ok: bool,
    pub failures: Vec<String>,
}

pub fn verify_classification(p: &Presentation) -> ClassificationReport {
    verify_classification_with(p, Execution::default())
}

pub fn verify_classification_with(p: &Presentation, exec: Execution) -> ClassificationReport {
    let spc = Spectrum::new_with(p, exec);
    classify_on(&spc, exec)
}

/// The checks of [`verify_classification`] against a prebuilt spectrum.
pub fn classify_on(spc: &Spectrum<'_>, exec: Execution) -> ClassificationReport {
    let p = spc.model();
    let label = |y: &PointSet| {
        let names: Vec<String> = y.iter().map(|i| spc.point_label(i)).collect();
        format!("[{}]", names.join(","))
    };
    let ideal_label = |j: &Ideal| format!("{{{}}}", p.names_of(j.atoms()).join(","));

    let mut failures = Vec::new();
    let radical_ideals: Vec<Ideal> = ideals::all_ideals_with(p, exec)
        .into_iter()
        .filter(|j| ideals::is_radical(p, j))
        .collect();
    let spec_closed_sets = specialization_closed_subsets(spc);

    let forward: Vec<(PointSet, Ideal)> = exec::map_vec(&spec_closed_sets, exec, |y| {
        (y.clone(), category_supported_on(spc, y))
    });
    let backward: Vec<(Ideal, PointSet)> = radical_ideals
        .iter()
        .map(|j| (*j, supp_ideal(spc, j)))
        .collect();

    // (i) and (ii)
    for (y, k) in &forward {
        if !ideals::is_closed(p, k.atoms()) || !ideals::is_radical(p, k) {
            failures.push(format!("K_Y for Y = {} is not a radical ideal", label(y)));
        }
        if supp_ideal(spc, k) != *y {
            failures.push(format!(
                "supp(K_Y) = {} differs from Y = {}",
                label(&supp_ideal(spc, k)),
                label(y)
            ));
        }
    }
    // (iii)
    for (j, y) in &backward {
        let back = category_supported_on(spc, y);
        if back != *j {
            failures.push(format!(
                "K_supp(J) = {} differs from J = {}",
                ideal_label(&back),
                ideal_label(j)
            ));
        }
    }
    // (iv)
    for (y1, k1) in &forward {
        for (y2, k2) in &forward {
            if y1.is_subset(y2) && !k1.is_subset(k2) {
                failures.push(format!(
                    "Y -> K_Y not monotone at {} ⊆ {}",
                    label(y1),
                    label(y2)
                ));
            }
        }
    }
    for (j1, y1) in &backward {
        for (j2, y2) in &backward {
            if j1.is_subset(j2) && !y1.is_subset(y2) {
                failures.push(format!(
                    "J -> supp(J) not monotone at {} ⊆ {}",
                    ideal_label(j1),
                    ideal_label(j2)
                ));
            }
        }
    }
    if forward.len() != backward.len() {
        failures.push(format!(
            "{} specialization-closed subsets but {} radical ideals",
            forward.len(),
            backward.len()
        ));
    }

    ClassificationReport {
        radical_ideals,
        spec_closed_sets,
        forward,
        backward,
        roundtrip_ok: failures.is_empty(),
        failures,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationRow {
    #[serde(rename = "Y")]
    pub y: Vec<Vec<String>>,
    #[serde(rename = "K_Y")]
    pub k_y: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationJson {
    pub pairs: Vec<ClassificationRow>,
    pub roundtrip_ok: bool,
    pub failures: Vec<String>,
}

impl ClassificationReport {
    pub fn to_json(&self, spc: &Spectrum<'_>) -> ClassificationJson {
        let p = spc.model();
        ClassificationJson {
            pairs: self
                .forward
                .iter()
                .map(|(y, k)| ClassificationRow {
                    y: y.iter()
                        .map(|i| spc.point_names(i).into_iter().map(String::from).collect())
                        .collect(),
                    k_y: p
                        .names_of(k.atoms())
                        .into_iter()
                        .map(String::from)
                        .collect(),
                })
                .collect(),
            roundtrip_ok: self.roundtrip_ok,
            failures: self.failures.clone(),
        }
    }
}

/// Whether `x ∈ ⟨x⊗x⟩` for every atom `x`; equivalently every ideal is
/// radical.
pub fn radical_criterion(p: &Presentation) -> bool {
    (0..p.atom_count()).all(|x| {
        let a = ObjectClass::atom(x);
        ideals::generated(p, p.tensor(a, a)).contains(a)
    })
}
