//! Support data `(X, σ)` and the universal map `X -> Spc`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use super::{MorphismError, SpaceMap, OBJECT_CHECK_LIMIT, PAIR_CHECK_LIMIT};
use crate::ideals::{self, Ideal};
use crate::model::{is_token, parse_class_list, scan_sections, ParseError, Presentation};
use crate::object::ObjectClass;
use crate::spectrum::{FiniteTopology, PointSet, Spectrum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("point {0} is out of range")]
    OutOfRange(usize),
    #[error("duplicate point `{0}`")]
    DuplicatePoint(String),
    #[error("invalid point name `{0}`")]
    InvalidPoint(String),
    #[error("closure of `{0}` does not contain it")]
    NotReflexive(String),
    #[error("closure of `{point}` contains `{via}` but not `{missing}` from its closure")]
    NotTransitive {
        point: String,
        via: String,
        missing: String,
    },
    #[error("{found} support sets given for {expected} atoms")]
    SigmaSize { found: usize, expected: usize },
}

/// A finite space with named points, given by point closures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSpace {
    names: Vec<String>,
    closures: Vec<PointSet>,
}

impl FiniteSpace {
    /// Closures must be reflexive and transitive; nothing is filled in.
    pub fn new(names: Vec<String>, closures: Vec<PointSet>) -> Result<Self, SpaceError> {
        let n = names.len();
        let mut seen = BTreeSet::new();
        for name in &names {
            if !is_token(name) {
                return Err(SpaceError::InvalidPoint(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(SpaceError::DuplicatePoint(name.clone()));
            }
        }
        if closures.len() != n {
            return Err(SpaceError::OutOfRange(closures.len()));
        }
        for (i, c) in closures.iter().enumerate() {
            if let Some(bad) = c.iter().find(|&j| j >= n) {
                return Err(SpaceError::OutOfRange(bad));
            }
            if !c.contains(i) {
                return Err(SpaceError::NotReflexive(names[i].clone()));
            }
            for j in c.iter() {
                if let Some(k) = closures[j].iter().find(|&k| !c.contains(k)) {
                    return Err(SpaceError::NotTransitive {
                        point: names[i].clone(),
                        via: names[j].clone(),
                        missing: names[k].clone(),
                    });
                }
            }
        }
        Ok(FiniteSpace { names, closures })
    }

    pub fn discrete(names: Vec<String>) -> Result<Self, SpaceError> {
        let closures = (0..names.len()).map(PointSet::singleton).collect();
        FiniteSpace::new(names, closures)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `{eta,m}` style label.
    pub fn label(&self, w: &PointSet) -> String {
        let names: Vec<&str> = w.iter().map(|i| self.name(i)).collect();
        format!("{{{}}}", names.join(","))
    }
}

impl FiniteTopology for FiniteSpace {
    fn point_count(&self) -> usize {
        self.names.len()
    }

    fn point_closure(&self, i: usize) -> &PointSet {
        &self.closures[i]
    }
}

/// A space with a subset `σ(x)` for every atom `x`, extended to objects by
/// union.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportData {
    space: FiniteSpace,
    sigma: Vec<PointSet>,
}

impl SupportData {
    pub fn new(
        p: &Presentation,
        space: FiniteSpace,
        sigma: Vec<PointSet>,
    ) -> Result<Self, SpaceError> {
        if sigma.len() != p.atom_count() {
            return Err(SpaceError::SigmaSize {
                found: sigma.len(),
                expected: p.atom_count(),
            });
        }
        if let Some(bad) = sigma
            .iter()
            .flat_map(|s| s.iter())
            .find(|&i| i >= space.point_count())
        {
            return Err(SpaceError::OutOfRange(bad));
        }
        Ok(SupportData { space, sigma })
    }

    /// The support datum `(Spc, supp)` of a presentation.
    pub fn of_spectrum(spc: &Spectrum<'_>) -> SupportData {
        let names = (0..spc.len()).map(|i| format!("p{i}")).collect();
        let closures = (0..spc.len())
            .map(|i| spc.point_closure(i).clone())
            .collect();
        let space = FiniteSpace::new(names, closures).expect("spectrum closures are a preorder");
        let sigma = (0..spc.model().atom_count())
            .map(|x| spc.atom_support(x).clone())
            .collect();
        SupportData { space, sigma }
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn sigma_atom(&self, x: usize) -> &PointSet {
        &self.sigma[x]
    }

    pub fn sigma(&self, a: ObjectClass) -> PointSet {
        a.iter()
            .fold(PointSet::new(), |acc, x| acc.union(&self.sigma[x]))
    }
}

fn unknown_point(line: usize, column: usize, point: String) -> ParseError {
    ParseError::UnknownPoint {
        line,
        column,
        point,
    }
}

fn unknown_atom(line: usize, column: usize, atom: String) -> ParseError {
    ParseError::UnknownAtom { line, column, atom }
}

/// Parses `[space] point: closure-points` and `[sigma] atom = points` lines.
pub fn parse_support_data(p: &Presentation, src: &str) -> Result<SupportData, ParseError> {
    let entries = scan_sections(src, &["space", "sigma"])?;

    let mut names: Vec<String> = Vec::new();
    let mut rows = Vec::new();
    for entry in entries.iter().filter(|e| e.section == "space") {
        let (name, rest) = entry
            .split_once(":")
            .ok_or_else(|| entry.error("expected `point: closure-points`"))?;
        if !is_token(name.text) {
            return Err(name.error(format!("invalid point name `{}`", name.text)));
        }
        if names.iter().any(|n| n == name.text) {
            return Err(name.error(format!("duplicate point `{}`", name.text)));
        }
        names.push(name.text.to_string());
        rows.push((name, rest));
    }
    let resolve = |s: &str| names.iter().position(|n| n == s);
    let mut closures = Vec::with_capacity(rows.len());
    for (_, rest) in &rows {
        closures.push(
            parse_class_list(rest, resolve, unknown_point)?
                .into_iter()
                .collect(),
        );
    }
    let space = FiniteSpace::new(names.clone(), closures).map_err(|e| {
        let row = match &e {
            SpaceError::NotReflexive(n) | SpaceError::NotTransitive { point: n, .. } => {
                rows.iter().find(|(name, _)| name.text == n)
            }
            _ => None,
        };
        match row {
            Some((name, _)) => name.error(e.to_string()),
            None => ParseError::syntax(0, 0, e.to_string()),
        }
    })?;

    let mut sigma: Vec<Option<PointSet>> = vec![None; p.atom_count()];
    for entry in entries.iter().filter(|e| e.section == "sigma") {
        let (atom, rest) = entry
            .split_once("=")
            .ok_or_else(|| entry.error("expected `atom = points`"))?;
        let x = p
            .atom_index(atom.text)
            .ok_or_else(|| unknown_atom(atom.line, atom.column, atom.text.to_string()))?;
        if sigma[x].is_some() {
            return Err(atom.error(format!("duplicate sigma entry for `{}`", atom.text)));
        }
        sigma[x] = Some(
            parse_class_list(&rest, resolve, unknown_point)?
                .into_iter()
                .collect(),
        );
    }
    let sigma = sigma
        .into_iter()
        .enumerate()
        .map(|(x, s)| {
            s.ok_or_else(|| ParseError::MissingEntry {
                section: "sigma",
                name: p.atom_name(x).to_string(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    SupportData::new(p, space, sigma).map_err(|e| ParseError::syntax(0, 0, e.to_string()))
}

/// The conditions a support datum must meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Axiom {
    /// Every `σ(x)` is closed.
    #[serde(rename = "closedness")]
    Closed,
    /// `σ(0) = ∅` and `σ(1) = X`.
    #[serde(rename = "SD1")]
    Sd1,
    /// `σ(a⊕b) = σ(a) ∪ σ(b)`.
    #[serde(rename = "SD2")]
    Sd2,
    /// `σ(Ta) = σ(a)`.
    #[serde(rename = "SD3")]
    Sd3,
    /// `σ(a) ⊆ σ(b) ∪ σ(c)` for every triangle `a -> b -> c`.
    #[serde(rename = "SD4")]
    Sd4,
    /// `σ(a⊗b) = σ(a) ∩ σ(b)`.
    #[serde(rename = "SD5")]
    Sd5,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::Closed => "closedness",
            Axiom::Sd1 => "SD1",
            Axiom::Sd2 => "SD2",
            Axiom::Sd3 => "SD3",
            Axiom::Sd4 => "SD4",
            Axiom::Sd5 => "SD5",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportViolation {
    pub axiom: Axiom,
    pub witness: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SupportReport {
    pub violations: Vec<SupportViolation>,
}

impl SupportReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn has(&self, axiom: Axiom) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }
}

impl fmt::Display for SupportReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "{}: {}", v.axiom, v.witness)?;
        }
        Ok(())
    }
}

pub fn verify_support_data(p: &Presentation, sd: &SupportData) -> SupportReport {
    let x = &sd.space;
    let n = p.atom_count();
    let label = |w: &PointSet| x.label(w);
    let cls = |a: ObjectClass| p.format_class(a);
    let mut out = Vec::new();
    let mut push = |axiom, witness: String| out.push(SupportViolation { axiom, witness });

    for a in 0..n {
        if !x.is_closed(&sd.sigma[a]) {
            push(
                Axiom::Closed,
                format!(
                    "σ({}) = {} is not closed",
                    p.atom_name(a),
                    label(&sd.sigma[a])
                ),
            );
        }
    }

    if !sd.sigma(ObjectClass::ZERO).is_empty() {
        push(Axiom::Sd1, "σ(0) is not empty".to_string());
    }
    let s1 = sd.sigma(p.unit());
    if s1 != x.all_points() {
        push(
            Axiom::Sd1,
            format!(
                "σ({}) = {} is not the whole space",
                cls(p.unit()),
                label(&s1)
            ),
        );
    }

    let objects: Vec<ObjectClass> = if n <= PAIR_CHECK_LIMIT {
        ObjectClass::all(n).collect()
    } else {
        (0..n).map(ObjectClass::atom).collect()
    };
    for &a in &objects {
        for &b in &objects {
            let sum = sd.sigma(a.union(b));
            if sum != sd.sigma(a).union(&sd.sigma(b)) {
                push(Axiom::Sd2, format!("({}, {})", cls(a), cls(b)));
            }
        }
    }

    for a in 0..n {
        let atom = ObjectClass::atom(a);
        let shifted = sd.sigma(p.shift(atom));
        if shifted != sd.sigma[a] {
            push(
                Axiom::Sd3,
                format!(
                    "σ(T{}) = {} but σ({}) = {}",
                    p.atom_name(a),
                    label(&shifted),
                    p.atom_name(a),
                    label(&sd.sigma[a])
                ),
            );
        }
    }

    for t in p.triangle_generators() {
        let sa = sd.sigma(t.a);
        let bc = sd.sigma(t.b).union(&sd.sigma(t.c));
        if !sa.is_subset(&bc) {
            push(
                Axiom::Sd4,
                format!("triangle {};{};{}", cls(t.a), cls(t.b), cls(t.c)),
            );
        }
    }

    for &a in &objects {
        for &b in &objects {
            let prod = sd.sigma(p.tensor(a, b));
            let meet = sd.sigma(a).intersection(&sd.sigma(b));
            if prod != meet {
                push(
                    Axiom::Sd5,
                    format!(
                        "({}, {}): σ({}⊗{}) = {} but σ({}) ∩ σ({}) = {}",
                        cls(a),
                        cls(b),
                        cls(a),
                        cls(b),
                        label(&prod),
                        cls(a),
                        cls(b),
                        label(&meet)
                    ),
                );
            }
        }
    }

    SupportReport { violations: out }
}

fn require_support_data(p: &Presentation, sd: &SupportData) -> Result<(), MorphismError> {
    let report = verify_support_data(p, sd);
    if report.ok() {
        Ok(())
    } else {
        Err(MorphismError::NotSupportData(
            report.to_string().trim_end().replace('\n', "; "),
        ))
    }
}

/// `{x : σ(x) ⊆ Y}`, checked to be a thick tensor ideal.
pub fn support_data_ideal(
    p: &Presentation,
    sd: &SupportData,
    y: &PointSet,
) -> Result<Ideal, MorphismError> {
    let atoms: ObjectClass = (0..p.atom_count())
        .filter(|&x| sd.sigma[x].is_subset(y))
        .collect();
    Ideal::new(p, atoms).map_err(|e| MorphismError::Postcondition(e.to_string()))
}

/// The map `f(x) = {a : x ∉ σ(a)}` into the spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalMap {
    pub map: SpaceMap,
    /// Uniqueness was established by trying every point map.
    pub exhaustive: bool,
}

/// Computes the universal map and checks its defining properties:
/// each `f(x)` is prime, `f` is continuous, `σ(a) = f⁻¹(supp a)` for all
/// `a`, and no other point map has that property.
pub fn universal_map(
    p: &Presentation,
    sd: &SupportData,
    spc: &Spectrum<'_>,
) -> Result<UniversalMap, MorphismError> {
    require_support_data(p, sd)?;
    let space = &sd.space;
    let mut images = Vec::with_capacity(space.point_count());
    for x in 0..space.point_count() {
        let atoms: ObjectClass = (0..p.atom_count())
            .filter(|&a| !sd.sigma[a].contains(x))
            .collect();
        let from_y = support_data_ideal(
            p,
            sd,
            &PointSet::singleton(x).complement(space.point_count()),
        )?;
        debug_assert_eq!(from_y.atoms(), atoms);
        let ideal =
            Ideal::new(p, atoms).map_err(|e| MorphismError::Postcondition(e.to_string()))?;
        let i = spc.index_of(&ideal).ok_or_else(|| {
            MorphismError::Postcondition(format!(
                "f({}) = {{{}}} is not prime",
                space.name(x),
                p.names_of(atoms).join(",")
            ))
        })?;
        images.push(i);
    }
    let map = SpaceMap(images);

    if !space.is_continuous_into(spc, &map.0) {
        return Err(MorphismError::Postcondition("f is not continuous".into()));
    }
    let pulls_back = |g: &[usize]| {
        (0..p.atom_count())
            .all(|a| crate::topology::preimage(g, spc.atom_support(a)) == sd.sigma[a])
    };
    if !pulls_back(&map.0) {
        return Err(MorphismError::Postcondition(
            "σ(a) differs from f⁻¹(supp a)".into(),
        ));
    }
    if p.atom_count() <= OBJECT_CHECK_LIMIT {
        for a in ObjectClass::all(p.atom_count()) {
            if map.preimage(&spc.supp(a)) != sd.sigma(a) {
                return Err(MorphismError::Postcondition(format!(
                    "σ({}) differs from f⁻¹(supp {})",
                    p.format_class(a),
                    p.format_class(a)
                )));
            }
        }
    }

    let exhaustive = space.point_count() <= 4 && spc.len() <= 4;
    if exhaustive {
        let total = spc.len().pow(space.point_count() as u32);
        let mut g = vec![0usize; space.point_count()];
        let mut count = 0;
        for mut code in 0..total {
            for slot in g.iter_mut() {
                *slot = code % spc.len();
                code /= spc.len();
            }
            if pulls_back(&g) {
                count += 1;
                if g != map.0 {
                    return Err(MorphismError::Postcondition(format!(
                        "a second map {g:?} pulls supports back to σ"
                    )));
                }
            }
        }
        if count != 1 {
            return Err(MorphismError::Postcondition(format!(
                "{count} maps pull supports back to σ"
            )));
        }
    } else {
        // Any such g has g(x) missing exactly the atoms with x ∈ σ(a), so
        // the candidates for g(x) are the points with that atom set.
        for x in 0..space.point_count() {
            let candidates = (0..spc.len())
                .filter(|&q| {
                    (0..p.atom_count())
                        .all(|a| spc.atom_support(a).contains(q) == sd.sigma[a].contains(x))
                })
                .count();
            if candidates != 1 {
                return Err(MorphismError::Postcondition(format!(
                    "{candidates} possible images for {}",
                    space.name(x)
                )));
            }
        }
    }
    Ok(UniversalMap { map, exhaustive })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassifyingReport {
    pub t0: bool,
    /// Every irreducible closed subset has a unique generic point.
    pub sober: bool,
    /// `Y -> {a : σ(a) ⊆ Y}` is a bijection onto the radical ideals with
    /// inverse `J -> σ(J)`.
    pub bijection: bool,
    pub failures: Vec<String>,
}

impl ClassifyingReport {
    pub fn classifying(&self) -> bool {
        self.sober && self.bijection
    }
}

pub fn classifying_report(
    p: &Presentation,
    sd: &SupportData,
) -> Result<ClassifyingReport, MorphismError> {
    require_support_data(p, sd)?;
    let space = &sd.space;
    let mut failures = Vec::new();
    let t0 = space.is_t0();
    let sober = space.is_sober();
    if !sober {
        failures.push("some irreducible closed subset lacks a unique generic point".to_string());
    }

    let radical: BTreeSet<Ideal> = ideals::all_ideals(p)
        .into_iter()
        .filter(|j| ideals::is_radical(p, j))
        .collect();
    let mut hit: BTreeSet<Ideal> = BTreeSet::new();
    let mut bijection = true;
    for y in space.closed_sets() {
        let k = support_data_ideal(p, sd, &y)?;
        if !radical.contains(&k) {
            failures.push(format!(
                "{} is sent to a non-radical ideal",
                space.label(&y)
            ));
            bijection = false;
        }
        if !hit.insert(k) {
            failures.push(format!(
                "{} gives the same ideal {{{}}} as an earlier set",
                space.label(&y),
                p.names_of(k.atoms()).join(",")
            ));
            bijection = false;
        }
        if sd.sigma(k.atoms()) != y {
            bijection = false;
        }
    }
    for j in radical.difference(&hit) {
        failures.push(format!(
            "radical ideal {{{}}} is not of the form {{a : σ(a) ⊆ Y}}",
            p.names_of(j.atoms()).join(",")
        ));
        bijection = false;
    }
    for j in &radical {
        let y = sd.sigma(j.atoms());
        if support_data_ideal(p, sd, &y)? != *j {
            bijection = false;
        }
    }
    Ok(ClassifyingReport {
        t0,
        sober,
        bijection,
        failures,
    })
}

pub fn is_classifying(p: &Presentation, sd: &SupportData) -> Result<bool, MorphismError> {
    Ok(classifying_report(p, sd)?.classifying())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomeoReport {
    pub map: UniversalMap,
    /// `(point of X, index in Spc)`.
    pub correspondence: Vec<(String, usize)>,
    pub homeomorphism: bool,
}

/// For classifying data, checks that the universal map is a bijection
/// sending closed sets to closed sets.
pub fn classifying_homeo_check(
    p: &Presentation,
    sd: &SupportData,
    spc: &Spectrum<'_>,
) -> Result<HomeoReport, MorphismError> {
    if !is_classifying(p, sd)? {
        return Err(MorphismError::Precondition(
            "support datum is not classifying".into(),
        ));
    }
    let map = universal_map(p, sd, spc)?;
    let space = &sd.space;
    let bijective = map.map.is_injective() && map.map.len() == spc.len();
    let closed = space
        .closed_sets()
        .iter()
        .all(|z| spc.is_closed(&map.map.image(z)));
    let correspondence = (0..space.point_count())
        .map(|x| (space.name(x).to_string(), map.map.apply(x)))
        .collect();
    Ok(HomeoReport {
        homeomorphism: bijective && closed,
        correspondence,
        map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn spectrum_is_classifying(spc: &Spectrum<'_>) -> bool {
        let sd = SupportData::of_spectrum(spc);
        matches!(is_classifying(spc.model(), &sd), Ok(true))
            && crate::classification::classify_on(spc, crate::Execution::Sequential).roundtrip_ok
    }

    fn load(p: &Presentation, text: &str) -> SupportData {
        parse_support_data(p, text).unwrap()
    }

    #[test]
    fn parse_sierpinski() {
        let dvr = fixtures::dvr();
        let sd = load(&dvr, fixtures::DVR_SIERPINSKI);
        assert_eq!(sd.space().names(), ["eta", "m"]);
        assert_eq!(*sd.space().point_closure(0), PointSet::from([0, 1]));
        assert_eq!(*sd.sigma_atom(1), PointSet::from([1]));
    }

    #[test]
    fn parse_errors() {
        let dvr = fixtures::dvr();
        let err = parse_support_data(&dvr, "[space]\nx: y\n").unwrap_err();
        assert!(matches!(
            err,
            ParseError::UnknownPoint {
                line: 2,
                column: 4,
                ..
            }
        ));
        let err = parse_support_data(&dvr, "[space]\nx: x\n[sigma]\nu = x\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::MissingEntry {
                section: "sigma",
                name: "k".into()
            }
        );
        let err = parse_support_data(&dvr, "[space]\nx: x\ny: x\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 3, .. }));
    }

    #[test]
    fn strict_closures() {
        let names = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        let not_transitive = vec![
            PointSet::from([0, 1]),
            PointSet::from([1, 2]),
            PointSet::from([2]),
        ];
        assert!(matches!(
            FiniteSpace::new(names.clone(), not_transitive),
            Err(SpaceError::NotTransitive { .. })
        ));
        assert!(FiniteSpace::discrete(names).is_ok());
    }

    #[test]
    fn axioms() {
        let dvr = fixtures::dvr();
        assert!(verify_support_data(&dvr, &load(&dvr, fixtures::DVR_SIERPINSKI)).ok());
        let bad = verify_support_data(&dvr, &load(&dvr, fixtures::DVR_NOTCLOSED));
        assert!(bad.has(Axiom::Closed));
        let field = fixtures::field();
        assert!(verify_support_data(&field, &load(&field, fixtures::FIELD_ONEPOINT)).ok());
        let two = fixtures::twopoints();
        let bad = verify_support_data(&two, &load(&two, fixtures::TWOPOINTS_SD5));
        assert!(bad.has(Axiom::Sd5));
        assert!(bad.to_string().contains("(e, f)"));
    }

    #[test]
    fn support_ideals() {
        let dvr = fixtures::dvr();
        let sd = load(&dvr, fixtures::DVR_SIERPINSKI);
        let k = dvr.object(&["k"]).unwrap();
        assert_eq!(
            support_data_ideal(&dvr, &sd, &PointSet::from([1]))
                .unwrap()
                .atoms(),
            k
        );
        assert_eq!(
            support_data_ideal(&dvr, &sd, &PointSet::from([0, 1])).unwrap(),
            Ideal::whole(&dvr)
        );
        assert_eq!(
            support_data_ideal(&dvr, &sd, &PointSet::new()).unwrap(),
            Ideal::zero()
        );
    }

    #[test]
    fn universal_maps() {
        let dvr = fixtures::dvr();
        let spc = Spectrum::new(&dvr);
        let sd = load(&dvr, fixtures::DVR_SIERPINSKI);
        let f = universal_map(&dvr, &sd, &spc).unwrap();
        // eta -> {k}, m -> {}
        assert_eq!(f.map, SpaceMap(vec![1, 0]));
        assert!(f.exhaustive);

        let field = fixtures::field();
        let spc = Spectrum::new(&field);
        let f = universal_map(&field, &load(&field, fixtures::FIELD_ONEPOINT), &spc).unwrap();
        assert_eq!(f.map, SpaceMap(vec![0]));

        let two = fixtures::twopoints();
        let spc = Spectrum::new(&two);
        assert!(matches!(
            universal_map(&two, &load(&two, fixtures::TWOPOINTS_SD5), &spc),
            Err(MorphismError::NotSupportData(_))
        ));
    }

    #[test]
    fn spectrum_maps_to_itself_by_identity() {
        for p in fixtures::all() {
            let spc = Spectrum::new(&p);
            let sd = SupportData::of_spectrum(&spc);
            let f = universal_map(&p, &sd, &spc).unwrap();
            assert_eq!(f.map, SpaceMap((0..spc.len()).collect()));
            assert!(spectrum_is_classifying(&spc));
        }
    }

    #[test]
    fn classifying_data() {
        let dvr = fixtures::dvr();
        assert!(is_classifying(&dvr, &load(&dvr, fixtures::DVR_SIERPINSKI)).unwrap());
        assert!(!is_classifying(&dvr, &load(&dvr, fixtures::DVR_ONEPOINT)).unwrap());
        let field = fixtures::field();
        assert!(is_classifying(&field, &load(&field, fixtures::FIELD_ONEPOINT)).unwrap());
    }

    #[test]
    fn homeomorphisms() {
        let cases = [
            (fixtures::dvr(), fixtures::DVR_SIERPINSKI),
            (fixtures::twopoints(), fixtures::TWOPOINTS_DISCRETE),
            (fixtures::stabz3(), fixtures::STABZ3_ONEPOINT),
            (fixtures::field(), fixtures::FIELD_ONEPOINT),
        ];
        for (p, text) in cases {
            let spc = Spectrum::new(&p);
            let r = classifying_homeo_check(&p, &load(&p, text), &spc).unwrap();
            assert!(r.homeomorphism);
        }
        let dvr = fixtures::dvr();
        let spc = Spectrum::new(&dvr);
        let r = classifying_homeo_check(&dvr, &load(&dvr, fixtures::DVR_SIERPINSKI), &spc).unwrap();
        assert!(r.correspondence.contains(&("m".to_string(), 0)));
        assert!(matches!(
            classifying_homeo_check(&dvr, &load(&dvr, fixtures::DVR_ONEPOINT), &spc),
            Err(MorphismError::Precondition(_))
        ));
    }
}
