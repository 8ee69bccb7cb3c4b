//! Tensor triangulated functors between presentations and their maps on
//! spectra.

use std::sync::Arc;

use super::{MorphismError, SpaceMap, OBJECT_CHECK_LIMIT};
use crate::ideals::{self, Ideal};
use crate::model::{parse_class_list, scan_sections, ParseError, Presentation};
use crate::object::{ObjectClass, ObjectFamily};
use crate::spectrum::{FiniteTopology, PointSet, Spectrum};

/// A functor given by the image of each source atom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelFunctor {
    source: Arc<Presentation>,
    target: Arc<Presentation>,
    on_atoms: Vec<ObjectClass>,
}

impl ModelFunctor {
    /// Builds the functor without checking its invariants; see
    /// [`ModelFunctor::check`].
    pub fn new(
        source: Arc<Presentation>,
        target: Arc<Presentation>,
        on_atoms: Vec<ObjectClass>,
    ) -> Result<Self, MorphismError> {
        if on_atoms.len() != source.atom_count() {
            return Err(MorphismError::NotTtFunctor(format!(
                "{} atom images for {} source atoms",
                on_atoms.len(),
                source.atom_count()
            )));
        }
        for &a in &on_atoms {
            target.check_class(a)?;
        }
        Ok(ModelFunctor {
            source,
            target,
            on_atoms,
        })
    }

    pub fn identity(p: Arc<Presentation>) -> Self {
        let on_atoms = (0..p.atom_count()).map(ObjectClass::atom).collect();
        ModelFunctor {
            source: p.clone(),
            target: p,
            on_atoms,
        }
    }

    pub fn source(&self) -> &Arc<Presentation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Presentation> {
        &self.target
    }

    pub fn on_atoms(&self) -> &[ObjectClass] {
        &self.on_atoms
    }

    /// Image of a source object: the union of the images of its atoms.
    pub fn apply(&self, a: ObjectClass) -> ObjectClass {
        a.iter()
            .fold(ObjectClass::ZERO, |acc, x| acc.union(self.on_atoms[x]))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &ModelFunctor) -> Result<ModelFunctor, MorphismError> {
        if *self.target != *next.source {
            return Err(MorphismError::Incompatible);
        }
        Ok(ModelFunctor {
            source: self.source.clone(),
            target: next.target.clone(),
            on_atoms: self.on_atoms.iter().map(|&a| next.apply(a)).collect(),
        })
    }

    /// Every failed invariant: unit, tensor, shift, and triangles mapped to
    /// triangles.
    pub fn violations(&self) -> Vec<String> {
        let (s, t) = (&*self.source, &*self.target);
        let mut out = Vec::new();
        let fu = self.apply(s.unit());
        if fu != t.unit() {
            out.push(format!(
                "unit: F({}) = {} but the target unit is {}",
                s.format_class(s.unit()),
                t.format_class(fu),
                t.format_class(t.unit())
            ));
        }
        for x in 0..s.atom_count() {
            for y in x..s.atom_count() {
                let left = self.apply(s.tensor_atoms(x, y));
                let right = t.tensor(self.on_atoms[x], self.on_atoms[y]);
                if left != right {
                    out.push(format!(
                        "tensor: F({}⊗{}) = {} but F({})⊗F({}) = {}",
                        s.atom_name(x),
                        s.atom_name(y),
                        t.format_class(left),
                        s.atom_name(x),
                        s.atom_name(y),
                        t.format_class(right)
                    ));
                }
            }
        }
        for x in 0..s.atom_count() {
            let left = self.apply(s.shift_atom(x));
            let right = t.shift(self.on_atoms[x]);
            if left != right {
                out.push(format!(
                    "shift: F(T{}) = {} but T(F({})) = {}",
                    s.atom_name(x),
                    t.format_class(left),
                    s.atom_name(x),
                    t.format_class(right)
                ));
            }
        }
        for g in s.triangle_generators() {
            let image =
                crate::model::Triangle::new(self.apply(g.a), self.apply(g.b), self.apply(g.c));
            if !t.is_triangle(&image) {
                out.push(format!(
                    "triangles: {};{};{} maps to {};{};{}, not a triangle",
                    s.format_class(g.a),
                    s.format_class(g.b),
                    s.format_class(g.c),
                    t.format_class(image.a),
                    t.format_class(image.b),
                    t.format_class(image.c)
                ));
            }
        }
        out
    }

    pub fn check(&self) -> Result<(), MorphismError> {
        match self.violations().into_iter().next() {
            None => Ok(()),
            Some(first) => Err(MorphismError::NotTtFunctor(first)),
        }
    }
}

/// The `[source]` and `[target]` file references of a functor document.
pub fn functor_references(src: &str) -> Result<(Option<String>, Option<String>), ParseError> {
    let entries = scan_sections(src, &["source", "target", "map"])?;
    let pick = |name: &str| {
        entries
            .iter()
            .find(|e| e.section == name)
            .map(|e| e.text.to_string())
    };
    Ok((pick("source"), pick("target")))
}

/// Parses the `[map] atom -> object` lines of a functor document against
/// the given source and target. Every source atom needs exactly one line.
pub fn parse_functor(
    src: &str,
    source: Arc<Presentation>,
    target: Arc<Presentation>,
) -> Result<ModelFunctor, ParseError> {
    let entries = scan_sections(src, &["source", "target", "map"])?;
    let unknown = |line, column, atom| ParseError::UnknownAtom { line, column, atom };
    let mut images: Vec<Option<ObjectClass>> = vec![None; source.atom_count()];
    for entry in entries.iter().filter(|e| e.section == "map") {
        let (lhs, rhs) = entry
            .split_once("->")
            .ok_or_else(|| entry.error("expected `atom -> object`"))?;
        let x = source
            .atom_index(lhs.text)
            .ok_or_else(|| unknown(lhs.line, lhs.column, lhs.text.to_string()))?;
        if images[x].is_some() {
            return Err(lhs.error(format!("duplicate map entry for `{}`", lhs.text)));
        }
        let value = parse_class_list(&rhs, |s| target.atom_index(s), unknown)?;
        images[x] = Some(ObjectClass::from_indices(value));
    }
    let on_atoms = images
        .into_iter()
        .enumerate()
        .map(|(x, a)| {
            a.ok_or_else(|| ParseError::MissingEntry {
                section: "map",
                name: source.atom_name(x).to_string(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    ModelFunctor::new(source, target, on_atoms).map_err(|e| ParseError::syntax(0, 0, e.to_string()))
}

/// `Q -> {x : F(x) ∈ Q}` from target primes to source primes, with its
/// postconditions checked: images are prime, the map is continuous, and
/// the preimage of `supp(a)` is `supp(F(a))`.
pub fn spc_map(f: &ModelFunctor) -> Result<SpaceMap, MorphismError> {
    f.check()?;
    let (s, t) = (&*f.source, &*f.target);
    let spc_s = Spectrum::new(s);
    let spc_t = Spectrum::new(t);
    spc_map_between(f, &spc_s, &spc_t)
}

pub(crate) fn spc_map_between(
    f: &ModelFunctor,
    spc_s: &Spectrum<'_>,
    spc_t: &Spectrum<'_>,
) -> Result<SpaceMap, MorphismError> {
    let s = &*f.source;
    let mut images = Vec::with_capacity(spc_t.len());
    for q in spc_t.points() {
        let atoms: ObjectClass = (0..s.atom_count())
            .filter(|&x| q.contains(f.on_atoms[x]))
            .collect();
        let i = spc_s
            .index_of(&Ideal::from_closed(atoms))
            .filter(|_| ideals::is_closed(s, atoms))
            .ok_or_else(|| {
                MorphismError::Postcondition(format!(
                    "preimage {{{}}} is not a prime",
                    s.names_of(atoms).join(",")
                ))
            })?;
        images.push(i);
    }
    let map = SpaceMap(images);
    if !spc_t.is_continuous_into(spc_s, &map.0) {
        return Err(MorphismError::Postcondition(
            "Spc(F) is not continuous".into(),
        ));
    }
    let objects: Vec<ObjectClass> = if s.atom_count() <= OBJECT_CHECK_LIMIT {
        ObjectClass::all(s.atom_count()).collect()
    } else {
        (0..s.atom_count()).map(ObjectClass::atom).collect()
    };
    for a in objects {
        if map.preimage(&spc_s.supp(a)) != spc_t.supp(f.apply(a)) {
            return Err(MorphismError::Postcondition(format!(
                "Spc(F)⁻¹(supp {}) differs from supp(F({}))",
                s.format_class(a),
                s.format_class(a)
            )));
        }
    }
    Ok(map)
}

/// Whether `⟨F1(x)⟩ = ⟨F2(x)⟩` for every source atom, with no invariant
/// checks on the functors.
pub fn generated_images_agree(f1: &ModelFunctor, f2: &ModelFunctor) -> bool {
    let t = &*f1.target;
    (0..f1.source.atom_count())
        .all(|x| ideals::generated(t, f1.on_atoms[x]) == ideals::generated(t, f2.on_atoms[x]))
}

/// Compares the ideals generated by the images of each atom. Both functors
/// must pass their invariants. When they agree, the induced maps on spectra
/// are checked to coincide.
pub fn functor_agreement(f1: &ModelFunctor, f2: &ModelFunctor) -> Result<bool, MorphismError> {
    if f1.source != f2.source || f1.target != f2.target {
        return Err(MorphismError::Incompatible);
    }
    f1.check()?;
    f2.check()?;
    if !generated_images_agree(f1, f2) {
        return Ok(false);
    }
    if spc_map(f1)? != spc_map(f2)? {
        return Err(MorphismError::Postcondition(
            "generated images agree but the maps on spectra differ".into(),
        ));
    }
    Ok(true)
}

/// `Z({a : ⟨F(a)⟩ = L})`, checked equal to the closure of the image of
/// `Spc(F)`.
pub fn image_closure(f: &ModelFunctor) -> Result<PointSet, MorphismError> {
    f.check()?;
    let (s, t) = (&*f.source, &*f.target);
    let spc_s = Spectrum::new(s);
    let spc_t = Spectrum::new(t);
    let family: ObjectFamily = ObjectClass::all(s.atom_count())
        .filter(|&a| ideals::generates_whole(t, f.apply(a)))
        .collect();
    let z = spc_s.z_family(&family)?;
    let map = spc_map_between(f, &spc_s, &spc_t)?;
    let closure = spc_s.down_closure(&map.image(&spc_t.all_points()));
    if closure != z {
        return Err(MorphismError::Postcondition(format!(
            "Z(S) = {z:?} but the image closure is {closure:?}"
        )));
    }
    Ok(z)
}
