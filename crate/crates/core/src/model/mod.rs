//! Finite presentations of tensor triangulated categories.
//!
//! A [`Presentation`] lists atoms (indecomposable classes), the unit object,
//! a symmetric tensor table on atom pairs, a shift table, and a set of
//! declared distinguished triangles. Everything else is derived: the tensor
//! and shift extend to objects by union, and the distinguished triangles are
//! closed under rotation, tensoring with atoms, the standard family
//! `a -> a -> 0`, and direct sums.

mod parse;
mod validate;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::object::{ObjectClass, MAX_ATOMS};

pub(crate) use parse::{is_token, parse_class_list, scan_sections};
pub use parse::{parse_presentation, ParseError};
pub use validate::{validate_presentation, Rule, ValidationReport, Violation};

/// Errors raised by object-level operations on a presentation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("unknown atom `{0}`")]
    UnknownAtom(String),
    #[error("object {class:?} refers to atoms outside the {atoms} declared")]
    AtomOutOfRange { class: ObjectClass, atoms: usize },
    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),
    #[error("invalid atom id `{0}`")]
    InvalidAtom(String),
    #[error("{0} atoms exceed the supported maximum of {MAX_ATOMS}")]
    TooManyAtoms(usize),
    #[error("table `{table}` has {found} entries, expected {expected}")]
    TableSize {
        table: &'static str,
        found: usize,
        expected: usize,
    },
}

/// A distinguished triangle `a -> b -> c -> Ta`, recorded by its three
/// vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle {
    pub a: ObjectClass,
    pub b: ObjectClass,
    pub c: ObjectClass,
}

impl Triangle {
    pub const fn new(a: ObjectClass, b: ObjectClass, c: ObjectClass) -> Self {
        Triangle { a, b, c }
    }

    pub fn vertices(&self) -> [ObjectClass; 3] {
        [self.a, self.b, self.c]
    }

    /// Direct sum of two triangles.
    pub fn union(&self, other: &Triangle) -> Triangle {
        Triangle::new(
            self.a.union(other.a),
            self.b.union(other.b),
            self.c.union(other.c),
        )
    }

    /// Componentwise inclusion.
    pub fn is_within(&self, other: &Triangle) -> bool {
        self.a.is_subset(other.a) && self.b.is_subset(other.b) && self.c.is_subset(other.c)
    }

    pub fn atoms(&self) -> ObjectClass {
        self.a.union(self.b).union(self.c)
    }
}

/// A finite tensor triangulated model. Immutable once built.
#[derive(Clone)]
pub struct Presentation {
    atoms: Vec<String>,
    index: HashMap<String, usize>,
    unit: ObjectClass,
    /// Row-major `n x n` table.
    tensor: Vec<ObjectClass>,
    shift: Vec<ObjectClass>,
    declared: Vec<Triangle>,
    generators: Vec<Triangle>,
}

impl Presentation {
    /// Builds a presentation from resolved tables.
    ///
    /// `tensor` is row-major over atom indices. Symmetry and the other model
    /// laws are not enforced here; run [`validate_presentation`].
    pub fn new(
        atoms: Vec<String>,
        unit: ObjectClass,
        tensor: Vec<ObjectClass>,
        shift: Vec<ObjectClass>,
        triangles: Vec<Triangle>,
    ) -> Result<Self, ModelError> {
        let n = atoms.len();
        if n > MAX_ATOMS {
            return Err(ModelError::TooManyAtoms(n));
        }
        let mut index = HashMap::with_capacity(n);
        for (i, name) in atoms.iter().enumerate() {
            if !is_token(name) || name == "0" {
                return Err(ModelError::InvalidAtom(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(ModelError::DuplicateAtom(name.clone()));
            }
        }
        if tensor.len() != n * n {
            return Err(ModelError::TableSize {
                table: "tensor",
                found: tensor.len(),
                expected: n * n,
            });
        }
        if shift.len() != n {
            return Err(ModelError::TableSize {
                table: "shift",
                found: shift.len(),
                expected: n,
            });
        }
        let whole = ObjectClass::full(n);
        let classes = std::iter::once(unit)
            .chain(tensor.iter().copied())
            .chain(shift.iter().copied())
            .chain(triangles.iter().flat_map(Triangle::vertices));
        for class in classes {
            if !class.is_subset(whole) {
                return Err(ModelError::AtomOutOfRange { class, atoms: n });
            }
        }
        let mut p = Presentation {
            atoms,
            index,
            unit,
            tensor,
            shift,
            declared: triangles,
            generators: Vec::new(),
        };
        p.generators = p.generate_triangles();
        Ok(p)
    }

    /// The zero model: no atoms, unit `0`.
    pub fn zero() -> Self {
        Presentation::new(
            Vec::new(),
            ObjectClass::ZERO,
            Vec::new(),
            Vec::new(),
            Vec::new(),
        )
        .expect("empty tables are consistent")
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    pub fn atom_names(&self) -> &[String] {
        &self.atoms
    }

    pub fn atom_name(&self, index: usize) -> &str {
        &self.atoms[index]
    }

    pub fn atom_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// The object with every atom as a summand; membership of it in an ideal
    /// means the ideal is the whole category.
    pub fn whole(&self) -> ObjectClass {
        ObjectClass::full(self.atom_count())
    }

    pub fn unit(&self) -> ObjectClass {
        self.unit
    }

    pub fn is_zero_model(&self) -> bool {
        self.atoms.is_empty()
    }

    /// Resolves atom names into an object.
    pub fn object<S: AsRef<str>>(&self, names: &[S]) -> Result<ObjectClass, ModelError> {
        names.iter().try_fold(ObjectClass::ZERO, |acc, name| {
            let name = name.as_ref();
            self.atom_index(name)
                .map(|i| acc.union(ObjectClass::atom(i)))
                .ok_or_else(|| ModelError::UnknownAtom(name.to_string()))
        })
    }

    pub fn check_class(&self, a: ObjectClass) -> Result<(), ModelError> {
        if a.is_subset(self.whole()) {
            Ok(())
        } else {
            Err(ModelError::AtomOutOfRange {
                class: a,
                atoms: self.atom_count(),
            })
        }
    }

    /// Atom names of `a`, sorted.
    pub fn names_of(&self, a: ObjectClass) -> Vec<&str> {
        let mut names: Vec<&str> = a.iter().map(|i| self.atom_name(i)).collect();
        names.sort_unstable();
        names
    }

    /// `0` for the zero object, otherwise the sorted atom names joined by
    /// commas. This is the presentation-format spelling of an object.
    pub fn format_class(&self, a: ObjectClass) -> String {
        if a.is_zero() {
            "0".to_string()
        } else {
            self.names_of(a).join(",")
        }
    }

    /// Tensor product of two atoms.
    pub fn tensor_atoms(&self, x: usize, y: usize) -> ObjectClass {
        self.tensor[x * self.atom_count() + y]
    }

    /// Shift of a single atom.
    pub fn shift_atom(&self, x: usize) -> ObjectClass {
        self.shift[x]
    }

    /// Bilinear tensor of two objects; callers guarantee both are in range.
    pub(crate) fn tensor(&self, a: ObjectClass, b: ObjectClass) -> ObjectClass {
        let mut out = ObjectClass::ZERO;
        for x in a.iter() {
            for y in b.iter() {
                out = out.union(self.tensor_atoms(x, y));
            }
        }
        out
    }

    pub(crate) fn shift(&self, a: ObjectClass) -> ObjectClass {
        a.iter()
            .fold(ObjectClass::ZERO, |acc, x| acc.union(self.shift[x]))
    }

    pub fn direct_sum(&self, a: ObjectClass, b: ObjectClass) -> Result<ObjectClass, ModelError> {
        self.check_class(a)?;
        self.check_class(b)?;
        Ok(a.union(b))
    }

    pub fn tensor_obj(&self, a: ObjectClass, b: ObjectClass) -> Result<ObjectClass, ModelError> {
        self.check_class(a)?;
        self.check_class(b)?;
        Ok(self.tensor(a, b))
    }

    pub fn shift_obj(&self, a: ObjectClass) -> Result<ObjectClass, ModelError> {
        self.check_class(a)?;
        Ok(self.shift(a))
    }

    pub fn declared_triangles(&self) -> &[Triangle] {
        &self.declared
    }

    /// Rotation `(a, b, c) -> (b, c, Ta)`.
    pub fn rotate(&self, t: &Triangle) -> Triangle {
        Triangle::new(t.b, t.c, self.shift(t.a))
    }

    /// `x ⊗ (a, b, c)` for an atom `x`.
    pub fn tensor_triangle(&self, x: usize, t: &Triangle) -> Triangle {
        let x = ObjectClass::atom(x);
        Triangle::new(
            self.tensor(x, t.a),
            self.tensor(x, t.b),
            self.tensor(x, t.c),
        )
    }

    /// Objects that occur in some table: the zero object, the unit, every
    /// atom, tensor and shift values, and the vertices of declared triangles.
    pub fn declared_classes(&self) -> BTreeSet<ObjectClass> {
        let mut classes = BTreeSet::new();
        classes.insert(ObjectClass::ZERO);
        classes.insert(self.unit);
        classes.extend((0..self.atom_count()).map(ObjectClass::atom));
        classes.extend(self.tensor.iter().copied());
        classes.extend(self.shift.iter().copied());
        classes.extend(self.declared.iter().flat_map(Triangle::vertices));
        classes
    }

    /// Triangles from which every distinguished triangle is a direct sum.
    ///
    /// The set contains the declared triangles and the family
    /// `(a, a, 0)`, `(0, a, a)`, `(a, 0, Ta)` for each declared class, and is
    /// closed under rotation and under tensoring with atoms. Every
    /// two-out-of-three or support check passes on a direct sum as soon as it
    /// passes on the summands, so the engine only ever looks at this set.
    pub fn triangle_generators(&self) -> &[Triangle] {
        &self.generators
    }

    fn generate_triangles(&self) -> Vec<Triangle> {
        let mut seen: BTreeSet<Triangle> = BTreeSet::new();
        let mut queue: Vec<Triangle> = Vec::new();
        let push = |t: Triangle, seen: &mut BTreeSet<Triangle>, queue: &mut Vec<Triangle>| {
            if seen.insert(t) {
                queue.push(t);
            }
        };
        for &t in &self.declared {
            push(t, &mut seen, &mut queue);
        }
        for a in self.declared_classes() {
            let z = ObjectClass::ZERO;
            push(Triangle::new(a, a, z), &mut seen, &mut queue);
            push(Triangle::new(z, a, a), &mut seen, &mut queue);
            push(Triangle::new(a, z, self.shift(a)), &mut seen, &mut queue);
        }
        while let Some(t) = queue.pop() {
            push(self.rotate(&t), &mut seen, &mut queue);
            for x in 0..self.atom_count() {
                push(self.tensor_triangle(x, &t), &mut seen, &mut queue);
            }
        }
        seen.into_iter().collect()
    }

    /// Whether `t` is a distinguished triangle, i.e. a direct sum of
    /// generators.
    pub fn is_triangle(&self, t: &Triangle) -> bool {
        let covered = self.generators.iter().filter(|g| g.is_within(t)).fold(
            Triangle::new(ObjectClass::ZERO, ObjectClass::ZERO, ObjectClass::ZERO),
            |acc, g| acc.union(g),
        );
        covered == *t
    }

    /// Every distinguished triangle: the closure of the generators under
    /// pairwise direct sums.
    ///
    /// This can be large (up to `8^n` triples); the engine never needs it and
    /// uses [`Presentation::triangle_generators`] instead.
    pub fn all_triangles(&self) -> BTreeSet<Triangle> {
        let mut all: BTreeSet<Triangle> = self.generators.iter().copied().collect();
        let mut frontier: Vec<Triangle> = self.generators.clone();
        while let Some(t) = frontier.pop() {
            for g in &self.generators {
                let u = t.union(g);
                if all.insert(u) {
                    frontier.push(u);
                }
            }
        }
        all
    }

    /// The same model restricted to the atoms outside `killed`, with `killed`
    /// deleted from every table entry.
    pub(crate) fn delete_atoms(&self, killed: ObjectClass) -> (Presentation, Vec<Option<usize>>) {
        let keep: Vec<usize> = (0..self.atom_count())
            .filter(|&i| !killed.contains(i))
            .collect();
        let mut renumber = vec![None; self.atom_count()];
        for (new, &old) in keep.iter().enumerate() {
            renumber[old] = Some(new);
        }
        let project =
            |a: ObjectClass| -> ObjectClass { a.iter().filter_map(|i| renumber[i]).collect() };
        let atoms = keep.iter().map(|&i| self.atoms[i].clone()).collect();
        let mut tensor = Vec::with_capacity(keep.len() * keep.len());
        for &x in &keep {
            for &y in &keep {
                tensor.push(project(self.tensor_atoms(x, y)));
            }
        }
        let shift = keep.iter().map(|&x| project(self.shift[x])).collect();
        let triangles = self
            .declared
            .iter()
            .map(|t| Triangle::new(project(t.a), project(t.b), project(t.c)))
            .collect();
        let q = Presentation::new(atoms, project(self.unit), tensor, shift, triangles)
            .expect("a sub-presentation of a consistent presentation is consistent");
        (q, renumber)
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation")
            .field("atoms", &self.atoms)
            .field("unit", &self.format_class(self.unit))
            .field("declared_triangles", &self.declared.len())
            .finish()
    }
}

impl PartialEq for Presentation {
    fn eq(&self, other: &Self) -> bool {
        self.atoms == other.atoms
            && self.unit == other.unit
            && self.tensor == other.tensor
            && self.shift == other.shift
            && self.declared == other.declared
    }
}

impl Eq for Presentation {}

impl fmt::Display for Presentation {
    /// Canonical presentation-format text; parses back to an equal value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[atoms] {}", self.atoms.join(" "))?;
        writeln!(f, "[unit] {}", self.format_class(self.unit))?;
        writeln!(f, "[shift]")?;
        for (x, name) in self.atoms.iter().enumerate() {
            writeln!(f, "{}->{}", name, self.format_class(self.shift[x]))?;
        }
        writeln!(f, "[tensor]")?;
        for x in 0..self.atom_count() {
            for y in x..self.atom_count() {
                writeln!(
                    f,
                    "{}*{}={}",
                    self.atoms[x],
                    self.atoms[y],
                    self.format_class(self.tensor_atoms(x, y))
                )?;
            }
        }
        if !self.declared.is_empty() {
            writeln!(f, "[triangles]")?;
            for t in &self.declared {
                writeln!(
                    f,
                    "{};{};{}",
                    self.format_class(t.a),
                    self.format_class(t.b),
                    self.format_class(t.c)
                )?;
            }
        }
        Ok(())
    }
}
