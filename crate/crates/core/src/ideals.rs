//! Thick tensor ideals: saturation, enumeration, primes, radicals.
//!
//! An ideal is stored as the set of atoms it contains. An object lies in the
//! ideal iff all its atoms do, so thickness comes for free and only three
//! rules remain: tensoring with any atom, shifting, and two-out-of-three on
//! triangles.

use std::collections::HashSet;

use thiserror::Error;

use crate::exec::{self, Execution};
use crate::model::{ModelError, Presentation};
use crate::object::{ObjectClass, ObjectFamily};

/// Largest atom count for which ideals are enumerated by scanning subsets.
pub const ENUMERATION_LIMIT: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("{atoms} is not a thick tensor ideal")]
    NotAnIdeal { atoms: String },
    #[error("family not multiplicative: {reason}")]
    NotMultiplicative { reason: String },
}

/// A thick tensor ideal of a fixed presentation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ideal {
    atoms: ObjectClass,
}

impl Ideal {
    /// Checks that `atoms` is closed under the ideal rules.
    pub fn new(p: &Presentation, atoms: ObjectClass) -> Result<Ideal, IdealError> {
        p.check_class(atoms)?;
        if is_closed(p, atoms) {
            Ok(Ideal { atoms })
        } else {
            Err(IdealError::NotAnIdeal {
                atoms: format!("{{{}}}", p.names_of(atoms).join(",")),
            })
        }
    }

    /// Wraps a set already known to be closed.
    pub(crate) fn from_closed(atoms: ObjectClass) -> Ideal {
        Ideal { atoms }
    }

    pub fn zero() -> Ideal {
        Ideal::default()
    }

    pub fn whole(p: &Presentation) -> Ideal {
        Ideal { atoms: p.whole() }
    }

    pub fn atoms(&self) -> ObjectClass {
        self.atoms
    }

    /// Whether the object `a` lies in the ideal.
    pub fn contains(&self, a: ObjectClass) -> bool {
        a.is_subset(self.atoms)
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.atoms.is_subset(other.atoms)
    }

    pub fn is_proper(&self, p: &Presentation) -> bool {
        self.atoms != p.whole()
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        Ideal {
            atoms: self.atoms.intersection(other.atoms),
        }
    }
}

/// Sort key used for every ideal listing: size, then sorted atom names.
pub fn canonical_key(p: &Presentation, a: ObjectClass) -> (usize, Vec<&str>) {
    (a.len(), p.names_of(a))
}

fn tensor_row(p: &Presentation, x: usize) -> ObjectClass {
    p.tensor(ObjectClass::atom(x), p.whole())
}

/// One application of every rule to `s`.
fn step(p: &Presentation, s: ObjectClass) -> ObjectClass {
    let mut next = s;
    for x in s.iter() {
        next = next.union(tensor_row(p, x)).union(p.shift_atom(x));
    }
    for t in p.triangle_generators() {
        let inside = t.vertices().iter().filter(|v| v.is_subset(next)).count();
        if inside == 2 {
            next = next.union(t.atoms());
        }
    }
    next
}

pub(crate) fn is_closed(p: &Presentation, s: ObjectClass) -> bool {
    step(p, s) == s
}

/// The least ideal containing `seed`.
pub fn saturate(p: &Presentation, seed: ObjectClass) -> ObjectClass {
    let mut cur = seed;
    loop {
        let next = step(p, cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// The ideal generated by a single object.
pub fn generated(p: &Presentation, a: ObjectClass) -> Ideal {
    Ideal::from_closed(saturate(p, a))
}

pub fn ideal_generated_by(p: &Presentation, family: &ObjectFamily) -> Result<Ideal, IdealError> {
    for a in family.iter() {
        p.check_class(a)?;
    }
    Ok(generated(p, family.atom_union()))
}

pub fn is_thick_tensor_ideal(p: &Presentation, s: ObjectClass) -> Result<bool, IdealError> {
    p.check_class(s)?;
    Ok(is_closed(p, s))
}

/// Primality, checked on atom pairs. This agrees with the object-level
/// definition because the tensor is computed atom by atom.
pub fn is_prime(p: &Presentation, i: &Ideal) -> bool {
    if !i.is_proper(p) {
        return false;
    }
    let outside: Vec<usize> = p.whole().difference(i.atoms).iter().collect();
    outside.iter().all(|&x| {
        outside
            .iter()
            .all(|&y| !p.tensor_atoms(x, y).is_subset(i.atoms))
    })
}

fn enumeration_guard(p: &Presentation) {
    assert!(
        p.atom_count() <= ENUMERATION_LIMIT,
        "ideal enumeration supports at most {ENUMERATION_LIMIT} atoms, got {}",
        p.atom_count()
    );
}

fn sort_ideals(p: &Presentation, ideals: &mut [Ideal]) {
    ideals.sort_by(|a, b| canonical_key(p, a.atoms).cmp(&canonical_key(p, b.atoms)));
}

/// Every thick tensor ideal, sorted by size and then atom names.
///
/// # Panics
/// If the presentation has more than [`ENUMERATION_LIMIT`] atoms.
pub fn all_ideals(p: &Presentation) -> Vec<Ideal> {
    all_ideals_with(p, Execution::default())
}

pub fn all_ideals_with(p: &Presentation, exec: Execution) -> Vec<Ideal> {
    enumeration_guard(p);
    let count = 1u64 << p.atom_count();
    let mut out: Vec<Ideal> =
        exec::filter_masks(count, exec, |m| is_closed(p, ObjectClass::from_bits(m)))
            .into_iter()
            .map(|m| Ideal::from_closed(ObjectClass::from_bits(m)))
            .collect();
    sort_ideals(p, &mut out);
    out
}

/// Every prime, sorted lexicographically by sorted atom names. This is the
/// point order of the spectrum.
pub fn all_primes(p: &Presentation) -> Vec<Ideal> {
    all_primes_with(p, Execution::default())
}

pub fn all_primes_with(p: &Presentation, exec: Execution) -> Vec<Ideal> {
    enumeration_guard(p);
    let count = 1u64 << p.atom_count();
    let mut out: Vec<Ideal> = exec::filter_masks(count, exec, |m| {
        let s = ObjectClass::from_bits(m);
        is_closed(p, s) && is_prime(p, &Ideal::from_closed(s))
    })
    .into_iter()
    .map(|m| Ideal::from_closed(ObjectClass::from_bits(m)))
    .collect();
    out.sort_by(|a, b| p.names_of(a.atoms).cmp(&p.names_of(b.atoms)));
    out
}

/// Whether some tensor power `a, a⊗a, ...` lies inside `target`.
fn some_power_within(p: &Presentation, a: ObjectClass, target: ObjectClass) -> bool {
    let mut seen = HashSet::new();
    let mut cur = a;
    loop {
        if cur.is_subset(target) {
            return true;
        }
        if !seen.insert(cur) {
            return false;
        }
        cur = p.tensor(cur, a);
    }
}

/// `{x : x⊗...⊗x ∈ I for some power}`, by iterating powers of each atom.
pub fn radical(p: &Presentation, i: &Ideal) -> Ideal {
    let atoms = (0..p.atom_count())
        .filter(|&x| some_power_within(p, ObjectClass::atom(x), i.atoms))
        .collect();
    let r = Ideal::from_closed(atoms);
    debug_assert!(is_closed(p, r.atoms), "radical is not an ideal");
    r
}

/// The intersection of all primes containing `i` (the whole category when
/// there are none).
pub fn radical_via_primes(p: &Presentation, i: &Ideal) -> Ideal {
    radical_from_primes(p, i, &all_primes(p))
}

pub(crate) fn radical_from_primes(p: &Presentation, i: &Ideal, primes: &[Ideal]) -> Ideal {
    primes
        .iter()
        .filter(|q| i.is_subset(q))
        .fold(Ideal::whole(p), |acc, q| acc.intersection(q))
}

pub fn is_radical(p: &Presentation, i: &Ideal) -> bool {
    radical(p, i) == *i
}

/// `(true, Some(n))` for the least `n` with `a^{⊗n} = 0`, else `(false, None)`.
pub fn is_nilpotent_object(p: &Presentation, a: ObjectClass) -> (bool, Option<usize>) {
    let mut seen = HashSet::new();
    let mut cur = a;
    let mut n = 1;
    loop {
        if cur.is_zero() {
            return (true, Some(n));
        }
        if !seen.insert(cur) {
            return (false, None);
        }
        cur = p.tensor(cur, a);
        n += 1;
    }
}

pub fn generates_whole(p: &Presentation, a: ObjectClass) -> bool {
    saturate(p, a) == p.whole()
}

/// The smallest multiplicative family containing `family`: the unit plus all
/// finite tensor products of members.
pub fn multiplicative_closure(p: &Presentation, family: &ObjectFamily) -> ObjectFamily {
    let gens: Vec<ObjectClass> = family.iter().collect();
    let mut out = ObjectFamily::from([p.unit()]);
    let mut stack = vec![p.unit()];
    while let Some(a) = stack.pop() {
        for &g in &gens {
            let b = p.tensor(a, g);
            if out.insert(b) {
                stack.push(b);
            }
        }
    }
    out
}

pub fn check_multiplicative(p: &Presentation, s: &ObjectFamily) -> Result<(), IdealError> {
    for a in s.iter() {
        p.check_class(a)?;
    }
    if !s.contains(p.unit()) {
        return Err(IdealError::NotMultiplicative {
            reason: format!("unit {} missing", p.format_class(p.unit())),
        });
    }
    for a in s.iter() {
        for b in s.iter() {
            let ab = p.tensor(a, b);
            if !s.contains(ab) {
                return Err(IdealError::NotMultiplicative {
                    reason: format!(
                        "{} ⊗ {} = {} missing",
                        p.format_class(a),
                        p.format_class(b),
                        p.format_class(ab)
                    ),
                });
            }
        }
    }
    Ok(())
}

/// Outcome of [`prime_avoiding`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Avoidance {
    /// A prime containing `J` and meeting no member of `S`.
    Prime(Ideal),
    /// `S` meets `J`; the member given lies in `J`.
    Meets(ObjectClass),
}

/// Members of the family of ideals `A` with `J ⊆ A`, no member of `S` in
/// `A`, and `x⊗c ∈ A ⟹ x ∈ A` for every `c ∈ S`.
fn in_avoiding_family(p: &Presentation, a: &Ideal, j: &Ideal, s: &ObjectFamily) -> bool {
    j.is_subset(a)
        && s.iter().all(|c| !a.contains(c))
        && s.iter().all(|c| {
            (0..p.atom_count())
                .all(|x| a.atoms.contains(x) || !a.contains(p.tensor(ObjectClass::atom(x), c)))
        })
}

/// The ideal `{x : x⊗c ∈ J for some c ∈ S}`, the least member of the
/// avoiding family.
pub fn avoiding_seed(p: &Presentation, j: &Ideal, s: &ObjectFamily) -> ObjectClass {
    (0..p.atom_count())
        .filter(|&x| {
            s.iter()
                .any(|c| j.contains(p.tensor(ObjectClass::atom(x), c)))
        })
        .collect()
}

/// A prime containing `j` and disjoint from the multiplicative family `s`.
///
/// Among the maximal members of the avoiding family the one with the
/// lexicographically greatest sorted atom list is returned.
pub fn prime_avoiding(
    p: &Presentation,
    j: &Ideal,
    s: &ObjectFamily,
) -> Result<Avoidance, IdealError> {
    check_multiplicative(p, s)?;
    if let Some(c) = s.iter().find(|&c| j.contains(c)) {
        return Ok(Avoidance::Meets(c));
    }
    let family: Vec<Ideal> = all_ideals(p)
        .into_iter()
        .filter(|a| in_avoiding_family(p, a, j, s))
        .collect();
    debug_assert!(family.iter().any(|a| a.atoms == avoiding_seed(p, j, s)));
    let best = family
        .iter()
        .filter(|a| !family.iter().any(|b| b != *a && a.is_subset(b)))
        .max_by(|a, b| p.names_of(a.atoms).cmp(&p.names_of(b.atoms)))
        .copied()
        .expect("the avoiding family contains its seed");
    debug_assert!(is_prime(p, &best));
    Ok(Avoidance::Prime(best))
}
