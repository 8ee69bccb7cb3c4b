//! Brute-force reference implementations shared by the integration tests.
//!
//! Everything here works on whole objects and on the full set of
//! distinguished triangles, never on the engine's atom-level shortcuts.

#![allow(dead_code)]

use std::collections::BTreeSet;

use ttspc::model::Triangle;
use ttspc::{ObjectClass, PointSet, Presentation};

pub fn objects(p: &Presentation) -> Vec<ObjectClass> {
    ObjectClass::all(p.atom_count()).collect()
}

pub fn tensor(p: &Presentation, a: ObjectClass, b: ObjectClass) -> ObjectClass {
    p.tensor_obj(a, b).unwrap()
}

pub fn shift(p: &Presentation, a: ObjectClass) -> ObjectClass {
    p.shift_obj(a).unwrap()
}

pub fn triangles(p: &Presentation) -> Vec<Triangle> {
    p.all_triangles().into_iter().collect()
}

/// Whether the objects supported on `s` form a thick tensor ideal.
pub fn is_ideal(p: &Presentation, s: ObjectClass, tris: &[Triangle]) -> bool {
    let objs = objects(p);
    let inside = |a: ObjectClass| a.is_subset(s);
    for a in s.subsets() {
        if !inside(shift(p, a)) {
            return false;
        }
        if objs.iter().any(|&b| !inside(tensor(p, a, b))) {
            return false;
        }
    }
    // Closed under the inverse shift as well.
    for &a in &objs {
        if inside(shift(p, a)) && !inside(a) {
            return false;
        }
    }
    tris.iter().all(|t| {
        let n = t.vertices().iter().filter(|v| inside(**v)).count();
        n != 2
    })
}

pub fn ideals(p: &Presentation) -> Vec<ObjectClass> {
    let tris = triangles(p);
    objects(p)
        .into_iter()
        .filter(|&s| is_ideal(p, s, &tris))
        .collect()
}

pub fn is_prime(p: &Presentation, s: ObjectClass) -> bool {
    if s == p.whole() {
        return false;
    }
    let objs = objects(p);
    objs.iter().all(|&a| {
        objs.iter()
            .all(|&b| !tensor(p, a, b).is_subset(s) || a.is_subset(s) || b.is_subset(s))
    })
}

pub fn primes(p: &Presentation) -> Vec<ObjectClass> {
    ideals(p).into_iter().filter(|&s| is_prime(p, s)).collect()
}

/// The least closed set containing `seed`, found by scanning every closed set.
pub fn least_ideal_over(closed: &[ObjectClass], seed: ObjectClass) -> ObjectClass {
    let over: Vec<ObjectClass> = closed
        .iter()
        .copied()
        .filter(|s| seed.is_subset(*s))
        .collect();
    let least: Vec<ObjectClass> = over
        .iter()
        .copied()
        .filter(|s| over.iter().all(|t| s.is_subset(*t)))
        .collect();
    assert_eq!(
        least.len(),
        1,
        "closed sets over {seed:?} have no least member"
    );
    least[0]
}

/// Objects with some tensor power inside `j`.
pub fn radical(p: &Presentation, j: ObjectClass) -> ObjectClass {
    let bound = (1usize << p.atom_count()) + 1;
    let mut out = ObjectClass::ZERO;
    for a in objects(p) {
        let mut pow = a;
        for _ in 0..bound {
            if pow.is_subset(j) {
                out = out.union(a);
                break;
            }
            pow = tensor(p, pow, a);
        }
    }
    out
}

/// `supp(a)` over the oracle primes, as indices into `primes`.
pub fn supp(primes: &[ObjectClass], a: ObjectClass) -> PointSet {
    (0..primes.len())
        .filter(|&i| !a.is_subset(primes[i]))
        .collect()
}

/// Closed sets of the Zariski topology: every intersection of supports.
pub fn closed_sets(p: &Presentation, primes: &[ObjectClass]) -> BTreeSet<Vec<usize>> {
    let supports: BTreeSet<Vec<usize>> = objects(p)
        .into_iter()
        .map(|a| supp(primes, a).iter().collect())
        .collect();
    let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
    out.insert((0..primes.len()).collect());
    loop {
        let mut grew = false;
        let current: Vec<Vec<usize>> = out.iter().cloned().collect();
        for c in &current {
            for s in &supports {
                let meet: Vec<usize> = c.iter().copied().filter(|i| s.contains(i)).collect();
                grew |= out.insert(meet);
            }
        }
        if !grew {
            return out;
        }
    }
}

/// A presentation sorted by the engine's point order.
pub fn sorted_primes(p: &Presentation) -> Vec<ObjectClass> {
    let mut ps = primes(p);
    ps.sort_by(|a, b| p.names_of(*a).cmp(&p.names_of(*b)));
    ps
}
