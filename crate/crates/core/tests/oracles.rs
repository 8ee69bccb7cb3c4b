mod common;

use std::collections::BTreeSet;

use ttspc::ideals::{self, Ideal};
use ttspc::model::Triangle;
use ttspc::random::valid_sample;
use ttspc::spectrum::FiniteTopology;
use ttspc::{fixtures, ObjectClass, ObjectFamily, Presentation, Spectrum};

fn named(p: &Presentation, sets: &[ObjectClass]) -> Vec<Vec<String>> {
    sets.iter()
        .map(|s| p.names_of(*s).into_iter().map(String::from).collect())
        .collect()
}

fn sorted_names(p: &Presentation, sets: &[ObjectClass]) -> BTreeSet<Vec<String>> {
    named(p, sets).into_iter().collect()
}

fn engine_ideals(p: &Presentation) -> Vec<ObjectClass> {
    ideals::all_ideals(p).iter().map(Ideal::atoms).collect()
}

fn engine_primes(p: &Presentation) -> Vec<ObjectClass> {
    ideals::all_primes(p).iter().map(Ideal::atoms).collect()
}

type Names<'a> = &'a [&'a [&'a str]];

fn set(v: &[&[&str]]) -> BTreeSet<Vec<String>> {
    v.iter()
        .map(|s| s.iter().map(|x| x.to_string()).collect())
        .collect()
}

#[test]
fn frozen_fixture_lattices() {
    let cases: [(Presentation, Names, Names); 5] = [
        (fixtures::field(), &[&[], &["u"]], &[&[]]),
        (
            fixtures::twopoints(),
            &[&[], &["e"], &["f"], &["e", "f"]],
            &[&["e"], &["f"]],
        ),
        (fixtures::dvr(), &[&[], &["k"], &["k", "u"]], &[&[], &["k"]]),
        (fixtures::stabz3(), &[&[], &["m1", "m2"]], &[&[]]),
        (fixtures::dual(), &[&[], &["n"], &["n", "u"]], &[&["n"]]),
    ];
    for (p, ideals_expected, primes_expected) in cases {
        let oracle_ideals = common::ideals(&p);
        let oracle_primes = common::primes(&p);
        assert_eq!(sorted_names(&p, &oracle_ideals), set(ideals_expected));
        assert_eq!(sorted_names(&p, &oracle_primes), set(primes_expected));
        assert_eq!(sorted_names(&p, &engine_ideals(&p)), set(ideals_expected));
        assert_eq!(sorted_names(&p, &engine_primes(&p)), set(primes_expected));
    }
}

#[test]
fn frozen_fixture_topologies() {
    // (points, specialization pairs (i, j) meaning point i is inside point j)
    type Case = (Presentation, usize, Vec<(usize, usize)>);
    let cases: [Case; 5] = [
        (fixtures::field(), 1, vec![]),
        (fixtures::twopoints(), 2, vec![]),
        (fixtures::dvr(), 2, vec![(0, 1)]),
        (fixtures::stabz3(), 1, vec![]),
        (fixtures::dual(), 1, vec![]),
    ];
    for (p, points, pairs) in cases {
        let spc = Spectrum::new(&p);
        assert_eq!(spc.len(), points);
        assert_eq!(spc.specialization(), pairs);
        let primes = common::sorted_primes(&p);
        let oracle: BTreeSet<Vec<usize>> = common::closed_sets(&p, &primes);
        let engine: BTreeSet<Vec<usize>> = spc
            .closed_sets()
            .iter()
            .map(|c| c.iter().collect())
            .collect();
        assert_eq!(engine, oracle);
    }
    // DVR: the zero prime is the closed point.
    let dvr = fixtures::dvr();
    let spc = Spectrum::new(&dvr);
    assert!(spc.point(0).atoms().is_zero());
    assert!(spc.is_closed(&[0].into()));
    assert!(!spc.is_closed(&[1].into()));
}

#[test]
fn frozen_radicals() {
    let dual = fixtures::dual();
    let radical: Vec<bool> = ideals::all_ideals(&dual)
        .iter()
        .map(|j| ideals::is_radical(&dual, j))
        .collect();
    assert_eq!(radical, vec![false, true, true]);
    let n = dual.object(&["n"]).unwrap();
    assert_eq!(common::radical(&dual, ObjectClass::ZERO), n);
    assert_eq!(ideals::is_nilpotent_object(&dual, n), (true, Some(2)));
    for p in fixtures::all() {
        for j in ideals::all_ideals(&p) {
            assert!(ideals::is_radical(&p, &j), "{}", p.format_class(j.atoms()));
        }
    }
}

/// Thick ideals under a narrower triangle rule: declared triangles and their
/// rotations only, without tensor translates or direct sums.
fn narrow_ideals(p: &Presentation) -> Vec<ObjectClass> {
    let mut tris: Vec<Triangle> = Vec::new();
    for t in p.declared_triangles() {
        let mut r = *t;
        for _ in 0..3 {
            tris.push(r);
            r = p.rotate(&r);
        }
    }
    common::objects(p)
        .into_iter()
        .filter(|&s| {
            let objs = common::objects(p);
            s.subsets().all(|a| {
                common::shift(p, a).is_subset(s)
                    && objs.iter().all(|&b| common::tensor(p, a, b).is_subset(s))
            }) && tris
                .iter()
                .all(|t| t.vertices().iter().filter(|v| v.is_subset(s)).count() != 2)
        })
        .collect()
}

#[test]
fn fixture_lattices_do_not_depend_on_triangle_rule() {
    for p in fixtures::all().into_iter().chain([fixtures::dual()]) {
        assert_eq!(
            sorted_names(&p, &narrow_ideals(&p)),
            sorted_names(&p, &engine_ideals(&p)),
            "{p}"
        );
    }
}

#[test]
fn random_lattices_match_oracle() {
    for p in valid_sample(101, 60, 4) {
        let oracle = common::ideals(&p);
        let mut engine = engine_ideals(&p);
        engine.sort();
        assert_eq!(engine, oracle, "{p}");

        let mut primes = engine_primes(&p);
        primes.sort();
        assert_eq!(primes, common::primes(&p), "{p}");

        for j in ideals::all_ideals(&p) {
            assert_eq!(
                ideals::radical(&p, &j).atoms(),
                common::radical(&p, j.atoms()),
                "{p}"
            );
        }
        for a in common::objects(&p) {
            let fam = ObjectFamily::from([a]);
            let g = ideals::ideal_generated_by(&p, &fam).unwrap();
            assert_eq!(g.atoms(), common::least_ideal_over(&oracle, a), "{p}");
        }
    }
}

#[test]
fn random_topologies_match_oracle() {
    for p in valid_sample(202, 60, 4) {
        let spc = Spectrum::new(&p);
        let primes = common::sorted_primes(&p);
        assert_eq!(spc.len(), primes.len());
        for a in common::objects(&p) {
            assert_eq!(spc.supp_obj(a).unwrap(), common::supp(&primes, a), "{p}");
        }
        let oracle = common::closed_sets(&p, &primes);
        let engine: BTreeSet<Vec<usize>> = spc
            .closed_sets()
            .iter()
            .map(|c| c.iter().collect())
            .collect();
        assert_eq!(engine, oracle, "{p}");
        for i in 0..spc.len() {
            // Closure of a point: the least closed set containing it.
            let least = oracle
                .iter()
                .filter(|c| c.contains(&i))
                .min_by_key(|c| c.len())
                .unwrap();
            let engine_closure: Vec<usize> = spc.closure(&[i].into()).iter().collect();
            assert_eq!(&engine_closure, least, "{p}");
        }
    }
}
