use std::sync::Arc;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use ttspc::classification::{self, verify_classification_with};
use ttspc::ideals::{self, Avoidance, Ideal};
use ttspc::morphisms::{self, ModelFunctor, SpaceMap};
use ttspc::random::random_valid;
use ttspc::spectrum::FiniteTopology;
use ttspc::{parse_presentation, Execution, ObjectClass, ObjectFamily, Presentation, Spectrum};

fn model(max_atoms: usize) -> impl Strategy<Value = Presentation> {
    any::<u64>().prop_map(move |seed| random_valid(&mut StdRng::seed_from_u64(seed), max_atoms))
}

fn model_and_object() -> impl Strategy<Value = (Presentation, ObjectClass)> {
    (model(5), any::<u64>()).prop_map(|(p, bits)| {
        let a = ObjectClass::from_bits(bits & p.whole().bits());
        (p, a)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn text_round_trip(p in model(5)) {
        prop_assert_eq!(parse_presentation(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn saturation_is_a_closure_operator((p, a) in model_and_object(), bits in any::<u64>()) {
        let b = ObjectClass::from_bits(bits & p.whole().bits());
        let sa = ideals::saturate(&p, a);
        prop_assert!(a.is_subset(sa));
        prop_assert_eq!(ideals::saturate(&p, sa), sa);
        prop_assert!(ideals::saturate(&p, a.intersection(b)).is_subset(sa));
        prop_assert!(ideals::is_thick_tensor_ideal(&p, sa).unwrap());
    }

    #[test]
    fn ideals_form_a_lattice(p in model(5)) {
        let all = ideals::all_ideals(&p);
        for i in &all {
            for j in &all {
                prop_assert!(all.contains(&i.intersection(j)));
                let join = ideals::generated(&p, i.atoms().union(j.atoms()));
                prop_assert!(all.contains(&join));
            }
        }
        prop_assert_eq!(all.first().copied(), Some(Ideal::zero()));
        prop_assert_eq!(all.last().copied(), Some(Ideal::whole(&p)));
    }

    #[test]
    fn supports_respect_operations((p, a) in model_and_object(), bits in any::<u64>()) {
        let b = ObjectClass::from_bits(bits & p.whole().bits());
        let spc = Spectrum::new(&p);
        let s = |x| spc.supp_obj(x).unwrap();
        prop_assert_eq!(s(a.union(b)), s(a).union(&s(b)));
        prop_assert_eq!(s(p.tensor_obj(a, b).unwrap()), s(a).intersection(&s(b)));
        prop_assert_eq!(s(p.shift_obj(a).unwrap()), s(a));
        prop_assert!(spc.is_closed(&s(a)));
    }

    #[test]
    fn spectrum_is_spectral(p in model(5)) {
        let spc = Spectrum::new(&p);
        let report = spc.verify_spectral();
        prop_assert!(report.ok(), "{:?}", report.failures);
        prop_assert!(!spc.is_empty());
        for i in 0..spc.len() {
            let c = spc.closure(&[i].into());
            prop_assert_eq!(spc.closure(&c), c.clone());
            prop_assert_eq!(spc.generic_points(&c), [i].into());
        }
    }

    #[test]
    fn closed_sets_are_a_lattice(p in model(5)) {
        let spc = Spectrum::new(&p);
        let closed = spc.closed_sets();
        for a in &closed {
            for b in &closed {
                prop_assert!(closed.contains(&a.union(b)));
                prop_assert!(closed.contains(&a.intersection(b)));
            }
        }
    }

    #[test]
    fn classification_round_trips(p in model(5)) {
        let report = classification::verify_classification(&p);
        prop_assert!(report.roundtrip_ok, "{:?}", report.failures);
        prop_assert_eq!(report.radical_ideals.len(), report.spec_closed_sets.len());
    }

    #[test]
    fn strategies_agree(p in model(6)) {
        prop_assert_eq!(
            ideals::all_ideals_with(&p, Execution::Sequential),
            ideals::all_ideals_with(&p, Execution::Parallel)
        );
        prop_assert_eq!(
            ideals::all_primes_with(&p, Execution::Sequential),
            ideals::all_primes_with(&p, Execution::Parallel)
        );
        prop_assert_eq!(
            verify_classification_with(&p, Execution::Sequential),
            verify_classification_with(&p, Execution::Parallel)
        );
    }

    #[test]
    fn avoiding_primes((p, a) in model_and_object(), j_bits in any::<u64>()) {
        let j = ideals::generated(&p, ObjectClass::from_bits(j_bits & p.whole().bits()));
        let s = ideals::multiplicative_closure(&p, &ObjectFamily::from([a]));
        prop_assert!(ideals::check_multiplicative(&p, &s).is_ok());
        match ideals::prime_avoiding(&p, &j, &s).unwrap() {
            Avoidance::Prime(q) => {
                prop_assert!(ideals::is_prime(&p, &q));
                prop_assert!(j.is_subset(&q));
                prop_assert!(s.iter().all(|c| !q.contains(c)));
            }
            Avoidance::Meets(c) => {
                prop_assert!(s.contains(c) && j.contains(c));
            }
        }
    }

    #[test]
    fn identity_functor_induces_identity(p in model(4)) {
        let p = Arc::new(p);
        let id = ModelFunctor::identity(p.clone());
        prop_assert!(id.check().is_ok());
        let n = Spectrum::new(&p).len();
        prop_assert_eq!(morphisms::spc_map(&id).unwrap(), SpaceMap((0..n).collect()));
        prop_assert_eq!(morphisms::image_closure(&id).unwrap(), ttspc::PointSet::all(n));
    }

    #[test]
    fn quotient_correspondence(p in model(4), bits in any::<u64>()) {
        let p = Arc::new(p);
        let j = ideals::generated(&p, ObjectClass::from_bits(bits & p.whole().bits()));
        let qm = morphisms::quotient_model(p.clone(), &j).unwrap();
        prop_assert!(qm.correspondence.homeomorphism);
        prop_assert!(qm.proj.check().is_ok());
        prop_assert_eq!(qm.quotient.atom_count(), p.atom_count() - j.atoms().len());
        // Quotienting the quotient by nothing changes nothing.
        let again = morphisms::quotient_model(qm.quotient.clone(), &Ideal::zero()).unwrap();
        prop_assert_eq!(&*again.quotient, &*qm.quotient);
    }
}
