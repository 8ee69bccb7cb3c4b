//! Quotients by an ideal, built by deleting its atoms.

use std::sync::Arc;

use super::functor::spc_map_between;
use super::{ModelFunctor, MorphismError, SpaceMap};
use crate::ideals::Ideal;
use crate::model::Presentation;
use crate::object::ObjectClass;
use crate::spectrum::{FiniteTopology, PointSet, Spectrum};

/// How the spectrum of the quotient sits inside the original spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Correspondence {
    /// Primes of the original model containing the ideal.
    pub primes_containing: PointSet,
    pub quotient_points: usize,
    /// Quotient points to original points.
    pub map: SpaceMap,
    /// Injective, onto `primes_containing`, and an order embedding, hence a
    /// homeomorphism onto that subspace.
    pub homeomorphism: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientModel {
    pub quotient: Arc<Presentation>,
    /// Sends `x ∉ J` to its copy and `x ∈ J` to `0`.
    pub proj: ModelFunctor,
    pub correspondence: Correspondence,
}

/// Deletes the atoms of `j` from every table, and checks that the induced
/// map on spectra identifies `Spc` of the quotient with the primes
/// containing `j`.
pub fn quotient_model(p: Arc<Presentation>, j: &Ideal) -> Result<QuotientModel, MorphismError> {
    let (q, renumber) = p.delete_atoms(j.atoms());
    let quotient = Arc::new(q);
    let on_atoms = renumber
        .iter()
        .map(|r| r.map_or(ObjectClass::ZERO, ObjectClass::atom))
        .collect();
    let proj = ModelFunctor::new(p.clone(), quotient.clone(), on_atoms)?;
    proj.check()?;

    let spc = Spectrum::new(&p);
    let spc_q = Spectrum::new(&quotient);
    let map = spc_map_between(&proj, &spc, &spc_q)?;
    let primes_containing: PointSet = (0..spc.len())
        .filter(|&i| j.is_subset(&spc.point(i)))
        .collect();
    let onto = map.image(&spc_q.all_points()) == primes_containing;
    let order_embedding = (0..spc_q.len()).all(|a| {
        (0..spc_q.len()).all(|b| {
            spc_q.point(a).is_subset(&spc_q.point(b))
                == spc.point(map.apply(a)).is_subset(&spc.point(map.apply(b)))
        })
    });
    let correspondence = Correspondence {
        homeomorphism: map.is_injective() && onto && order_embedding,
        quotient_points: spc_q.len(),
        primes_containing,
        map,
    };
    Ok(QuotientModel {
        quotient,
        proj,
        correspondence,
    })
}
