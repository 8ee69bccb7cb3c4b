//! Support data, functors between models, and quotients.

mod functor;
mod quotient;
mod support;

use thiserror::Error;

use crate::ideals::IdealError;
use crate::model::ModelError;
use crate::spectrum::{PointSet, SpectrumError};
use crate::topology;

pub use functor::{
    functor_agreement, functor_references, generated_images_agree, image_closure, parse_functor,
    spc_map, ModelFunctor,
};
pub use quotient::{quotient_model, Correspondence, QuotientModel};
pub use support::{
    classifying_homeo_check, classifying_report, is_classifying, parse_support_data,
    support_data_ideal, universal_map, verify_support_data, Axiom, ClassifyingReport, FiniteSpace,
    HomeoReport, SpaceError, SupportData, SupportReport, SupportViolation, UniversalMap,
};

/// Object-level checks over all objects run up to this many atoms; above it
/// only the atom-level form is checked (the two agree because every map in
/// sight is a union over atoms).
pub const OBJECT_CHECK_LIMIT: usize = 12;
/// Same for checks over all pairs of objects.
pub const PAIR_CHECK_LIMIT: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MorphismError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error("not a support datum: {0}")]
    NotSupportData(String),
    #[error("not a tensor triangulated functor: {0}")]
    NotTtFunctor(String),
    #[error("functors do not share source and target")]
    Incompatible,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("postcondition failed: {0}")]
    Postcondition(String),
}

/// A map between finite point sets, given by the image of each point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpaceMap(pub Vec<usize>);

impl SpaceMap {
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn preimage(&self, w: &PointSet) -> PointSet {
        topology::preimage(&self.0, w)
    }

    pub fn image(&self, w: &PointSet) -> PointSet {
        topology::image(&self.0, w)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.0.iter().all(|i| seen.insert(*i))
    }

    /// `self` after `first`: `i -> self(first(i))`.
    pub fn after(&self, first: &SpaceMap) -> SpaceMap {
        SpaceMap(first.0.iter().map(|&i| self.0[i]).collect())
    }
}
