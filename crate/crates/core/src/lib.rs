//! Prime spectra of finite tensor triangulated models.
//!
//! A model ([`Presentation`]) lists indecomposable object classes ("atoms")
//! together with tensor, shift and triangle data. From it the crate computes
//! thick tensor ideals, the prime spectrum with its Zariski topology and
//! supports, radicals, the classification of radical ideals by
//! specialization-closed subsets, support data and their universal map, and
//! the maps on spectra induced by functors and quotients.
//!
//! ```
//! use ttspc::{fixtures, spectrum::Spectrum};
//!
//! let dvr = fixtures::dvr();
//! let spc = Spectrum::new(&dvr);
//! assert_eq!(spc.len(), 2);
//! ```

pub mod classification;
pub mod cli;
pub mod exec;
pub mod fixtures;
pub mod ideals;
pub mod model;
pub mod morphisms;
pub mod object;
pub mod random;
pub mod spectrum;
pub mod topology;

pub use exec::Execution;
pub use ideals::Ideal;
pub use model::{parse_presentation, validate_presentation, Presentation, Triangle};
pub use object::{ObjectClass, ObjectFamily};
pub use spectrum::{PointSet, Spectrum};
