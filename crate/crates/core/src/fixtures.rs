//! The bundled example models, support data and functors.
//!
//! The texts are the files under `fixtures/` at the repository root, embedded
//! at compile time so tests and benches do not depend on the working
//! directory.

use crate::model::{parse_presentation, Presentation};

pub const FIELD: &str = include_str!("../../../fixtures/field.tt");
pub const TWOPOINTS: &str = include_str!("../../../fixtures/twopoints.tt");
pub const DVR: &str = include_str!("../../../fixtures/dvr.tt");
pub const STABZ3: &str = include_str!("../../../fixtures/stabz3.tt");
/// A square-zero atom: the zero ideal is not radical.
pub const DUAL: &str = include_str!("../../../fixtures/dual.tt");
/// DVR with the `k*k` entry missing; does not parse.
pub const BROKEN: &str = include_str!("../../../fixtures/broken.tt");
/// DVR with `u*k=u`; parses but breaks the unit law.
pub const BADUNIT: &str = include_str!("../../../fixtures/badunit.tt");

pub const DVR_SIERPINSKI: &str = include_str!("../../../fixtures/dvr-sierpinski.sd");
pub const DVR_ONEPOINT: &str = include_str!("../../../fixtures/dvr-onepoint.sd");
pub const DVR_NOTCLOSED: &str = include_str!("../../../fixtures/dvr-notclosed.sd");
pub const TWOPOINTS_DISCRETE: &str = include_str!("../../../fixtures/twopoints-discrete.sd");
pub const TWOPOINTS_SD5: &str = include_str!("../../../fixtures/twopoints-sd5.sd");
pub const FIELD_ONEPOINT: &str = include_str!("../../../fixtures/field-onepoint.sd");
pub const STABZ3_ONEPOINT: &str = include_str!("../../../fixtures/stabz3-onepoint.sd");

pub const F_INCL: &str = include_str!("../../../fixtures/f-incl.fn");
pub const F_BAD: &str = include_str!("../../../fixtures/f-bad.fn");

fn load(name: &str, text: &str) -> Presentation {
    parse_presentation(text).unwrap_or_else(|e| panic!("bundled fixture {name} is malformed: {e}"))
}

pub fn field() -> Presentation {
    load("field", FIELD)
}

pub fn twopoints() -> Presentation {
    load("twopoints", TWOPOINTS)
}

pub fn dvr() -> Presentation {
    load("dvr", DVR)
}

pub fn stabz3() -> Presentation {
    load("stabz3", STABZ3)
}

pub fn dual() -> Presentation {
    load("dual", DUAL)
}

/// The four main models: FIELD, TWOPOINTS, DVR, STABZ3.
pub fn all() -> Vec<Presentation> {
    vec![field(), twopoints(), dvr(), stabz3()]
}

/// Model fixtures by file name, for resolving `[source]`/`[target]` lines.
pub fn model_text(file_name: &str) -> Option<&'static str> {
    Some(match file_name {
        "field.tt" => FIELD,
        "twopoints.tt" => TWOPOINTS,
        "dvr.tt" => DVR,
        "stabz3.tt" => STABZ3,
        "dual.tt" => DUAL,
        _ => return None,
    })
}
