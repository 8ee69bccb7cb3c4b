use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use super::Presentation;
use crate::ideals;
use crate::object::ObjectClass;

/// Model law checked by [`validate_presentation`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Rule {
    #[serde(rename = "symmetry")]
    Symmetry,
    #[serde(rename = "unit law")]
    UnitLaw,
    #[serde(rename = "associativity")]
    Associativity,
    #[serde(rename = "shift compatibility")]
    ShiftCompatibility,
    #[serde(rename = "shift invertibility")]
    ShiftInvertibility,
    /// No atom may be forced into the zero ideal by the triangles.
    #[serde(rename = "nonzero atoms")]
    NonzeroAtoms,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Symmetry => "symmetry",
            Rule::UnitLaw => "unit law",
            Rule::Associativity => "associativity",
            Rule::ShiftCompatibility => "shift compatibility",
            Rule::ShiftInvertibility => "shift invertibility",
            Rule::NonzeroAtoms => "nonzero atoms",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: Rule,
    /// The offending atoms or triple, in presentation syntax.
    pub subject: String,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn from_violations(violations: Vec<Violation>) -> Self {
        ValidationReport {
            ok: violations.is_empty(),
            violations,
        }
    }

    pub fn has(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return writeln!(f, "ok");
        }
        for v in &self.violations {
            writeln!(f, "{}: {}: {}", v.rule, v.subject, v.message)?;
        }
        Ok(())
    }
}

/// Checks every model law and reports each failing instance.
pub fn validate_presentation(p: &Presentation) -> ValidationReport {
    let n = p.atom_count();
    let mut out = Vec::new();
    let name = |x: usize| p.atom_name(x);
    let cls = |a: ObjectClass| p.format_class(a);

    for x in 0..n {
        for y in x + 1..n {
            if p.tensor_atoms(x, y) != p.tensor_atoms(y, x) {
                out.push(Violation {
                    rule: Rule::Symmetry,
                    subject: format!("({},{})", name(x), name(y)),
                    message: format!(
                        "{}*{}={} but {}*{}={}",
                        name(x),
                        name(y),
                        cls(p.tensor_atoms(x, y)),
                        name(y),
                        name(x),
                        cls(p.tensor_atoms(y, x))
                    ),
                });
            }
        }
    }

    for x in 0..n {
        let single = ObjectClass::atom(x);
        let got = p.tensor(p.unit(), single);
        if got != single {
            out.push(Violation {
                rule: Rule::UnitLaw,
                subject: name(x).to_string(),
                message: format!("unit*{} = {}, expected {}", name(x), cls(got), name(x)),
            });
        }
    }

    for x in 0..n {
        let a = ObjectClass::atom(x);
        for y in 0..n {
            let b = ObjectClass::atom(y);
            let ab = p.tensor(a, b);
            for z in 0..n {
                let c = ObjectClass::atom(z);
                let left = p.tensor(ab, c);
                let right = p.tensor(a, p.tensor(b, c));
                if left != right {
                    out.push(Violation {
                        rule: Rule::Associativity,
                        subject: format!("({},{},{})", name(x), name(y), name(z)),
                        message: format!(
                            "({}*{})*{} = {} but {}*({}*{}) = {}",
                            name(x),
                            name(y),
                            name(z),
                            cls(left),
                            name(x),
                            name(y),
                            name(z),
                            cls(right)
                        ),
                    });
                }
            }
        }
    }

    for x in 0..n {
        for y in 0..n {
            let (a, b) = (ObjectClass::atom(x), ObjectClass::atom(y));
            let left = p.shift(p.tensor(a, b));
            let right = p.tensor(p.shift(a), b);
            if left != right {
                out.push(Violation {
                    rule: Rule::ShiftCompatibility,
                    subject: format!("({},{})", name(x), name(y)),
                    message: format!(
                        "T({}*{}) = {} but T({})*{} = {}",
                        name(x),
                        name(y),
                        cls(left),
                        name(x),
                        name(y),
                        cls(right)
                    ),
                });
            }
        }
    }

    out.extend(shift_invertibility(p));

    if out.is_empty() {
        // Only meaningful once the tables are lawful.
        let forced = ideals::saturate(p, ObjectClass::ZERO);
        if !forced.is_zero() {
            out.push(Violation {
                rule: Rule::NonzeroAtoms,
                subject: cls(forced),
                message: format!("triangles force {} into the zero ideal", cls(forced)),
            });
        }
    }

    ValidationReport::from_violations(out)
}

/// The shift must permute the classes reachable from single atoms.
fn shift_invertibility(p: &Presentation) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut reachable: BTreeSet<ObjectClass> = BTreeSet::new();
    let mut stack: Vec<ObjectClass> = (0..p.atom_count()).map(ObjectClass::atom).collect();
    while let Some(a) = stack.pop() {
        if reachable.insert(a) {
            stack.push(p.shift(a));
        }
    }
    if reachable.contains(&ObjectClass::ZERO) {
        let dead: Vec<&str> = (0..p.atom_count())
            .filter(|&x| p.shift_atom(x).is_zero())
            .map(|x| p.atom_name(x))
            .collect();
        out.push(Violation {
            rule: Rule::ShiftInvertibility,
            subject: if dead.is_empty() {
                "0".to_string()
            } else {
                dead.join(",")
            },
            message: "a nonzero class shifts to 0".to_string(),
        });
    }
    let mut preimage: BTreeMap<ObjectClass, ObjectClass> = BTreeMap::new();
    for &a in &reachable {
        let image = p.shift(a);
        if let Some(&other) = preimage.get(&image) {
            out.push(Violation {
                rule: Rule::ShiftInvertibility,
                subject: format!("{};{}", p.format_class(other), p.format_class(a)),
                message: format!(
                    "T({}) = T({}) = {}",
                    p.format_class(other),
                    p.format_class(a),
                    p.format_class(image)
                ),
            });
        } else {
            preimage.insert(image, a);
        }
    }
    out
}
