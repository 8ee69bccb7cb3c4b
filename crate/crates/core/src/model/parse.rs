//! Line-based text format shared by presentations, support data and functors.
//!
//! A line `[name] rest` opens section `name`; `rest`, when present, is the
//! first declaration of that section. Following lines belong to the most
//! recently opened section. `#` starts a comment. Sections may appear in any
//! order and may repeat.

use thiserror::Error;

use super::{Presentation, Triangle};
use crate::object::{ObjectClass, MAX_ATOMS};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{line}:{column}: duplicate atom `{atom}`")]
    DuplicateAtom {
        line: usize,
        column: usize,
        atom: String,
    },
    #[error("{line}:{column}: unknown atom `{atom}`")]
    UnknownAtom {
        line: usize,
        column: usize,
        atom: String,
    },
    #[error("{line}:{column}: unknown point `{point}`")]
    UnknownPoint {
        line: usize,
        column: usize,
        point: String,
    },
    #[error("missing tensor entry ({0},{1})")]
    MissingTensor(String, String),
    #[error("missing shift entry for `{0}`")]
    MissingShift(String),
    #[error("missing [unit] declaration")]
    MissingUnit,
    #[error("missing {section} entry for `{name}`")]
    MissingEntry { section: &'static str, name: String },
    #[error("{count} atoms exceed the supported maximum of {MAX_ATOMS}")]
    TooManyAtoms { count: usize },
}

impl ParseError {
    pub(crate) fn syntax(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax {
            line,
            column,
            message: message.into(),
        }
    }
}

/// One declaration, tagged with its section and source position (1-based).
#[derive(Debug, Clone, Copy)]
pub(crate) struct Entry<'a> {
    pub section: &'a str,
    pub line: usize,
    pub column: usize,
    pub text: &'a str,
}

impl Entry<'_> {
    /// Splits at the first occurrence of `sep`, keeping column offsets.
    pub fn split_once(&self, sep: &str) -> Option<(Entry<'_>, Entry<'_>)> {
        let at = self.text.find(sep)?;
        let (left, right) = (&self.text[..at], &self.text[at + sep.len()..]);
        Some((self.sub(left, 0), self.sub(right, at + sep.len())))
    }

    /// Pieces separated by `sep`, each with its own column.
    pub fn split(&self, sep: char) -> Vec<Entry<'_>> {
        let mut out = Vec::new();
        let mut start = 0;
        for (i, ch) in self.text.char_indices() {
            if ch == sep {
                out.push(self.sub(&self.text[start..i], start));
                start = i + ch.len_utf8();
            }
        }
        out.push(self.sub(&self.text[start..], start));
        out
    }

    /// Whitespace-separated words.
    pub fn words(&self) -> Vec<Entry<'_>> {
        let mut out = Vec::new();
        let mut start = None;
        for (i, ch) in self
            .text
            .char_indices()
            .chain(std::iter::once((self.text.len(), ' ')))
        {
            match (start, ch.is_whitespace()) {
                (None, false) => start = Some(i),
                (Some(s), true) => {
                    out.push(self.sub(&self.text[s..i], s));
                    start = None;
                }
                _ => {}
            }
        }
        out
    }

    fn sub<'b>(&'b self, piece: &'b str, offset: usize) -> Entry<'b> {
        let lead = piece.len() - piece.trim_start().len();
        Entry {
            section: self.section,
            line: self.line,
            column: self.column + offset + lead,
            text: piece.trim(),
        }
    }

    pub fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::syntax(self.line, self.column, message)
    }
}

pub(crate) fn is_token(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits `src` into declarations, rejecting section names not in `allowed`.
pub(crate) fn scan_sections<'a>(
    src: &'a str,
    allowed: &[&'static str],
) -> Result<Vec<Entry<'a>>, ParseError> {
    let mut entries = Vec::new();
    let mut current: Option<&'a str> = None;
    for (line_no, raw) in src.lines().enumerate() {
        let line = line_no + 1;
        let content = raw.split('#').next().unwrap_or("");
        let lead = content.len() - content.trim_start().len();
        let text = content.trim();
        if text.is_empty() {
            continue;
        }
        let (body, body_col) = if let Some(rest) = text.strip_prefix('[') {
            let close = rest
                .find(']')
                .ok_or_else(|| ParseError::syntax(line, lead + 1, "unterminated section header"))?;
            let name = rest[..close].trim();
            let section = allowed.iter().find(|s| **s == name).ok_or_else(|| {
                ParseError::syntax(line, lead + 2, format!("unknown section `[{name}]`"))
            })?;
            current = Some(section);
            let after = &rest[close + 1..];
            // 1-based column of the first byte after `]`.
            let col = lead + 3 + close;
            let trimmed = after.trim_start();
            (trimmed.trim_end(), col + (after.len() - trimmed.len()))
        } else {
            (text, lead + 1)
        };
        if body.is_empty() {
            continue;
        }
        let section = current.ok_or_else(|| {
            ParseError::syntax(line, body_col, "declaration outside of any section")
        })?;
        entries.push(Entry {
            section,
            line,
            column: body_col,
            text: body,
        });
    }
    Ok(entries)
}

/// Parses `0` or a comma-separated list of names resolved by `resolve`.
pub(crate) fn parse_class_list<F>(
    entry: &Entry<'_>,
    resolve: F,
    unknown: fn(usize, usize, String) -> ParseError,
) -> Result<Vec<usize>, ParseError>
where
    F: Fn(&str) -> Option<usize>,
{
    if entry.text == "0" {
        return Ok(Vec::new());
    }
    if entry.text.is_empty() {
        return Err(entry.error("expected `0` or a comma-separated list"));
    }
    let mut out = Vec::new();
    for piece in entry.split(',') {
        if !is_token(piece.text) {
            return Err(piece.error(format!("invalid name `{}`", piece.text)));
        }
        let i = resolve(piece.text)
            .ok_or_else(|| unknown(piece.line, piece.column, piece.text.to_string()))?;
        if !out.contains(&i) {
            out.push(i);
        }
    }
    Ok(out)
}

fn unknown_atom(line: usize, column: usize, atom: String) -> ParseError {
    ParseError::UnknownAtom { line, column, atom }
}

/// Parses a presentation document.
///
/// Tables must be total: every atom needs a shift line and every unordered
/// pair a tensor line. A pair may be listed in both orders if the two
/// entries agree.
pub fn parse_presentation(src: &str) -> Result<Presentation, ParseError> {
    let entries = scan_sections(src, &["atoms", "unit", "shift", "tensor", "triangles"])?;
    let of = |name: &'static str| entries.iter().filter(move |e| e.section == name);

    let mut atoms: Vec<String> = Vec::new();
    for entry in of("atoms") {
        for tok in entry.words() {
            if !is_token(tok.text) {
                return Err(tok.error(format!("invalid atom id `{}`", tok.text)));
            }
            if tok.text == "0" {
                return Err(tok.error("atom id `0` is reserved for the zero object"));
            }
            if atoms.iter().any(|a| a == tok.text) {
                return Err(ParseError::DuplicateAtom {
                    line: tok.line,
                    column: tok.column,
                    atom: tok.text.to_string(),
                });
            }
            atoms.push(tok.text.to_string());
        }
    }
    if atoms.len() > MAX_ATOMS {
        return Err(ParseError::TooManyAtoms { count: atoms.len() });
    }
    let n = atoms.len();
    let resolve = |name: &str| atoms.iter().position(|a| a == name);
    let class = |entry: &Entry<'_>| -> Result<ObjectClass, ParseError> {
        parse_class_list(entry, resolve, unknown_atom).map(ObjectClass::from_indices)
    };
    let atom = |entry: &Entry<'_>| -> Result<usize, ParseError> {
        if !is_token(entry.text) {
            return Err(entry.error(format!("invalid atom id `{}`", entry.text)));
        }
        resolve(entry.text).ok_or_else(|| unknown_atom(entry.line, entry.column, entry.text.into()))
    };

    let mut unit = None;
    for entry in of("unit") {
        if unit.is_some() {
            return Err(entry.error("duplicate [unit] declaration"));
        }
        unit = Some(class(entry)?);
    }
    let unit = unit.ok_or(ParseError::MissingUnit)?;

    let mut shift: Vec<Option<ObjectClass>> = vec![None; n];
    for entry in of("shift") {
        let (lhs, rhs) = entry
            .split_once("->")
            .ok_or_else(|| entry.error("expected `atom->object`"))?;
        let x = atom(&lhs)?;
        let value = class(&rhs)?;
        if shift[x].is_some() {
            return Err(lhs.error(format!("duplicate shift entry for `{}`", atoms[x])));
        }
        shift[x] = Some(value);
    }
    let shift = shift
        .into_iter()
        .enumerate()
        .map(|(x, s)| s.ok_or_else(|| ParseError::MissingShift(atoms[x].clone())))
        .collect::<Result<Vec<_>, _>>()?;

    let mut tensor: Vec<Option<ObjectClass>> = vec![None; n * n];
    for entry in of("tensor") {
        let (pair, rhs) = entry
            .split_once("=")
            .ok_or_else(|| entry.error("expected `atom*atom=object`"))?;
        let (left, right) = pair
            .split_once("*")
            .ok_or_else(|| pair.error("expected `atom*atom`"))?;
        let (x, y) = (atom(&left)?, atom(&right)?);
        let value = class(&rhs)?;
        for (i, j) in [(x, y), (y, x)] {
            match tensor[i * n + j] {
                Some(old) if old != value => {
                    return Err(rhs.error(format!(
                        "conflicting tensor entries for ({},{})",
                        atoms[x], atoms[y]
                    )));
                }
                _ => tensor[i * n + j] = Some(value),
            }
        }
    }
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
            let value = tensor[x * n + y]
                .ok_or_else(|| ParseError::MissingTensor(atoms[lo].clone(), atoms[hi].clone()))?;
            table.push(value);
        }
    }

    let mut triangles = Vec::new();
    for entry in of("triangles") {
        let parts = entry.split(';');
        if parts.len() != 3 {
            return Err(entry.error("expected `object;object;object`"));
        }
        triangles.push(Triangle::new(
            class(&parts[0])?,
            class(&parts[1])?,
            class(&parts[2])?,
        ));
    }

    Presentation::new(atoms, unit, table, shift, triangles).map_err(|e| {
        // Every table-level condition is checked above.
        ParseError::syntax(0, 0, e.to_string())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn field_parses() {
        let p = parse_presentation(fixtures::FIELD).unwrap();
        assert_eq!(p.atom_count(), 1);
        assert_eq!(p.unit(), p.object(&["u"]).unwrap());
    }

    #[test]
    fn dvr_parses() {
        let p = parse_presentation(fixtures::DVR).unwrap();
        assert_eq!(p.atom_names(), ["u", "k"]);
        let k = p.object(&["k"]).unwrap();
        assert_eq!(p.tensor_obj(k, k).unwrap(), k);
        assert_eq!(p.declared_triangles().len(), 1);
    }

    #[test]
    fn missing_tensor_entry_is_reported() {
        let src = fixtures::DVR.replace("k*k=k", "");
        let err = parse_presentation(&src).unwrap_err();
        assert_eq!(err, ParseError::MissingTensor("k".into(), "k".into()));
        assert_eq!(err.to_string(), "missing tensor entry (k,k)");
    }

    #[test]
    fn inline_and_block_sections_agree() {
        let inline = "[atoms] u k\n[unit] u\n[shift] u->u\n[shift] k->k\n\
                      [tensor] u*u=u\n[tensor] k*u=k\n[tensor] k*k=k\n[triangles] u;u;k\n";
        assert_eq!(
            parse_presentation(inline).unwrap(),
            parse_presentation(fixtures::DVR).unwrap()
        );
    }

    #[test]
    fn sections_are_order_insensitive() {
        let src = "[tensor]\nk*k=k\nu*k=k\nu*u=u\n[shift]\nk->k\nu->u\n[unit] u\n[atoms] u k\n[triangles] u;u;k\n";
        assert_eq!(
            parse_presentation(src).unwrap(),
            parse_presentation(fixtures::DVR).unwrap()
        );
    }

    #[test]
    fn error_positions() {
        let err = parse_presentation("[atoms] u u\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::DuplicateAtom {
                line: 1,
                column: 11,
                atom: "u".into()
            }
        );
        let err = parse_presentation("[atoms] u\n[unit] u\n[shift]\n  u->v\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::UnknownAtom {
                line: 4,
                column: 6,
                atom: "v".into()
            }
        );
        let err = parse_presentation("[atoms] u\n[bogus] x\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 2, .. }));
        let err = parse_presentation("u->u\n").unwrap_err();
        assert!(matches!(
            err,
            ParseError::Syntax {
                line: 1,
                column: 1,
                ..
            }
        ));
    }

    #[test]
    fn conflicting_orders_rejected() {
        let src = fixtures::DVR.replace("u*k=k", "u*k=k\nk*u=u");
        assert!(matches!(
            parse_presentation(&src).unwrap_err(),
            ParseError::Syntax { .. }
        ));
    }

    #[test]
    fn missing_shift_and_unit() {
        let src = fixtures::DVR.replace("k->k", "");
        assert_eq!(
            parse_presentation(&src).unwrap_err(),
            ParseError::MissingShift("k".into())
        );
        let src = fixtures::DVR.replace("[unit] u", "");
        assert_eq!(
            parse_presentation(&src).unwrap_err(),
            ParseError::MissingUnit
        );
    }

    #[test]
    fn comments_and_zero() {
        let src = "# header\n[atoms] e f # two atoms\n[unit] e,f\n[shift]\ne->e\nf->f\n\
                   [tensor]\ne*e=e\nf*f=f\ne*f=0\n";
        let p = parse_presentation(src).unwrap();
        let (e, f) = (p.object(&["e"]).unwrap(), p.object(&["f"]).unwrap());
        assert!(p.tensor_obj(e, f).unwrap().is_zero());
    }
}
