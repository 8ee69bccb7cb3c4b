//! The `ttspc` command line.
//!
//! Exit codes: 0 success, 1 invalid model or functor, 2 a checked property
//! failed, 3 unreadable input (I/O, parse or usage errors).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::classification::{self, ClassificationJson};
use crate::ideals::{self, Ideal, ENUMERATION_LIMIT};
use crate::model::{parse_presentation, validate_presentation, Presentation};
use crate::morphisms::{self, MorphismError, SupportData};
use crate::object::ObjectClass;
use crate::spectrum::{FiniteTopology, Spectrum};
use crate::Execution;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn fail(code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        CommandResult {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "ttspc",
    version,
    about = "Prime spectra of finite tensor triangulated models"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Emit Graphviz (spc only).
    #[arg(long, global = true, conflicts_with = "json")]
    dot: bool,
    /// Print nothing on stdout; the exit code carries the result.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the model laws.
    Validate { model: PathBuf },
    /// The prime spectrum with supports and specialization.
    Spc { model: PathBuf },
    /// Every thick tensor ideal, flagged prime and radical.
    Ideals { model: PathBuf },
    /// Radical ideals against specialization-closed subsets.
    Classify { model: PathBuf },
    /// Check support data and its universal map to the spectrum.
    SupportData { model: PathBuf, support: PathBuf },
    /// The map on spectra induced by a functor.
    Map {
        source: PathBuf,
        target: PathBuf,
        functor: PathBuf,
    },
    /// Quotient by the ideal generated by some atoms.
    Quotient {
        model: PathBuf,
        /// Comma-separated atoms, or `0`.
        #[arg(long)]
        ideal: String,
        /// Write the quotient presentation here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Output {
    json: bool,
    dot: bool,
}

/// Runs one command; `args` includes the program name.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandResult::fail(EXIT_INPUT, text)
            } else {
                CommandResult {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let out = Output {
        json: cli.json,
        dot: cli.dot,
    };
    if out.dot && !matches!(cli.command, Command::Spc { .. }) {
        return CommandResult::fail(EXIT_INPUT, "--dot is only supported by `spc`");
    }
    let mut result = match &cli.command {
        Command::Validate { model } => cmd_validate(model, &out),
        Command::Spc { model } => cmd_spc(model, &out),
        Command::Ideals { model } => cmd_ideals(model, &out),
        Command::Classify { model } => cmd_classify(model, &out),
        Command::SupportData { model, support } => cmd_support_data(model, support, &out),
        Command::Map {
            source,
            target,
            functor,
        } => cmd_map(source, target, functor, &out),
        Command::Quotient {
            model,
            ideal,
            out: path,
        } => cmd_quotient(model, ideal, path.as_deref(), &out),
    };
    if cli.quiet {
        result.stdout.clear();
    }
    result
}

fn read(path: &Path) -> Result<String, CommandResult> {
    std::fs::read_to_string(path)
        .map_err(|e| CommandResult::fail(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn parse_model(path: &Path) -> Result<Presentation, CommandResult> {
    let text = read(path)?;
    parse_presentation(&text)
        .map_err(|e| CommandResult::fail(EXIT_INPUT, format!("{}: {e}", path.display())))
}

/// Parses, validates, and checks the model is small enough to enumerate.
fn load_valid(path: &Path) -> Result<Presentation, CommandResult> {
    let p = parse_model(path)?;
    let report = validate_presentation(&p);
    if !report.ok {
        return Err(CommandResult::fail(
            EXIT_INVALID,
            format!("{}: invalid model\n{report}", path.display()),
        ));
    }
    if p.atom_count() > ENUMERATION_LIMIT {
        return Err(CommandResult::fail(
            EXIT_INVALID,
            format!(
                "{}: {} atoms exceed the enumeration limit of {ENUMERATION_LIMIT}",
                path.display(),
                p.atom_count()
            ),
        ));
    }
    Ok(p)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn names(p: &Presentation, a: ObjectClass) -> Vec<String> {
    p.names_of(a).into_iter().map(String::from).collect()
}

fn braces(p: &Presentation, a: ObjectClass) -> String {
    format!("{{{}}}", p.names_of(a).join(","))
}

fn ok(stdout: String) -> CommandResult {
    CommandResult {
        code: EXIT_OK,
        stdout,
        stderr: String::new(),
    }
}

fn cmd_validate(path: &Path, out: &Output) -> CommandResult {
    let p = match parse_model(path) {
        Ok(p) => p,
        Err(r) => return r,
    };
    let report = validate_presentation(&p);
    let stdout = if out.json {
        to_json(&report)
    } else {
        report.to_string()
    };
    CommandResult {
        code: if report.ok { EXIT_OK } else { EXIT_INVALID },
        stdout,
        stderr: String::new(),
    }
}

fn cmd_spc(path: &Path, out: &Output) -> CommandResult {
    let p = match load_valid(path) {
        Ok(p) => p,
        Err(r) => return r,
    };
    let spc = Spectrum::new(&p);
    let stdout = if out.json {
        to_json(&spc.to_json())
    } else if out.dot {
        spc.to_dot()
    } else {
        let mut s = String::new();
        writeln!(s, "points: {}", spc.len()).unwrap();
        for i in 0..spc.len() {
            writeln!(s, "  p{i} {}", spc.point_label(i)).unwrap();
        }
        writeln!(s, "supports:").unwrap();
        for x in 0..p.atom_count() {
            let pts: Vec<String> = spc
                .atom_support(x)
                .iter()
                .map(|i| format!("p{i}"))
                .collect();
            writeln!(s, "  {}: [{}]", p.atom_name(x), pts.join(",")).unwrap();
        }
        let pairs: Vec<String> = spc
            .specialization()
            .iter()
            .map(|(i, j)| format!("p{i} in cl(p{j})"))
            .collect();
        writeln!(
            s,
            "specialization: {}",
            if pairs.is_empty() {
                "none".to_string()
            } else {
                pairs.join(", ")
            }
        )
        .unwrap();
        s
    };
    let spectral = spc.verify_spectral();
    if spectral.ok() {
        ok(stdout)
    } else {
        CommandResult {
            code: EXIT_VIOLATION,
            stdout,
            stderr: spectral.failures.join("\n") + "\n",
        }
    }
}

#[derive(Serialize)]
struct IdealRow {
    atoms: Vec<String>,
    prime: bool,
    radical: bool,
}

fn cmd_ideals(path: &Path, out: &Output) -> CommandResult {
    let p = match load_valid(path) {
        Ok(p) => p,
        Err(r) => return r,
    };
    let rows: Vec<IdealRow> = ideals::all_ideals(&p)
        .iter()
        .map(|j| IdealRow {
            atoms: names(&p, j.atoms()),
            prime: ideals::is_prime(&p, j),
            radical: ideals::is_radical(&p, j),
        })
        .collect();
    if out.json {
        return ok(to_json(&rows));
    }
    let mut s = String::new();
    for r in &rows {
        let mut flags = Vec::new();
        if r.prime {
            flags.push("prime");
        }
        if r.radical {
            flags.push("radical");
        }
        writeln!(s, "{{{}}} {}", r.atoms.join(","), flags.join(" ")).unwrap();
    }
    ok(s.lines().map(str::trim_end).collect::<Vec<_>>().join("\n") + "\n")
}

#[derive(Serialize)]
struct ClassifyJson {
    #[serde(flatten)]
    report: ClassificationJson,
    radical_criterion: bool,
    non_radical: Vec<Vec<String>>,
}

fn cmd_classify(path: &Path, out: &Output) -> CommandResult {
    let p = match load_valid(path) {
        Ok(p) => p,
        Err(r) => return r,
    };
    let spc = Spectrum::new(&p);
    let report = classification::classify_on(&spc, Execution::default());
    let criterion = classification::radical_criterion(&p);
    let non_radical: Vec<Ideal> = ideals::all_ideals(&p)
        .into_iter()
        .filter(|j| !ideals::is_radical(&p, j))
        .collect();
    let stdout = if out.json {
        to_json(&ClassifyJson {
            report: report.to_json(&spc),
            radical_criterion: criterion,
            non_radical: non_radical.iter().map(|j| names(&p, j.atoms())).collect(),
        })
    } else {
        let rows: Vec<(String, String)> = report
            .forward
            .iter()
            .map(|(y, k)| {
                let pts: Vec<String> = y.iter().map(|i| spc.point_label(i)).collect();
                (format!("[{}]", pts.join(",")), braces(&p, k.atoms()))
            })
            .collect();
        let width = rows
            .iter()
            .map(|r| r.0.chars().count())
            .max()
            .unwrap_or(0)
            .max(1);
        let mut s = String::new();
        writeln!(s, "{:width$}  K_Y", "Y").unwrap();
        for (y, k) in &rows {
            writeln!(s, "{y:width$}  {k}").unwrap();
        }
        writeln!(
            s,
            "roundtrip: {}",
            if report.roundtrip_ok { "ok" } else { "FAILED" }
        )
        .unwrap();
        writeln!(
            s,
            "every ideal radical: {}",
            if criterion { "yes" } else { "no" }
        )
        .unwrap();
        for j in &non_radical {
            writeln!(s, "non-radical ideal: {}", braces(&p, j.atoms())).unwrap();
        }
        s
    };
    CommandResult {
        code: if report.roundtrip_ok {
            EXIT_OK
        } else {
            EXIT_VIOLATION
        },
        stdout,
        stderr: report.failures.iter().map(|f| format!("{f}\n")).collect(),
    }
}

fn morphism_failure(e: MorphismError) -> CommandResult {
    let code = match e {
        MorphismError::NotTtFunctor(_) | MorphismError::Incompatible => EXIT_INVALID,
        MorphismError::Model(_) => EXIT_INPUT,
        _ => EXIT_VIOLATION,
    };
    CommandResult::fail(code, e.to_string())
}

#[derive(Serialize)]
struct SupportJson {
    axioms: morphisms::SupportReport,
    map: Vec<(String, Vec<String>)>,
    classifying: bool,
    homeomorphism: Option<bool>,
}

fn cmd_support_data(model: &Path, support: &Path, out: &Output) -> CommandResult {
    let p = match load_valid(model) {
        Ok(p) => p,
        Err(r) => return r,
    };
    let text = match read(support) {
        Ok(t) => t,
        Err(r) => return r,
    };
    let sd: SupportData = match morphisms::parse_support_data(&p, &text) {
        Ok(sd) => sd,
        Err(e) => return CommandResult::fail(EXIT_INPUT, format!("{}: {e}", support.display())),
    };
    let report = morphisms::verify_support_data(&p, &sd);
    if !report.ok() {
        let stdout = if out.json {
            to_json(&SupportJson {
                axioms: report.clone(),
                map: Vec::new(),
                classifying: false,
                homeomorphism: None,
            })
        } else {
            report.to_string()
        };
        return CommandResult {
            code: EXIT_VIOLATION,
            stdout,
            stderr: "support data violates its axioms\n".into(),
        };
    }
    let spc = Spectrum::new(&p);
    let f = match morphisms::universal_map(&p, &sd, &spc) {
        Ok(f) => f,
        Err(e) => return morphism_failure(e),
    };
    let space = sd.space();
    let map: Vec<(String, Vec<String>)> = (0..space.point_count())
        .map(|x| {
            (
                space.name(x).to_string(),
                names(&p, spc.point(f.map.apply(x)).atoms()),
            )
        })
        .collect();
    let classifying = match morphisms::is_classifying(&p, &sd) {
        Ok(c) => c,
        Err(e) => return morphism_failure(e),
    };
    let homeo = if classifying {
        match morphisms::classifying_homeo_check(&p, &sd, &spc) {
            Ok(h) => Some(h.homeomorphism),
            Err(e) => return morphism_failure(e),
        }
    } else {
        None
    };
    let stdout = if out.json {
        to_json(&SupportJson {
            axioms: report,
            map,
            classifying,
            homeomorphism: homeo,
        })
    } else {
        let mut s = String::from("axioms: ok\n");
        for (x, prime) in &map {
            writeln!(s, "{x} -> {{{}}}", prime.join(",")).unwrap();
        }
        match homeo {
            Some(h) => writeln!(
                s,
                "classifying: yes; homeomorphism: {}",
                if h { "yes" } else { "no" }
            )
            .unwrap(),
            None => writeln!(s, "classifying: no").unwrap(),
        }
        s
    };
    CommandResult {
        code: if homeo == Some(false) {
            EXIT_VIOLATION
        } else {
            EXIT_OK
        },
        stdout,
        stderr: String::new(),
    }
}

#[derive(Serialize)]
struct MapJson {
    map: Vec<(Vec<String>, Vec<String>)>,
    image_closure: Vec<Vec<String>>,
}

fn cmd_map(source: &Path, target: &Path, functor: &Path, out: &Output) -> CommandResult {
    let s = match load_valid(source) {
        Ok(p) => Arc::new(p),
        Err(r) => return r,
    };
    let t = match load_valid(target) {
        Ok(p) => Arc::new(p),
        Err(r) => return r,
    };
    let text = match read(functor) {
        Ok(t) => t,
        Err(r) => return r,
    };
    let mut stderr = String::new();
    if let Ok((src_ref, tgt_ref)) = morphisms::functor_references(&text) {
        for (given, named) in [(source, src_ref), (target, tgt_ref)] {
            if let Some(named) = named {
                if given.file_name().map(|f| f.to_string_lossy().into_owned())
                    != Some(named.clone())
                {
                    writeln!(
                        stderr,
                        "note: functor file names {named}, using {}",
                        given.display()
                    )
                    .unwrap();
                }
            }
        }
    }
    let f = match morphisms::parse_functor(&text, s.clone(), t.clone()) {
        Ok(f) => f,
        Err(e) => {
            return CommandResult::fail(EXIT_INPUT, format!("{stderr}{}: {e}", functor.display()))
        }
    };
    let violations = f.violations();
    if !violations.is_empty() {
        return CommandResult::fail(
            EXIT_INVALID,
            format!(
                "{stderr}not a tensor triangulated functor\n{}",
                violations.join("\n")
            ),
        );
    }
    let map = match morphisms::spc_map(&f) {
        Ok(m) => m,
        Err(e) => return morphism_failure(e),
    };
    let closure = match morphisms::image_closure(&f) {
        Ok(z) => z,
        Err(e) => return morphism_failure(e),
    };
    let spc_s = Spectrum::new(&s);
    let spc_t = Spectrum::new(&t);
    let rows: Vec<(Vec<String>, Vec<String>)> = (0..spc_t.len())
        .map(|q| {
            (
                names(&t, spc_t.point(q).atoms()),
                names(&s, spc_s.point(map.apply(q)).atoms()),
            )
        })
        .collect();
    let closure_pts: Vec<Vec<String>> = closure
        .iter()
        .map(|i| names(&s, spc_s.point(i).atoms()))
        .collect();
    let stdout = if out.json {
        to_json(&MapJson {
            map: rows,
            image_closure: closure_pts,
        })
    } else {
        let mut out = String::new();
        for (q, pq) in &rows {
            writeln!(out, "{{{}}} -> {{{}}}", q.join(","), pq.join(",")).unwrap();
        }
        let pts: Vec<String> = closure_pts
            .iter()
            .map(|c| format!("{{{}}}", c.join(",")))
            .collect();
        writeln!(out, "image closure: [{}]", pts.join(",")).unwrap();
        out
    };
    CommandResult {
        code: EXIT_OK,
        stdout,
        stderr,
    }
}

#[derive(Serialize)]
struct QuotientJson {
    ideal: Vec<String>,
    quotient: String,
    primes_containing: usize,
    quotient_points: usize,
    homeomorphism: bool,
}

fn cmd_quotient(path: &Path, ideal: &str, dest: Option<&Path>, out: &Output) -> CommandResult {
    let p = match load_valid(path) {
        Ok(p) => Arc::new(p),
        Err(r) => return r,
    };
    let requested: Vec<&str> = match ideal.trim() {
        "0" | "" => Vec::new(),
        list => list.split(',').map(str::trim).collect(),
    };
    let seed = match p.object(&requested) {
        Ok(a) => a,
        Err(e) => return CommandResult::fail(EXIT_INPUT, format!("--ideal: {e}")),
    };
    let j = ideals::generated(&p, seed);
    let mut stderr = String::new();
    if j.atoms() != seed {
        writeln!(stderr, "saturated to {}", braces(&p, j.atoms())).unwrap();
    }
    let qm = match morphisms::quotient_model(p.clone(), &j) {
        Ok(q) => q,
        Err(e) => return morphism_failure(e),
    };
    let c = &qm.correspondence;
    let verdict = format!(
        "primes ⊇ J: {}; quotient spectrum: {}; correspondence: {}",
        c.primes_containing.len(),
        c.quotient_points,
        if c.homeomorphism {
            "homeomorphism"
        } else {
            "FAILED"
        }
    );
    let document = format!("{}# {verdict}\n", qm.quotient);
    let code = if c.homeomorphism {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    };
    let stdout = if out.json {
        to_json(&QuotientJson {
            ideal: names(&p, j.atoms()),
            quotient: qm.quotient.to_string(),
            primes_containing: c.primes_containing.len(),
            quotient_points: c.quotient_points,
            homeomorphism: c.homeomorphism,
        })
    } else if dest.is_some() {
        format!("{verdict}\n")
    } else {
        document.clone()
    };
    if let Some(dest) = dest {
        if let Err(e) = std::fs::write(dest, &document) {
            return CommandResult::fail(EXIT_INPUT, format!("{}: {e}", dest.display()));
        }
    }
    CommandResult {
        code,
        stdout,
        stderr,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture(name: &str) -> String {
        format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
    }

    fn run_args(args: &[&str]) -> CommandResult {
        let mut v = vec!["ttspc".to_string()];
        v.extend(args.iter().map(|a| {
            if a.ends_with(".tt") || a.ends_with(".sd") || a.ends_with(".fn") {
                fixture(a)
            } else {
                a.to_string()
            }
        }));
        run(v)
    }

    #[test]
    fn validate_codes() {
        assert_eq!(run_args(&["validate", "dvr.tt"]).code, 0);
        assert_eq!(run_args(&["validate", "broken.tt"]).code, 3);
        let r = run_args(&["validate", "badunit.tt"]);
        assert_eq!(r.code, 1);
        assert!(r.stdout.contains("unit law"));
        assert_eq!(run_args(&["validate", "no-such-file.tt"]).code, 3);
    }

    #[test]
    fn spc_outputs() {
        let r = run_args(&["spc", "dvr.tt", "--json"]);
        assert_eq!(r.code, 0);
        let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
        assert_eq!(v["points"].as_array().unwrap().len(), 2);
        assert_eq!(v["specialization"].as_array().unwrap().len(), 1);
        let r = run_args(&["spc", "twopoints.tt", "--dot"]);
        assert_eq!(r.stdout.matches("label=").count(), 2);
        assert_eq!(r.stdout.matches("->").count(), 0);
        assert_eq!(run_args(&["spc", "badunit.tt"]).code, 1);
    }

    #[test]
    fn classify_rows() {
        for (name, rows) in [("dvr.tt", 3), ("stabz3.tt", 2), ("twopoints.tt", 4)] {
            let r = run_args(&["classify", name]);
            assert_eq!(r.code, 0);
            // header, rows, roundtrip, criterion
            assert_eq!(r.stdout.lines().count(), rows + 3, "{}", r.stdout);
        }
    }

    #[test]
    fn support_data_verdicts() {
        let r = run_args(&["support-data", "dvr.tt", "dvr-sierpinski.sd"]);
        assert_eq!(r.code, 0);
        assert!(r.stdout.contains("classifying: yes; homeomorphism: yes"));
        let r = run_args(&["support-data", "dvr.tt", "dvr-onepoint.sd"]);
        assert_eq!(r.code, 0);
        assert!(r.stdout.contains("classifying: no"));
        let r = run_args(&["support-data", "twopoints.tt", "twopoints-sd5.sd"]);
        assert_eq!(r.code, 2);
        assert!(r.stdout.contains("SD5"));
    }

    #[test]
    fn quotient_and_map() {
        let r = run_args(&["quotient", "dvr.tt", "--ideal", "k"]);
        assert_eq!(r.code, 0);
        assert!(r
            .stdout
            .contains("primes ⊇ J: 1; quotient spectrum: 1; correspondence: homeomorphism"));
        let r = run_args(&["quotient", "dvr.tt", "--ideal", "u"]);
        assert_eq!(r.code, 0);
        assert!(r.stderr.contains("saturated to {k,u}"));
        assert!(r.stdout.contains("quotient spectrum: 0"));
        let r = run_args(&["map", "field.tt", "dvr.tt", "f-incl.fn"]);
        assert_eq!(r.code, 0);
        assert_eq!(r.stdout.lines().filter(|l| l.contains("->")).count(), 2);
        assert_eq!(run_args(&["map", "field.tt", "dvr.tt", "f-bad.fn"]).code, 1);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["frobnicate"]).code, 3);
        assert_eq!(run_args(&["ideals", "dvr.tt", "--dot"]).code, 3);
        assert_eq!(run_args(&["--help"]).code, 0);
        let r = run_args(&["validate", "dvr.tt", "--quiet"]);
        assert_eq!(r.code, 0);
        assert!(r.stdout.is_empty());
    }
}
