use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn ttspc(args: &[&str]) -> Output {
    let args: Vec<PathBuf> = args
        .iter()
        .map(|a| {
            if [".tt", ".sd", ".fn"].iter().any(|ext| a.ends_with(ext)) {
                fixture(a)
            } else {
                PathBuf::from(a)
            }
        })
        .collect();
    Command::new(env!("CARGO_BIN_EXE_ttspc"))
        .args(&args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["validate", "field.tt"], 0),
        (&["validate", "badunit.tt"], 1),
        (&["validate", "broken.tt"], 3),
        (&["spc", "missing.tt"], 3),
        (&["ideals", "stabz3.tt"], 0),
        (&["classify", "dual.tt"], 0),
        (&["support-data", "dvr.tt", "dvr-sierpinski.sd"], 0),
        (&["support-data", "dvr.tt", "dvr-notclosed.sd"], 2),
        (&["support-data", "twopoints.tt", "twopoints-sd5.sd"], 2),
        (&["support-data", "dvr.tt", "twopoints-discrete.sd"], 3),
        (&["map", "field.tt", "dvr.tt", "f-incl.fn"], 0),
        (&["map", "field.tt", "dvr.tt", "f-bad.fn"], 1),
        (&["quotient", "dvr.tt", "--ideal", "k"], 0),
        (&["quotient", "dvr.tt", "--ideal", "zz"], 3),
        (&["bogus"], 3),
    ];
    for (args, code) in cases {
        assert_eq!(ttspc(args).status.code(), Some(*code), "{args:?}");
    }
}

#[test]
fn spc_json_counts() {
    for (name, points, edges) in [
        ("field.tt", 1, 0),
        ("twopoints.tt", 2, 0),
        ("dvr.tt", 2, 1),
        ("stabz3.tt", 1, 0),
    ] {
        let o = ttspc(&["--json", "spc", name]);
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["points"].as_array().unwrap().len(), points, "{name}");
        assert_eq!(
            v["specialization"].as_array().unwrap().len(),
            edges,
            "{name}"
        );
    }
}

#[test]
fn dvr_dot_has_one_edge() {
    let dot = stdout(&ttspc(&["spc", "dvr.tt", "--dot"]));
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("->").count(), 1);
}

#[test]
fn quotient_writes_file() {
    let dir = std::env::temp_dir().join(format!("ttspc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("dvr-mod-k.tt");
    let o = ttspc(&[
        "quotient",
        "dvr.tt",
        "--ideal",
        "k",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    let q = ttspc::parse_presentation(&text).unwrap();
    assert_eq!(q.atom_names(), ["u"]);
    let o = ttspc(&["spc", out.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("points: 1\n"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn map_warns_on_mismatched_reference() {
    let o = ttspc(&["map", "field.tt", "twopoints.tt", "f-incl.fn"]);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("dvr.tt"), "{err}");
}

#[test]
fn json_is_valid_everywhere() {
    let runs: &[&[&str]] = &[
        &["--json", "validate", "badunit.tt"],
        &["--json", "ideals", "dvr.tt"],
        &["--json", "classify", "dual.tt"],
        &["--json", "support-data", "dvr.tt", "dvr-onepoint.sd"],
        &["--json", "map", "field.tt", "dvr.tt", "f-incl.fn"],
        &["--json", "quotient", "twopoints.tt", "--ideal", "e"],
    ];
    for args in runs {
        let text = stdout(&ttspc(args));
        serde_json::from_str::<serde_json::Value>(&text)
            .unwrap_or_else(|e| panic!("{args:?}: {e}"));
    }
}

#[test]
fn repeated_runs_are_identical() {
    for args in [
        &["spc", "dvr.tt"][..],
        &["--json", "classify", "twopoints.tt"],
        &["support-data", "twopoints.tt", "twopoints-discrete.sd"],
    ] {
        let a = ttspc(args);
        let b = ttspc(args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.stderr, b.stderr);
    }
}
