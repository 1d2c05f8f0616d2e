use std::path::PathBuf;
use std::process::{Command, Output};

use ringlab::report::{run_fields_removed, CheckReport, ExploreDocument, SuiteDocument, TableDocument};

fn ringlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringlab")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn corpus_file(name: &str, body: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("ringlab-{}-{name}", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn check_exit_codes() {
    assert_eq!(code(&ringlab(&["check", "--ring", "ex22(2)", "--property", "weakly-reversible"])), 0);

    let out = ringlab(&["check", "--ring", "M2(Z2)", "--property", "mccoy-right", "--max-degree", "1"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("mccoy"), "{}", stdout(&out));

    let out = ringlab(&["check", "--ring", "Z8", "--property", "reduced", "--json"]);
    assert_eq!(code(&out), 1);
    let doc: CheckReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(!doc.verdict);
    assert_eq!(doc.labels.get(&4).map(String::as_str), Some("4"));
    assert_eq!(serde_json::to_string_pretty(&doc).unwrap().trim(), stdout(&out).trim());
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(code(&ringlab(&["check", "--ring", "M2(Z2", "--property", "reduced"])), 2);
    assert_eq!(code(&ringlab(&["check", "--ring", "Z8", "--property", "bogus"])), 2);
    assert_eq!(code(&ringlab(&["check", "--ring", "M3(Z5)", "--property", "reduced"])), 2);
    assert_eq!(code(&ringlab(&["frobnicate"])), 2);

    let path = corpus_file("bad", "Z4\n# fine\nS2(Z2\n");
    let out = ringlab(&["suite", "--corpus", path.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn suite_json_is_deterministic() {
    let path = corpus_file("small", "Z4\nM2(Z2)  # not weakly reversible\nS2(Z2)\n");
    let run = || {
        let out = ringlab(&["suite", "--json", "--corpus", path.to_str().unwrap()]);
        assert_eq!(code(&out), 0);
        stdout(&out)
    };
    let (a, b) = (run(), run());
    let doc: SuiteDocument = serde_json::from_str(&a).unwrap();
    assert_eq!(doc.rings, vec!["Z4", "M2(Z2)", "S2(Z2)"]);
    assert_eq!(doc.matrix.len(), 18 * 3);
    let strip = |s: &str| run_fields_removed(serde_json::from_str(s).unwrap());
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn explore_and_table() {
    let path = corpus_file("explore", "Z4\nex22(2)\n");
    let out = ringlab(&["explore", "--json", "--corpus", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let doc: ExploreDocument = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.exploration.candidates, vec!["ex22(2)"]);
    assert!(!doc.exploration.resolved);

    let out = ringlab(&["table", "--ring", "Z2 x Z2", "--json"]);
    assert_eq!(code(&out), 0);
    let doc: TableDocument = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.size, 4);
    assert_eq!(doc.mul[doc.one], (0..4).collect::<Vec<_>>());
}
