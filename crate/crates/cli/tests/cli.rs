use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fig1() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/fig1.edges")
}

fn dicon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dicon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn fig1_2d_blocks_by_dominators() {
    let out = json(&dicon(&[
        "blocks",
        fig1().to_str().unwrap(),
        "--kind",
        "2d",
        "--algo",
        "dom",
    ]));
    assert_eq!(
        out["result"]["blocks"],
        serde_json::json!([[1, 2, 3, 6], [4, 6, 8, 10]])
    );
    assert_eq!(out["input"]["n"], 12);
}

#[test]
fn cycle_has_no_2s_blocks() {
    let dir = tempfile::tempdir().unwrap();
    let c3 = write(&dir, "c3.edges", "3 3\n0 1\n1 2\n2 0\n");
    let out = json(&dicon(&[
        "blocks",
        c3.to_str().unwrap(),
        "--kind",
        "2s",
        "--algo",
        "enum",
    ]));
    assert_eq!(out["result"]["blocks"], serde_json::json!([]));
}

#[test]
fn generated_graph_passes_oracle_check() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.edges");
    let gen = dicon(&[
        "gen",
        "8",
        "20",
        "--seed",
        "7",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(gen.status.success());
    let out = json(&dicon(&["oracle-check", path.to_str().unwrap()]));
    assert_eq!(out["result"]["all_equal"], true);
    let checks = out["result"]["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["equal"] == true));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("missing.edges");
    assert_eq!(
        dicon(&["analyze", missing.to_str().unwrap()]).status.code(),
        Some(2)
    );

    let bad = write(&dir, "bad.edges", "2 1\n0 x\n");
    let out = dicon(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let fig1 = fig1();
    let out = dicon(&["blocks-at", fig1.to_str().unwrap(), "99", "--kind", "2d"]);
    assert_eq!(out.status.code(), Some(3));

    let path = write(&dir, "path.edges", "3 2\n0 1\n1 2\n");
    let out = dicon(&["mscss", path.to_str().unwrap(), "--preserve", "saps"]);
    assert_eq!(out.status.code(), Some(3));

    let big = write(&dir, "big.edges", "13 1\n0 1\n");
    assert_eq!(
        dicon(&["oracle-check", big.to_str().unwrap()])
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn dominators_and_enumeration_report_the_same() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.edges");
    dicon(&[
        "gen",
        "40",
        "120",
        "--seed",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    for file in [path.clone(), fig1()] {
        for kind in ["2d", "2s", "2e"] {
            let run = |algo| {
                let mut v = json(&dicon(&[
                    "blocks",
                    file.to_str().unwrap(),
                    "--kind",
                    kind,
                    "--algo",
                    algo,
                ]));
                v.as_object_mut().unwrap().remove("timing_ms");
                v["result"].as_object_mut().unwrap().remove("algo");
                v
            };
            assert_eq!(run("dom"), run("enum"), "{kind} on {}", file.display());
        }
    }
}

#[test]
fn output_without_timing_is_reproducible() {
    let file = fig1();
    for args in [
        vec!["--no-timing", "analyze", file.to_str().unwrap()],
        vec![
            "--no-timing",
            "mscss",
            file.to_str().unwrap(),
            "--preserve",
            "2d",
        ],
        vec![
            "--no-timing",
            "--format",
            "text",
            "blocks",
            file.to_str().unwrap(),
            "--kind",
            "2e",
        ],
    ] {
        let a = dicon(&args);
        let b = dicon(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
        assert!(!String::from_utf8_lossy(&a.stdout).contains("timing"));
    }
}

#[test]
fn gen_output_parses_back() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.edges");
    let out = dicon(&[
        "gen",
        "25",
        "70",
        "--seed",
        "11",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let file = dicon_cli::GraphFile::parse(&text).unwrap();
    let direct = dicon::random_strongly_connected(25, 70, 11).unwrap();
    assert_eq!(file.graph.n(), 25);
    let labeled: std::collections::BTreeSet<(u64, u64)> =
        file.label_edges(file.graph.edges()).into_iter().collect();
    let expected: std::collections::BTreeSet<(u64, u64)> = direct
        .edges()
        .iter()
        .map(|&(a, b)| (a as u64, b as u64))
        .collect();
    assert_eq!(labeled, expected);

    let stdout = dicon(&["gen", "25", "70", "--seed", "11"]);
    assert_eq!(String::from_utf8(stdout.stdout).unwrap(), text);
}

#[test]
fn text_format_uses_labels() {
    let out = dicon(&[
        "--no-timing",
        "--format",
        "text",
        "blocks-at",
        fig1().to_str().unwrap(),
        "6",
        "--kind",
        "2d",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.contains("{1 2 3 6}") && text.contains("{4 6 8 10}"),
        "{text}"
    );
}
