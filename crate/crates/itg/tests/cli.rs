use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use itg::cli::format_float;
use itg::formats::{parse_graph6, to_graph6};
use itg::report::{run_corpus, RunOptions, VerificationReport};
use itg_core::families::{complete, lollipop};
use itg_core::spectral::{char_poly, incidence_energy, signless_laplacian};
use itg_core::transforms::{iterate, DEFAULT_MAX_VERTICES};
use itg_core::verify::{connected_graphs_up_to, Params, TheoremId};
use itg_core::{Family, Operator};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn itg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_itg"))
        .args(args)
        .current_dir(root())
        .env_remove("ITG_MAX_VERTICES")
        .output()
        .expect("binary runs")
}

fn itg_stdin(args: &[&str], input: &str) -> Output {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_itg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn diameter_of_lollipop() {
    let o = itg(&["diameter", "--family", "lol:8,4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "6\n");
    assert_eq!(lollipop(8, 4).unwrap().diameter(), Some(6));
}

#[test]
fn energy_of_triangle() {
    let o = itg(&["energy", "--family", "k:3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "4.0\n");
}

#[test]
fn cospectral_seed_pair() {
    let o = itg(&[
        "cospectral",
        "--a",
        "data/cospectral/shrikhande.g6",
        "--b",
        "data/cospectral/rook44.g6",
        "--op",
        "total",
        "--k",
        "1",
    ]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cospectral"], true);
    assert_eq!(v["isomorphic"], false);
    assert_eq!(v["order"], serde_json::json!([64, 64]));
}

#[test]
fn non_cospectral_pair_is_negative() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.g6"), dir.path().join("b.g6"));
    std::fs::write(&a, "Bw\n").unwrap();
    std::fs::write(&b, "Bg\n").unwrap();
    let o = itg(&[
        "cospectral",
        "--a",
        a.to_str().unwrap(),
        "--b",
        b.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["cospectral"], false);
}

#[test]
fn energy_matches_library() {
    for spec in ["k:3", "c:5", "lol:8,4", "f4:4", "s:6"] {
        let g = spec.parse::<Family>().unwrap().build().unwrap();
        let o = itg(&["energy", "--family", spec]);
        assert_eq!(
            stdout(&o).trim(),
            format_float(incidence_energy(&g)),
            "{spec}"
        );
        let o = itg(&["energy", "--family", spec, "--op", "total", "--k", "1"]);
        let t = iterate(&g, Operator::Total, 1, DEFAULT_MAX_VERTICES)
            .unwrap()
            .graph;
        assert_eq!(
            stdout(&o).trim(),
            format_float(incidence_energy(&t)),
            "{spec}"
        );
    }
}

#[test]
fn transform_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("t.g6");
    let o = itg(&[
        "transform",
        "--op",
        "total",
        "--k",
        "2",
        "--family",
        "c:5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(&out).unwrap();
    let g = "c:5".parse::<Family>().unwrap().build().unwrap();
    let t = iterate(&g, Operator::Total, 2, DEFAULT_MAX_VERTICES)
        .unwrap()
        .graph;
    assert_eq!(written, to_graph6(&t).unwrap() + "\n");
    assert_eq!(parse_graph6(&written).unwrap(), t);
    assert_eq!((t.order(), t.is_regular()), (30, Some(8)));
}

#[test]
fn stdin_input_in_both_formats() {
    let o = itg_stdin(&["transform", "--op", "total"], "A_\n");
    assert_eq!(stdout(&o), "Bw\n");
    let o = itg_stdin(&["diameter"], "3 2\n0 1\n1 2\n");
    assert_eq!(stdout(&o), "2\n");
    let o = itg_stdin(&["diameter"], "Bw\nBg\nA?\n");
    assert_eq!(stdout(&o), "1\n2\ninf\n");
}

#[test]
fn spectrum_exact_and_float() {
    let o = itg(&["spectrum", "--family", "k:3", "--matrix", "q", "--exact"]);
    let q = signless_laplacian(&complete(3).unwrap());
    assert_eq!(
        stdout(&o),
        format!("charpoly {}\n4.0 1\n1.0 2\n", char_poly(&q))
    );
    let o = itg(&["spectrum", "--family", "c:4"]);
    assert_eq!(stdout(&o), "2.0 1\n0.0 2\n-2.0 1\n");
}

#[test]
fn contains_exit_codes() {
    let o = itg(&[
        "contains",
        "--induced",
        "--pattern",
        "f1:2",
        "--family",
        "c:5",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("found "));
    let o = itg(&[
        "contains",
        "--induced",
        "--pattern",
        "f2:3",
        "--family",
        "f1:5",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "not found\n");
}

#[test]
fn bounds_verbs() {
    let o = itg(&["bounds", "--op", "total", "--n", "2", "--r", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "op total\nk 0\norder 2\ndegree 1\nlower 4.0\nupper 5.0\n"
    );
    let o = itg(&["bounds", "--family", "k:3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).ends_with("energy 11.65685425\n"),
        "{}",
        stdout(&o)
    );
    let o = itg(&["bounds", "--op", "line", "--n", "2", "--r", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
    let o = itg(&["bounds", "--op", "line", "--family", "k:4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = itg(&["bounds", "--family", "p:4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_report_matches_runner() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let o = itg(&[
        "verify",
        "--theorem",
        "T2_3",
        "--corpus",
        "gen:6",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "PASS T2_3 corpus=gen:6 checked=143 skipped=0 failures=0\n"
    );
    let got: VerificationReport =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let graphs = connected_graphs_up_to(6).unwrap();
    let want = run_corpus(
        TheoremId::T2_3,
        "gen:6",
        &graphs,
        &Params::default(),
        RunOptions::default(),
    );
    assert_eq!(
        VerificationReport {
            elapsed_ms: 0,
            ..got
        },
        VerificationReport {
            elapsed_ms: 0,
            ..want
        }
    );
}

#[test]
fn verify_failures_exit_one_with_payloads() {
    let o = itg(&[
        "verify",
        "--theorem",
        "T2_7",
        "--k",
        "4",
        "--r",
        "1",
        "--corpus",
        "gen:5",
        "--report",
        "-",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failures = v["failures"].as_array().unwrap();
    assert!(!failures.is_empty());
    for f in failures {
        let g = parse_graph6(f["graph6"].as_str().unwrap()).unwrap();
        assert!(g.is_connected());
        assert_eq!(f["params"], "k=4,r=1");
        assert!(f["detail"].as_str().unwrap().contains("diam(T^2)"));
    }
    for key in ["theorem", "corpus", "checked", "skipped", "elapsed_ms"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn iterate_cap_from_environment() {
    let o = itg(&["transform", "--family", "k:4", "--op", "total", "--k", "5"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("91000") && err.contains("20000"), "{err}");
    let o = Command::new(env!("CARGO_BIN_EXE_itg"))
        .args(["diameter", "--family", "k:4", "--op", "total", "--k", "3"])
        .env("ITG_MAX_VERTICES", "100")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("280 vertices, above the cap of 100"));
}

#[test]
fn usage_and_input_errors() {
    assert_eq!(itg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        itg(&["diameter", "--family", "zz:3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        itg(&["diameter", "--family", "k:3", "--in", "x.g6"])
            .status
            .code(),
        Some(2)
    );
    let o = itg(&["diameter", "--in", "/nonexistent/graph.g6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    let o = itg_stdin(&["diameter"], "B!\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 1"));
    assert_eq!(itg(&["verify", "--theorem", "T9_9"]).status.code(), Some(2));
    assert_eq!(itg(&["--help"]).status.code(), Some(0));
}

#[test]
fn family_output() {
    let o = itg(&["family", "k:3"]);
    assert_eq!(stdout(&o), "Bw\n");
    let o = itg(&["family", "p:3", "--format", "edges"]);
    assert_eq!(stdout(&o), "3 2\n0 1\n1 2\n");
}

#[test]
fn in_process_runner_agrees_with_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = itg::cli::run(
        ["itg", "diameter", "--family", "f4:5"],
        &mut std::io::empty(),
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);
    assert_eq!(
        String::from_utf8(out).unwrap(),
        stdout(&itg(&["diameter", "--family", "f4:5"]))
    );
}
