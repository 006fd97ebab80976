use std::path::PathBuf;

use stabnf::cli::{run, EXIT_MISMATCH, EXIT_OK, EXIT_PARSE, EXIT_USAGE};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn tmp(name: &str, body: &str) -> String {
    let dir = std::env::temp_dir().join(format!("stabnf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.display().to_string()
}

fn cli(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("stabnf").chain(args.iter().copied());
    let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn normalize_prints_the_phase() {
    let (code, out, _) = cli(&["normalize", "--in", &data("hp_cubed.circ"), "--form", "genpzx", "--verify"], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("phase: 1·π/4"), "{out}");
    assert!(out.contains("verify: ok"));
}

#[test]
fn normalize_complete_graph_verifies() {
    let mut body = String::from("qubits 5\n");
    for i in 0..5 {
        body += &format!("H {i}\n");
    }
    for i in 0..5 {
        for j in i + 1..5 {
            body += &format!("CZ {i} {j}\n");
        }
    }
    let f = tmp("k5.circ", &body);
    let (code, out, _) = cli(&["normalize", "--in", &f, "--verify", "--emit", "qasm"], "");
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("OPENQASM"));
}

#[test]
fn normalize_errors() {
    let empty = tmp("empty.circ", "");
    let (code, _, err) = cli(&["normalize", "--in", &empty], "");
    assert_eq!(code, EXIT_PARSE);
    assert!(err.contains("missing qubits header"));

    let (code, _, _) = cli(&["normalize", "--in", &data("hp_cubed.circ"), "--form", "pzx"], "");
    assert_eq!(code, EXIT_USAGE);

    let (code, _, _) = cli(&["normalize", "--in", "/nonexistent/x.circ"], "");
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn normalize_writes_json_to_a_file() {
    let src = tmp("pzx.circ", "qubits 2\nCX 0 1\nP 1\nCZ 0 1\n");
    let dst = std::env::temp_dir().join(format!("stabnf-cli-{}", std::process::id())).join("out.json");
    let (code, _, _) =
        cli(&["normalize", "--in", &src, "--form", "pzx", "--emit", "json", "--out", &dst.display().to_string()], "");
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(dst).unwrap()).unwrap();
    assert!(v.get("form").is_some() && v.get("circuit").is_some());
}

#[test]
fn graph_reduce_reports_counts() {
    let (code, out, _) = cli(&["graph", "reduce", "--edges", "0-1,0-2,0-3,0-4,1-2,1-3,1-4,2-3,2-4,3-4"], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("10 -> 8"), "{out}");
    let (code, _, _) = cli(&["graph", "reduce", "--edges", "0-0"], "");
    assert_eq!(code, EXIT_PARSE);
}

#[test]
fn synth_from_matrix_file() {
    let (code, out, _) = cli(&["synth", "--matrix", &data("bidiagonal.mat"), "--method", "optimal"], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("cnots: 3"), "{out}");
    let bad = tmp("bad.mat", "2\n1x\n01\n");
    assert_eq!(cli(&["synth", "--matrix", &bad], "").0, EXIT_PARSE);
}

#[test]
fn verify_exit_codes() {
    let swap = tmp("swap.circ", "qubits 2\nSWAP 0 1\n");
    let cx3 = tmp("cx3.circ", "qubits 2\nCX 0 1\nCX 1 0\nCX 0 1\n");
    let cz = tmp("cz.circ", "qubits 2\nCZ 0 1\n");
    let id = tmp("id.circ", "qubits 2\n");
    assert_eq!(cli(&["verify", &swap, &cx3], "").0, EXIT_OK);
    assert_eq!(cli(&["verify", &cz, &id], "").0, EXIT_MISMATCH);
    assert_eq!(cli(&["verify", &cz, &id, "--state"], "").0, EXIT_OK);
    let (code, out, _) = cli(&["verify", &data("hp_cubed.circ"), &tmp("id1.circ", "qubits 1\n")], "");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("1·π/4"));
}

#[test]
fn stats_is_deterministic() {
    let args = ["stats", "--qubits", "5", "--edges", "10", "--samples", "50", "--seed", "3"];
    let (code, a, _) = cli(&args, "");
    assert_eq!(code, EXIT_OK);
    assert_eq!(a, cli(&args, "").1);
    assert!(a.starts_with("n,edges,samples,mean_gain_pct,stddev,min,max,seed\n5,10,50,20.00"), "{a}");
    assert_eq!(cli(&["stats", "--qubits", "20", "--edges", "19", "--samples", "20"], "").1.lines().nth(1).unwrap().split(',').nth(3), Some("0.00"));
    assert_eq!(cli(&["stats", "--qubits", "5", "--edges", "11"], "").0, EXIT_USAGE);
    assert_eq!(cli(&["stats", "--qubits", "101", "--edges", "3"], "").0, EXIT_USAGE);
    assert!(cli(&["stats", "--qubits", "5", "--density", "0.6", "--format", "md", "--samples", "4"], "").1.starts_with("| n |"));
}

#[test]
fn repl_session() {
    let (code, out, _) = cli(&["repl", "--qubits", "1"], "H 0\nP 0\nH 0\nP 0\nH 0\nP 0\nfinish\nquit\n");
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("phase: 1·π/4"), "{out}");
}

#[test]
fn repl_matches_batch_normalization() {
    let script = "H 0\nCX 1 0\nP 1\nY 2\nundo\nCZ 1 2\nH 2\n";
    let mut repl = stabnf::cli::Repl::new(3);
    for line in script.lines() {
        repl.handle(line);
    }
    let batch = stabnf::Circuit::parse("qubits 3\nH 0\nCX 1 0\nP 1\nCZ 1 2\nH 2\n").unwrap();
    assert_eq!(*repl.form(), stabnf::genpzx::c_to_intermediate(&batch).unwrap());
}

#[test]
fn usage_errors_and_help() {
    assert_eq!(cli(&["frobnicate"], "").0, EXIT_USAGE);
    assert_eq!(cli(&["--help"], "").0, EXIT_OK);
}
