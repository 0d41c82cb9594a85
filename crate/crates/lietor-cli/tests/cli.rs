//! End-to-end tests of the `lietor` binary: exit codes, output texts, file
//! round trips, and the environment-driven size refusals.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lietor"))
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    bin().current_dir(dir).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

/// Builds a catalog entry into `name.json` inside `dir`.
fn build_entry(dir: &Path, entry: &str, params: &[&str], file: &str) {
    let mut args = vec!["catalog", entry];
    for p in params {
        args.push("-p");
        args.push(p);
    }
    args.push("-o");
    args.push(file);
    let out = run_in(dir, &args);
    assert_eq!(code(&out), 0, "catalog build failed: {}", stderr(&out));
}

#[test]
fn torus_reports_rank_rows_and_separation() {
    let dir = tempfile::tempdir().unwrap();
    build_entry(dir.path(), "heisenberg3", &[], "h.json");
    let out = run_in(dir.path(), &["torus", "h.json"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("weight equations rank 1 over dim 3"), "{text}");
    assert!(text.contains("maximal torus dim s = 2"), "{text}");
    assert!(text.contains("(1, 1, 0)"), "{text}");
    assert!(text.contains("condition A holds: true"), "{text}");
}

#[test]
fn check_rejects_a_broken_jacobi_table() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("bad.json"),
        r#"{
            "name": "bad",
            "dim": 3,
            "brackets": [
                { "left": 1, "right": 2, "terms": [{ "basis": 3, "coeff": "1" }] },
                { "left": 1, "right": 3, "terms": [{ "basis": 1, "coeff": "1" }] },
                { "left": 2, "right": 3, "terms": [{ "basis": 2, "coeff": "1" }] }
            ]
        }"#,
    )
    .unwrap();
    let out = run_in(dir.path(), &["check", "bad.json"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("Jacobi identity fails"), "{}", stdout(&out));
}

#[test]
fn check_reports_series_and_certificate() {
    let dir = tempfile::tempdir().unwrap();
    build_entry(dir.path(), "heisenberg3", &[], "h.json");
    let out = run_in(dir.path(), &["check", "h.json"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("Jacobi identity holds (dim 3)"), "{text}");
    assert!(text.contains("nilpotent: true, solvable: true"), "{text}");

    build_entry(dir.path(), "heisenberg3_ext", &[], "r.json");
    let out = run_in(dir.path(), &["check", "r.json"]);
    assert_eq!(code(&out), 0);
    assert!(
        stdout(&out).contains("nilradical block of dim 3 certified: true"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn malformed_scalars_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("zero_den.json"),
        r#"{
            "name": "zeroden",
            "dim": 2,
            "brackets": [
                { "left": 1, "right": 2, "terms": [{ "basis": 1, "coeff": "1/0" }] }
            ]
        }"#,
    )
    .unwrap();
    let out = run_in(dir.path(), &["check", "zero_den.json"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("error:"), "{}", stderr(&out));
}

#[test]
fn the_cell_limit_refuses_oversized_eliminations() {
    let dir = tempfile::tempdir().unwrap();
    build_entry(dir.path(), "heisenberg3_ext", &[], "r.json");
    let out = bin()
        .current_dir(dir.path())
        .env("LIETOR_MAX_CELLS", "10")
        .args(["cohomology", "r.json", "--degree", "2"])
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("LIETOR_MAX_CELLS"), "{}", stderr(&out));
}

#[test]
fn the_degree_cap_refuses_deep_cochains_on_large_algebras() {
    let dir = tempfile::tempdir().unwrap();
    build_entry(dir.path(), "weightclash11_ext", &[], "big.json");
    let out = run_in(dir.path(), &["cohomology", "big.json", "--degree", "5"]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("instance too large"), "{}", stderr(&out));
}

#[test]
fn vanish_prints_all_five_flags() {
    let dir = tempfile::tempdir().unwrap();
    build_entry(dir.path(), "fano_ext", &[], "f.json");
    let out = run_in(dir.path(), &["vanish", "f.json"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("multiplicity one roots: true"), "{text}");
    assert!(text.contains("no distinct root triple sums to a root: false"), "{text}");
    assert!(text.contains("nilradical is two-step nilpotent: false"), "{text}");
    assert!(text.contains("triple criterion predicts vanishing: false"), "{text}");
    assert!(text.contains("two-step criterion predicts vanishing: false"), "{text}");
}

#[test]
fn basechange_detects_match_and_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    build_entry(dir.path(), "s412", &[], "target.json");
    build_entry(dir.path(), "abelian", &["n=2"], "ab2.json");
    let out = run_in(dir.path(), &["extend", "ab2.json", "-o", "rab2.json"]);
    assert_eq!(code(&out), 0);
    std::fs::write(
        dir.path().join("rotate.json"),
        r#"{ "rows": [
            ["i", "-i", "0", "0"],
            ["1", "1", "0", "0"],
            ["0", "0", "1", "1"],
            ["0", "0", "i", "-i"]
        ] }"#,
    )
    .unwrap();
    let out = run_in(
        dir.path(),
        &["basechange", "rab2.json", "--matrix", "rotate.json", "--target", "target.json"],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("base change matches the target"), "{}", stdout(&out));

    std::fs::write(
        dir.path().join("id.json"),
        r#"{ "rows": [
            ["1", "0", "0", "0"],
            ["0", "1", "0", "0"],
            ["0", "0", "1", "0"],
            ["0", "0", "0", "1"]
        ] }"#,
    )
    .unwrap();
    let out = run_in(
        dir.path(),
        &["basechange", "rab2.json", "--matrix", "id.json", "--target", "target.json"],
    );
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("does NOT match"), "{}", stdout(&out));
}

#[test]
fn extend_writes_a_document_the_other_commands_consume() {
    let dir = tempfile::tempdir().unwrap();
    build_entry(dir.path(), "heisenberg3", &[], "h.json");
    let out = run_in(dir.path(), &["extend", "h.json", "-o", "r.json"]);
    assert_eq!(code(&out), 0);
    assert!(
        stdout(&out).contains("wrote extension of dim 5 (nilradical 3, torus 2)"),
        "{}",
        stdout(&out)
    );

    let out = run_in(dir.path(), &["cohomology", "r.json", "--degree", "1", "--method", "hs"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("dim H^1 = 0 (hs)"), "{}", stdout(&out));

    let out = run_in(dir.path(), &["invariant-cohomology", "r.json", "--degree", "1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("dim H^1(N, R)^Q = 0"), "{}", stdout(&out));

    let out = run_in(dir.path(), &["roots", "r.json"]);
    assert_eq!(code(&out), 0);
    assert!(
        stdout(&out).contains("3 distinct roots over a torus of dim 2"),
        "{}",
        stdout(&out)
    );

    let out = run_in(dir.path(), &["der", "r.json"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("dim Der = 5 (inner 5, outer 0)"), "{}", stdout(&out));
}

#[test]
fn extend_without_out_prints_the_document() {
    let dir = tempfile::tempdir().unwrap();
    build_entry(dir.path(), "heisenberg3", &[], "h.json");
    let out = run_in(dir.path(), &["extend", "h.json"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(doc["dim"], 5);
    assert_eq!(doc["nilradical_dim"], 3);
    assert_eq!(doc["name"], "heisenberg3_ext");
}

#[test]
fn factorized_method_requires_the_split_marker() {
    let dir = tempfile::tempdir().unwrap();
    build_entry(dir.path(), "heisenberg3", &[], "h.json");
    let out = run_in(dir.path(), &["cohomology", "h.json", "--degree", "1", "--method", "hs"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("nilradical_dim"), "{}", stderr(&out));
}

#[test]
fn catalog_lists_entries_and_validates_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let out = run_in(dir.path(), &["catalog"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("heisenberg3"), "{text}");
    assert!(text.contains("borel_sl3"), "{text}");
    assert!(text.contains("fano_ext"), "{text}");

    let out = run_in(dir.path(), &["catalog", "nosuch"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("unknown catalog entry"), "{}", stderr(&out));

    let out = run_in(dir.path(), &["catalog", "q2n", "-p", "n=2"]);
    assert_eq!(code(&out), 2, "{}", stderr(&out));

    let out = run_in(dir.path(), &["catalog", "q2n", "-p", "n=3"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(doc["dim"], 6);
}

#[test]
fn json_reports_carry_the_command_and_results() {
    let dir = tempfile::tempdir().unwrap();
    build_entry(dir.path(), "heisenberg3", &[], "h.json");
    let out = run_in(dir.path(), &["--json", "torus", "h.json"]);
    assert_eq!(code(&out), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(report["command"], "torus");
    assert_eq!(report["exit_code"], 0);
    assert_eq!(report["results"]["torus_dim"], 2);
    assert_eq!(report["results"]["weight_equation_rank"], 1);
    assert_eq!(report["warnings"], serde_json::json!([]));
}
