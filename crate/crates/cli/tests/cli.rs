use std::path::{Path, PathBuf};
use std::process::Command;

use colorhopf::format;
use colorhopf::xmod::CrossedModule;
use colorhopf::zoo::{self, FiniteGroup};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_colorhopf")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn structured(args: &[&str]) -> (i32, serde_json::Value) {
    let mut a = args.to_vec();
    a.extend(["--format", "structured"]);
    let (code, out) = run(&a);
    (code, serde_json::from_str(&out).unwrap())
}

fn fact<'a>(r: &'a serde_json::Value, key: &str) -> &'a serde_json::Value {
    &r["facts"].as_array().unwrap().iter().find(|f| f["key"] == key).unwrap_or_else(|| panic!("no {key}"))["value"]
}

#[test]
fn verify_shipped_ks3() {
    let (code, out) = run(&["verify", path(&data("kS3.json"))]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("status: PASS"));
}

#[test]
fn commutator_of_ks3_is_ka3() {
    let (code, r) = structured(&["commutator", path(&data("kS3.json"))]);
    assert_eq!(code, 0);
    assert_eq!(fact(&r, "[X,Y] dim"), "3");
    assert_eq!(fact(&r, "[X,Y] basis"), &serde_json::json!(["e", "(123)", "(132)"]));
}

#[test]
fn moore_on_shipped_simplicial_output() {
    let (code, r) = structured(&["moore", path(&data("simplicial-kS3-kA3.json"))]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(fact(&r, "Moore dims"), &serde_json::json!(["6", "3", "1", "1"]));
    assert_eq!(fact(&r, "Moore length"), "1");
}

#[test]
fn parse_errors_exit_two_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\n  \"kind\": \"algebra\",\n  oops\n}").unwrap();
    let (code, out) = run(&["verify", path(&bad)]);
    assert_eq!(code, 2);
    assert!(out.contains("line 3"), "{out}");

    let text = std::fs::read_to_string(data("L-1.json")).unwrap().replace("[1, 2, \"1\"]", "[1, 7, \"1\"]");
    std::fs::write(&bad, text).unwrap();
    let (code, out) = run(&["verify", path(&bad)]);
    assert_eq!(code, 2);
    assert!(out.contains("algebra.mult"), "{out}");

    let (code, _) = run(&["verify", path(&data("L-1.json")), "--field", "gf:2"]);
    assert_eq!(code, 2);
    let (code, out) = run(&["commutator", path(&data("kS3.json")), "--x", "nope"]);
    assert_eq!(code, 2);
    assert!(out.contains("--x"));
    let (code, _) = run(&["xmod-check", path(&data("kS3.json"))]);
    assert_eq!(code, 2);
}

#[test]
fn check_failures_exit_one_with_witness() {
    // (kS3, kS3, uε, conjugation) breaks (cm2)
    let a = zoo::kgroup(&FiniteGroup::s3());
    let x = CrossedModule::identity(&a);
    let bad = x.with_d(a.unit_map().compose(&a.counit_map())).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("x.json");
    std::fs::write(&f, format::to_json(&format::xmod_document(&bad))).unwrap();
    let (code, r) = structured(&["xmod-check", path(&f)]);
    assert_eq!(code, 1);
    assert_eq!(r["status"], "fail");
    let failed: Vec<&serde_json::Value> = r["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).collect();
    assert!(failed.iter().any(|c| c["name"].as_str().unwrap().starts_with("(cm2)")));
    assert!(failed.iter().all(|c| c["witness"]["labels"].as_array().is_some_and(|l| !l.is_empty())));

    // a structure constant nudged in kZ4
    let text = std::fs::read_to_string(data("kZ4.json")).unwrap();
    let text = text.replacen("[1, 1, \"1\"]", "[1, 1, \"2\"]", 1);
    std::fs::write(&f, text).unwrap();
    let (code, out) = run(&["verify", path(&f)]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL"));
}

#[test]
fn zoo_export_matches_shipped_files_and_verifies_deterministically() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _) = run(&["zoo-export", "--out", path(dir.path())]);
    assert_eq!(code, 0);
    let mut names: Vec<String> =
        std::fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().file_name().into_string().unwrap()).collect();
    names.sort();
    assert!(names.len() >= 12);
    for n in &names {
        let fresh = std::fs::read(dir.path().join(n)).unwrap();
        assert_eq!(fresh, std::fs::read(data(n)).unwrap(), "{n} differs from the shipped copy");
        let p = dir.path().join(n);
        let first = run(&["verify", path(&p), "--format", "structured"]);
        let second = run(&["verify", path(&p), "--format", "structured"]);
        assert_eq!(first.0, 0, "{n}: {}", first.1);
        assert_eq!(first, second);
    }
}

#[test]
fn field_override() {
    let (code, r) = structured(&["verify", path(&data("L-1.json")), "--field", "gf:5"]);
    assert_eq!(code, 0);
    assert!(r["command"].as_str().unwrap().ends_with("--field gf:5"));
}

#[test]
fn constructions_write_files_that_load_again() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    let (code, _) = run(&["xmod-to-graph", path(&data("xmod-3-kS3-kA3-incl-conj.json")), "--out", path(&g)]);
    assert_eq!(code, 0);
    let x = dir.path().join("x.json");
    let (code, _) = run(&["graph-to-xmod", path(&g), "--out", path(&x)]);
    assert_eq!(code, 0);
    let (code, _) = run(&["xmod-check", path(&x)]);
    assert_eq!(code, 0);

    let s = dir.path().join("s.json");
    let (code, _) = run(&["smash", path(&data("action-3-kZ2-on-kZ3.json")), "--out", path(&s)]);
    assert_eq!(code, 0);
    let (code, r) = structured(&["nilpotency", path(&s)]);
    assert_eq!(code, 0);
    assert_eq!(fact(&r, "series dims"), &serde_json::json!(["6", "3", "3"]));

    let q = dir.path().join("q.json");
    let (code, _) = run(&["quotient", path(&data("kS3.json")), "--gens", "(123)", "--out", path(&q)]);
    assert_eq!(code, 0);
    let (code, r) = structured(&["verify", path(&q)]);
    assert_eq!(code, 0);
    assert_eq!(fact(&r, "kS3/N dim"), "2");
}

#[test]
fn hall_kernel_and_zassenhaus_verbs() {
    let m = data("morphism-kD4-quotient.json");
    let (code, r) = structured(&["hall", path(&m)]);
    assert_eq!(code, 0);
    assert_eq!(fact(&r, "class(E)"), "2");
    let (code, r) = structured(&["kernel", path(&m)]);
    assert_eq!(code, 0);
    assert_eq!(fact(&r, "Hker basis"), &serde_json::json!(["e", "r^2"]));
    let (code, _) = run(&["zassenhaus", path(&data("kD4.json")), "--u", "r", "--v", "r^2,s", "--k", "r^2", "--l", "s"]);
    assert_eq!(code, 0);
    // (123) and (12) do not commute in kS3
    let (code, r) = structured(&["huq", path(&data("kS3.json")), "--x", "(123)", "--y", "(12)"]);
    assert_eq!(code, 0);
    assert_eq!(fact(&r, "commute"), "false");
}

#[test]
fn simplicial_verbs() {
    let dir = tempfile::tempdir().unwrap();
    let s = dir.path().join("s.json");
    let x = data("xmod-2-L-1-L-1-id.json");
    let (code, r) = structured(&["xmod-to-simplicial", path(&x), "--level", "3", "--out", path(&s)]);
    assert_eq!(code, 0);
    assert_eq!(fact(&r, "level dims"), &serde_json::json!(["2", "4", "8", "16"]));
    let (code, r) = structured(&["decompose", path(&s)]);
    assert_eq!(code, 0, "{r}");
    // the trivial-boundary module has Moore length one too
    let (code, r) = structured(&["moore", path(&data("xmod-7-kZ2-kZ2-u-trivial.json")), "--level", "2"]);
    assert_eq!(code, 0);
    assert_eq!(fact(&r, "Moore dims"), &serde_json::json!(["2", "2", "1"]));
    let (code, _) = run(&["xmod-to-simplicial", path(&x), "--level", "7"]);
    assert_eq!(code, 1);
}
