use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn rphp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rphp")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("stdout is not JSON ({e}): {}", String::from_utf8_lossy(&out.stdout))
    })
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn write_builtin(dir: &Path, id: &str) -> String {
    let out = rphp(&["family", "builtin", id]);
    assert_eq!(code(&out), 0);
    let path = dir.join(format!("{id}.json"));
    std::fs::write(&path, &out.stdout).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn family_verify_builtin_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_builtin(dir.path(), "nine-4-6");
    let out = rphp(&["family", "verify", &path]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["size"], 6);

    let bad = dir.path().join("shared.json");
    std::fs::write(&bad, r#"{"m":4,"n":2,"functions":[[0,0,1,1],[0,0,1,1]]}"#).unwrap();
    let out = rphp(&["family", "verify", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["shared"]["pair"], serde_json::json!([0, 1]));
}

#[test]
fn malformed_input_exits_2_with_json() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"m\": 3").unwrap();
    let out = rphp(&["family", "verify", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["error"], "malformed-input");
    let out = rphp(&["family", "verify", "/definitely/missing.json"]);
    assert_eq!((code(&out), json(&out)["error"].clone()), (2, "io".into()));
    let out = rphp(&["reduce", "decide", "--from", "php:2,5", "--to", "id:3"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn reduce_decide_separation() {
    let out = rphp(&["reduce", "decide", "--from", "php:5,2", "--to", "php:6,2"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["decision"], "no");

    let dir = tempfile::tempdir().unwrap();
    let w = dir.path().join("w.json");
    let out = rphp(&[
        "reduce", "decide", "--from", "php:6,2", "--to", "php:5,2", "--witness-out", w.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["witnessVerified"], true);
    let out = rphp(&["reduce", "verify", "--from", "php:6,2", "--to", "php:5,2", w.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let out = rphp(&["reduce", "verify", "--from", "php:5,2", "--to", "php:6,2", w.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
}

#[test]
fn tiny_budget_exits_2() {
    let out = rphp(&["--budget-nodes", "10", "reduce", "decide", "--from", "php:5,3", "--to", "php:6,3"]);
    assert_eq!(code(&out), 2);
    assert_eq!(json(&out)["decision"], "budget-exhausted");
}

#[test]
fn bound_values() {
    let out = rphp(&["bound", "-m", "10", "-n", "4"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!((v["minSolutions"].clone(), v["maxKUpper"].clone()), (8.into(), 5.into()));
}

#[test]
fn design_and_bridge_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let mols = dir.path().join("mols.json");
    let out = rphp(&["design", "mols", "--order", "4"]);
    assert_eq!(code(&out), 0);
    std::fs::write(&mols, &out.stdout).unwrap();
    let fam = dir.path().join("fam.json");
    let out = rphp(&["bridge", "mols-to-family", mols.to_str().unwrap()]);
    std::fs::write(&fam, &out.stdout).unwrap();
    let out = rphp(&["family", "verify", fam.to_str().unwrap()]);
    assert_eq!((code(&out), json(&out)["size"].clone()), (0, 5.into()));

    let ktr = dir.path().join("ktr.json");
    let out = rphp(&["design", "ktr", "--order", "15"]);
    std::fs::write(&ktr, &out.stdout).unwrap();
    assert_eq!(code(&rphp(&["design", "verify", ktr.to_str().unwrap()])), 0);
    let out = rphp(&["bridge", "rbibd-to-family", ktr.to_str().unwrap()]);
    let v = json(&out);
    assert_eq!(v["functions"].as_array().unwrap().len(), 7);

    let out = rphp(&["design", "factorize", "-m", "7", "--kind", "hamiltonian"]);
    assert_eq!(json(&out)["classes"].as_array().unwrap().len(), 3);
    assert_eq!(code(&rphp(&["design", "plane", "--order", "6"])), 2);
}

#[test]
fn product_and_jump_checks() {
    let dir = tempfile::tempdir().unwrap();
    let warm = write_builtin(dir.path(), "warmup-4-2-3");
    let auc = dir.path().join("auc.json");
    let out = rphp(&["bridge", "product", &warm]);
    assert_eq!(code(&out), 0);
    std::fs::write(&auc, &out.stdout).unwrap();
    let out = rphp(&["jump", "check-auc", auc.to_str().unwrap()]);
    assert_eq!((code(&out), json(&out)["k"].clone()), (0, 3.into()));

    let acc = dir.path().join("acc.json");
    std::fs::write(&acc, r#"{"m":4,"n":2,"functions":[[0,0,1,1],[0,1,0,1],[0,1,1,0]]}"#).unwrap();
    assert_eq!(code(&rphp(&["jump", "check-acc", acc.to_str().unwrap()])), 0);
    std::fs::write(&acc, r#"{"m":4,"n":2,"functions":[[0,0,1,1],[0,0,0,1],[0,0,1,0]]}"#).unwrap();
    assert_eq!(code(&rphp(&["jump", "check-acc", acc.to_str().unwrap()])), 1);

    assert_eq!(code(&rphp(&["jump", "check-ck", "--stored"])), 0);
    let out = rphp(&["jump", "scan", "--kind", "auc", "-n", "2", "-k", "4"]);
    assert_eq!((code(&out), json(&out)["decision"].clone()), (1, "no".into()));
    let out = rphp(&["jump", "scan", "--kind", "auc", "-n", "2", "-k", "3"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn padding_bridge() {
    let out = rphp(&["bridge", "padding", "-m", "3", "-n", "2", "-q", "1", "-r", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["forward"].as_object().unwrap().len(), 8);
    let dir = tempfile::tempdir().unwrap();
    let warm = write_builtin(dir.path(), "warmup-4-2-3");
    let out = rphp(&["bridge", "padding", "-m", "4", "-n", "2", "-q", "2", "--family", &warm]);
    let v = json(&out);
    assert_eq!((v["m"].clone(), v["n"].clone()), (8.into(), 4.into()));
}

#[test]
fn atlas_build_cache_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("atlas.json");
    let dot = dir.path().join("atlas.dot");
    let args = [
        "atlas", "build", "--max-n", "3", "--cache", cache.to_str().unwrap(), "--dot", dot.to_str().unwrap(),
    ];
    let first = rphp(&args);
    assert_eq!(code(&first), 0);
    let cached = std::fs::read(&cache).unwrap();
    assert_eq!(cached, first.stdout);
    let second = rphp(&args);
    assert_eq!(second.stdout, first.stdout);
    assert_eq!(std::fs::read(&cache).unwrap(), cached);
    let v = json(&first);
    let e = v["entries"].as_array().unwrap().iter().find(|e| e["m"] == 9 && e["n"] == 3).unwrap();
    assert_eq!((e["maxK"].clone(), e["status"].clone()), (4.into(), "bounds-matched".into()));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph atlas {") && text.contains("\"(4,3)\" -> \"(9,3)\""));

    let out = rphp(&["atlas", "dot", "--max-n", "3", "--strict-only"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains("\"(3,2)\" -> \"(4,2)\""));

    let out = rphp(&["atlas", "dot", "--jump-levels", "-n", "2", "--ms", "8,9"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("no ACC_2") && text.contains("\"m8\" -> \"m9\""));
}
