use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hopfgal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopfgal")).args(args).env_remove("HOPFGAL_THREADS").output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn save(dir: &Path, name: &str, out: &Output) -> String {
    let p = dir.join(name);
    std::fs::write(&p, &out.stdout).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn suite_passes_and_writes_a_stable_report() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let out = hopfgal(&["suite", "--json", a.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 10);
    let out = Command::new(env!("CARGO_BIN_EXE_hopfgal"))
        .args(["suite", "--json", b.to_str().unwrap()])
        .env("HOPFGAL_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let doc: Value = serde_json::from_slice(&std::fs::read(&a).unwrap()).unwrap();
    assert_eq!(doc["status"], "pass");
    assert_eq!(doc["criteria"].as_array().unwrap().len(), 10);
}

#[test]
fn suite_filter() {
    let out = hopfgal(&["suite", "--filter", "taft*"]);
    assert_eq!(out.status.code(), Some(0));
    let names: Vec<String> = String::from_utf8_lossy(&out.stdout)
        .lines()
        .filter_map(|l| l.split_whitespace().nth(1).map(str::to_string))
        .collect();
    assert_eq!(names, ["taft-galois-sweep", "taft-cotensor"]);
    assert_eq!(hopfgal(&["suite", "--filter", "zzz"]).status.code(), Some(2));
    assert_eq!(hopfgal(&["suite", "--filter", "["]).status.code(), Some(2));
}

#[test]
fn corrupted_table_exits_1_with_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let j = dir.path().join("r.json");
    let out = hopfgal(&["suite", "--filter", "axioms", "--corrupt", "--json", j.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("associativity"), "{text}");
    let doc: Value = serde_json::from_slice(&std::fs::read(&j).unwrap()).unwrap();
    let checks = doc["criteria"][0]["report"]["checks"].as_array().unwrap();
    let bad = checks.iter().find(|c| c["status"] == "fail").unwrap();
    assert!(bad["witness"].as_str().unwrap().contains("gx^2"));
}

#[test]
fn examples_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&[&str], &str, usize)] = &[
        (&["group-algebra", "--group", "2x2"], "hopf", 4),
        (&["twisted-group-algebra", "--group", "3"], "comodule", 3),
        (&["h2", "--group", "2x2", "--field", "p5"], "cocycle", 0),
        (&["taft", "--N", "3", "--q", "2", "--field", "p7"], "hopf", 9),
        (&["taft", "--N", "4", "--field", "cyc4"], "hopf", 16),
        (&["taft-galois", "--r", "3", "--s", "5"], "comodule", 9),
        (&["kgn-galois", "--N", "2", "--r", "2", "--field", "p5"], "comodule", 2),
        (&["borel"], "pairing", 0),
        (&["uq-sl2", "--N", "3", "--field", "p7", "--lambda", "2"], "hopf", 27),
    ];
    for (i, (args, mode, dim)) in cases.iter().enumerate() {
        let mut full = vec!["example"];
        full.extend_from_slice(args);
        let out = hopfgal(&full);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let doc = json_of(&out);
        assert_eq!(doc["mode"], *mode);
        assert_eq!(doc["status"], "pass");
        if *dim > 0 {
            assert_eq!(doc["object"]["basis"].as_array().unwrap().len(), *dim, "{args:?}");
        }
        let file = save(dir.path(), &format!("{i}.json"), &out);
        let v = hopfgal(&["verify", &file, "--mode", mode]);
        assert_eq!(v.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&v.stdout));
        assert_eq!(json_of(&v)["status"], "pass");
    }
}

#[test]
fn report_only_examples() {
    let out = hopfgal(&["example", "classify-kgn", "--N", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["classes"].as_array().unwrap().len(), 3);
    let out = hopfgal(&["example", "schanuel"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json_of(&out);
    assert_eq!(doc["matrix"].as_array().unwrap().len(), 2);
    assert_eq!(hopfgal(&["example", "schanuel", "--field", "p3"]).status.code(), Some(2));
}

#[test]
fn example_errors() {
    assert_eq!(hopfgal(&["example", "nope"]).status.code(), Some(2));
    assert_eq!(hopfgal(&["example", "taft", "--q", "3"]).status.code(), Some(2));
    assert_eq!(hopfgal(&["example", "taft", "--field", "p6"]).status.code(), Some(2));
    assert_eq!(hopfgal(&["example", "kgn-galois", "--r", "0"]).status.code(), Some(2));
}

#[test]
fn witness_verification() {
    let dir = tempfile::tempdir().unwrap();
    let w = save(dir.path(), "w.json", &hopfgal(&["example", "taft-witness", "--r", "3", "--s", "5"]));
    let a0 = save(dir.path(), "a0.json", &hopfgal(&["example", "taft-galois", "--r", "3", "--s", "0"]));
    let a1 = save(dir.path(), "a1.json", &hopfgal(&["example", "taft-galois", "--r", "3", "--s", "5"]));
    let a4 = save(dir.path(), "a4.json", &hopfgal(&["example", "taft-galois", "--r", "4", "--s", "0"]));
    let run = |e0: &str, e1: &str| hopfgal(&["verify", &w, "--mode", "witness", "--endpoint0", e0, "--endpoint1", e1]);
    assert_eq!(run(&a0, &a1).status.code(), Some(0));
    // 4/3 is a cube in 𝔽₇, so A_{4,0} ≅ A_{3,0}
    assert_eq!(run(&a4, &a1).status.code(), Some(0));
    let swapped = run(&a1, &a0);
    assert_eq!(swapped.status.code(), Some(1));
    assert_eq!(json_of(&swapped)["status"], "fail");
    assert_eq!(hopfgal(&["verify", &w, "--mode", "witness"]).status.code(), Some(2));
}

#[test]
fn verify_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("broken.json");
    std::fs::write(&p, "{\"field\": ").unwrap();
    let out = hopfgal(&["verify", p.to_str().unwrap(), "--mode", "hopf"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("broken.json:1:"));

    let h = hopfgal(&["example", "taft"]);
    let mut doc = json_of(&h);
    doc["object"]["mult"][0][2][0][0] = 99.into();
    std::fs::write(&p, doc.to_string()).unwrap();
    let out = hopfgal(&["verify", p.to_str().unwrap(), "--mode", "hopf"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("$.mult[0][2][0][0]"));
}

#[test]
fn verify_detects_broken_objects() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("h.json");
    let mut doc = json_of(&hopfgal(&["example", "h2", "--group", "3"]));
    doc["object"]["values"][0][1] = "3".into();
    std::fs::write(&p, doc.to_string()).unwrap();
    let out = hopfgal(&["verify", p.to_str().unwrap(), "--mode", "cocycle"]);
    assert_eq!(out.status.code(), Some(1));
    let rep = json_of(&out);
    let bad = rep["report"]["checks"].as_array().unwrap().iter().find(|c| c["status"] == "fail").unwrap().clone();
    assert_eq!(bad["name"], "normalized");

    let mut doc = json_of(&hopfgal(&["example", "taft"]));
    let counit = doc["object"]["counit"].as_array_mut().unwrap();
    counit.push(serde_json::json!([1, "1"]));
    std::fs::write(&p, doc.to_string()).unwrap();
    assert_eq!(hopfgal(&["verify", p.to_str().unwrap(), "--mode", "hopf"]).status.code(), Some(1));
}

#[test]
fn hopf_by_path() {
    let dir = tempfile::tempdir().unwrap();
    let h = json_of(&hopfgal(&["example", "taft"]));
    std::fs::write(dir.path().join("h9.json"), h["object"].to_string()).unwrap();
    let mut a = json_of(&hopfgal(&["example", "taft-galois", "--r", "2", "--s", "1"]));
    a["object"]["hopf"] = "h9.json".into();
    let p = dir.path().join("a.json");
    std::fs::write(&p, a["object"].to_string()).unwrap();
    let out = hopfgal(&["verify", p.to_str().unwrap(), "--mode", "comodule"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn bad_thread_count() {
    let out = Command::new(env!("CARGO_BIN_EXE_hopfgal"))
        .args(["suite", "--filter", "schanuel"])
        .env("HOPFGAL_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
