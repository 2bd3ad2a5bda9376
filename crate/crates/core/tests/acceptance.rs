use std::time::Duration;

use hopfgal::report::Status;
use hopfgal::suite::{run, run_all, select, SuiteOptions, CRITERIA};

/// Wall-clock budgets per criterion.
fn budget(name: &str) -> Duration {
    Duration::from_secs(match name {
        "axioms" => 60,
        "taft-galois-sweep" => 30,
        "homotopy" => 120,
        "schanuel" => 1,
        _ => 300,
    })
}

#[test]
fn acceptance() {
    let opts = SuiteOptions::default();
    let mut failed = Vec::new();
    for (i, c) in CRITERIA.iter().enumerate() {
        let r = run(c, &opts);
        let within = r.elapsed <= budget(c.name);
        let ok = r.status == Status::Pass && within;
        println!(
            "{} criterion {} [{}] {} ({:.2?})",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            c.name,
            c.title,
            r.elapsed
        );
        if !ok {
            let why = match r.report.first_failure() {
                Some(f) => format!("{}: {}", f.name, f.witness.clone().unwrap_or_default()),
                None => format!("over budget {:?}", budget(c.name)),
            };
            println!("    {why}");
            failed.push(c.name);
        }
    }
    assert!(failed.is_empty(), "failed: {failed:?}");
}

#[test]
fn filter_selects_taft_subset() {
    let names: Vec<&str> = select(Some("taft*")).unwrap().iter().map(|c| c.name).collect();
    assert_eq!(names, ["taft-galois-sweep", "taft-cotensor"]);
    assert!(select(Some("[")).is_err());
    assert!(select(Some("nothing")).unwrap().is_empty());
}

#[test]
fn corrupted_table_is_caught() {
    let runs = run_all(Some("axioms"), &SuiteOptions { corrupt: true }).unwrap();
    let rep = &runs[0].report;
    assert_eq!(runs[0].status, Status::Fail);
    let bad = rep.first_failure().unwrap();
    assert!(bad.name.starts_with("H9/p7"), "{}", bad.name);
    assert!(bad.witness.is_some());
}

#[test]
fn reports_are_deterministic() {
    let opts = SuiteOptions::default();
    let a = serde_json::to_string(&run_all(Some("kcn*"), &opts).unwrap()).unwrap();
    let b = serde_json::to_string(&run_all(Some("kcn*"), &opts).unwrap()).unwrap();
    assert_eq!(a, b);
    assert!(!a.contains("elapsed"));
}
