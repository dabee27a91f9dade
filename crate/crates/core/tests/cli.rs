use std::collections::BTreeSet;
use std::process::{Command, Output};

use pythdiam::diophantine::{self, Equation};
use pythdiam::pythagorean;
use pythdiam::Exec;
use serde_json::Value;

fn pythdiam(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pythdiam")).args(args).output().expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Vec<Value> {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = pythdiam(&full);
    serde_json::from_slice::<Value>(&o.stdout).unwrap().as_array().unwrap().clone()
}

#[test]
fn csv_triples_listing() {
    let o = pythdiam(&["triples", "--alpha-max", "30", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let expected = "kind,m,n,alpha,beta,gamma\n\
                    triple,2,1,5,4,3\n\
                    triple,3,2,13,12,5\n\
                    triple,4,1,17,8,15\n\
                    triple,4,3,25,24,7\n\
                    triple,5,2,29,20,21\n";
    assert_eq!(stdout(&o), expected);
}

#[test]
fn triples_command_matches_library() {
    let records = json(&["triples", "--alpha-max", "2000"]);
    let cli: Vec<(u64, u64, u64)> = records
        .iter()
        .map(|r| {
            let p = &r["payload"];
            (p["alpha"].as_u64().unwrap(), p["beta"].as_u64().unwrap(), p["gamma"].as_u64().unwrap())
        })
        .collect();
    let lib: Vec<(u64, u64, u64)> = pythagorean::enumerate_primitive(2000)
        .map(|t| (t.alpha as u64, t.beta as u64, t.gamma as u64))
        .collect();
    assert_eq!(cli, lib);
}

#[test]
fn dioph_command_matches_library() {
    for (eq, flag) in [(Equation::A, "A"), (Equation::B, "B")] {
        let records = json(&["dioph", "--eq", flag, "--z-max", "3000"]);
        let cli: Vec<u64> = records
            .iter()
            .flat_map(|r| ["x", "y", "z"].map(|k| r["payload"][k].as_u64().unwrap()))
            .collect();
        let lib: Vec<u64> = diophantine::enumerate_solutions(eq, 3000, Exec::Sequential)
            .unwrap()
            .iter()
            .flat_map(|s| [s.x, s.y, s.z].map(|v| v as u64))
            .collect();
        assert_eq!(cli, lib);
    }
}

#[test]
fn verify_examples_flags_only_the_two_errata() {
    let o = pythdiam(&["verify", "examples", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let records: Vec<Value> = serde_json::from_slice(&o.stdout).unwrap();
    let mut flagged = BTreeSet::new();
    let mut examples = 0;
    for r in &records {
        let p = &r["payload"];
        match p["check"].as_str().unwrap() {
            "example" => {
                examples += 1;
                assert_eq!(p["recomputation"], "matches-oracle");
                if p["status"] == "printed-discrepancy" {
                    flagged.insert(p["example"].as_u64().unwrap());
                }
            }
            "discrepancy" => {
                let field = p["field"].as_str().unwrap();
                let label = p["example"].as_u64().unwrap();
                let allowed: &[&str] = match label {
                    3 => &["beta", "beta_root", "d_b", "d_b_root"],
                    11 => &["alpha"],
                    _ => &[],
                };
                assert!(allowed.contains(&field), "example {label} field {field}");
            }
            other => panic!("unexpected check {other}"),
        }
    }
    assert_eq!(examples, 11);
    assert_eq!(flagged, BTreeSet::from([3, 11]));
}

#[test]
fn verify_theorem1_reports_no_counterexamples() {
    let o = pythdiam(&["verify", "theorem1", "--alpha-max", "100000"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 counterexamples"));
}

#[test]
fn json_and_csv_carry_the_same_fields() {
    let cases: &[&[&str]] = &[
        &["triples", "--alpha-max", "100", "--delta", "3"],
        &["diameters", "--sides", "7,5,4"],
        &["diameters", "--mn", "8,1"],
        &["dioph", "--eq", "A", "--z-max", "200", "--brute"],
        &["dioph", "--eq", "B", "--recover", "23,7,17"],
        &["family", "--id", "F3", "--alpha-max", "5000"],
        &["family", "--id", "F4", "--kappa", "1", "--lambda", "2"],
        &["classify", "--alpha-max", "10000"],
        &["classify", "--mn", "2,1"],
        &["construct", "--k", "3", "--l", "5", "--t", "-2"],
        &["verify", "examples"],
        &["verify", "consistency", "--m-max", "30", "--chord-bound", "200"],
    ];
    for args in cases {
        let mut csv_args = args.to_vec();
        csv_args.extend(["--format", "csv"]);
        let csv_out = stdout(&pythdiam(&csv_args));
        let header: BTreeSet<String> = csv_out.lines().next().unwrap().split(',').map(str::to_owned).collect();

        let mut keys = BTreeSet::from(["kind".to_owned()]);
        for r in json(args) {
            keys.extend(r["payload"].as_object().unwrap().keys().cloned());
        }
        assert_eq!(header, keys, "{args:?}");
    }
}

#[test]
fn family_example_values() {
    let r = json(&["family", "--id", "F3", "--alpha-max", "5000"]);
    let alphas: Vec<u64> = r.iter().map(|r| r["payload"]["alpha"].as_u64().unwrap()).collect();
    assert_eq!(alphas, [2501, 4901]);
    let p = &r[1]["payload"];
    assert_eq!((p["beta"].as_u64(), p["gamma"].as_u64()), (Some(4900), Some(99)));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["triples"][..],
        &["bogus"],
        &["dioph", "--eq", "C", "--z-max", "10"],
        &["diameters", "--sides", "1,2,3"],
        &["construct", "--k", "3", "--l", "5", "--t", "-3"],
        &["family", "--id", "F1", "--kappa", "3"],
    ] {
        assert_eq!(pythdiam(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn overflow_is_reported_distinctly() {
    let big = format!("{},1", 1u128 << 126);
    let o = pythdiam(&["diameters", "--mn", &big]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("overflow"));
}
