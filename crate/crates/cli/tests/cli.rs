use std::process::{Command, Output};

use serde_json::Value;

fn frh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frh"))
        .args(args)
        .env_remove("FRH_WITT_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let o = frh(&all);
    assert!(o.status.success(), "{args:?}: {}", stderr(&o));
    serde_json::from_str(&stdout(&o)).unwrap()
}

fn without_timing(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timing_ms");
    v
}

const UNIT: &str = r#"{"field":"2:2","matrix":[["u"]]}"#;
const MIXED: &str = r#"{"field":"2:1","matrix":[["1","1"],["0","0"]]}"#;

fn fixtures() -> Vec<Vec<&'static str>> {
    vec![
        vec!["field", "--field", "3:4"],
        vec!["skew", "mul", "--field", "2:2", "u*F", "F+u"],
        vec!["skew", "div", "--ring", "2:2:2", "F^2+1", "F+u"],
        vec!["skew", "gcd", "--field", "2:1", "F^2+F", "F^2+1"],
        vec!["roots", "--field", "2:1", "--skew", "F^2+F+1"],
        vec!["module", "unit", MIXED],
        vec!["module", "annihilator", MIXED, "--vector", "0,1"],
        vec!["module", "unitalize", MIXED],
        vec![
            "module",
            "hom",
            MIXED,
            r#"{"field":"2:1","matrix":[["1"]]}"#,
        ],
        vec!["rh", "cov", UNIT],
        vec![
            "rh",
            "inv",
            r#"{"dim":2,"frobenius":[[0,1],[1,1]],"base":"2:1"}"#,
        ],
        vec!["rh", "sol", MIXED, "--k", "2"],
        vec!["rh", "dual", r#"{"base":"2:1","factors":[2,1]}"#],
        vec!["rh", "lang", MIXED, "--target", "1,0"],
        vec!["witt", "add", "1+t", "1-t", "--N", "4"],
        vec!["witt", "mul", "1-2t", "1-3t", "--N", "3"],
        vec!["witt", "ghost", "1-2t", "--N", "4"],
        vec![
            "witt", "frob", "--n", "2", "1+t+t^3", "--N", "6", "--ring", "3:1",
        ],
        vec!["witt", "versch", "--n", "2", "1+t", "--N", "4"],
        vec!["witt", "rat2big", "1", "1+t", "--N", "3"],
        vec!["witt", "roots2coef", "--ring", "2:2", "u", "u+1"],
    ]
}

#[test]
fn spec_examples() {
    let r = json(&["roots", "--field", "2:1", "--skew", "F^2+F+1"]);
    assert_eq!(r["result"]["count"], "4");
    assert_eq!(r["result"]["splitting_degree"], 3);
    assert_eq!(r["result"]["basis"].as_array().unwrap().len(), 2);

    let r = json(&["rh", "cov", UNIT]);
    assert_eq!(r["result"]["representation"]["dim"], 1);

    let o = frh(&["witt", "mul", "1-2t", "1-3t", "--N", "3", "--ring", "Z"]);
    assert!(stdout(&o).contains("series: 1-6*t"));

    let r = json(&["roots", "--field", "2:1", "--skew", "F-1"]);
    assert_eq!(r["inputs"]["skew"], "F+1");
    assert_eq!(r["result"]["count"], "2");
}

#[test]
fn syntax_errors_point_into_the_command_line() {
    let o = frh(&["roots", "--field", "2:1", "--skew", "F^+"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(
        stderr(&o).contains("syntax error at column 30"),
        "{}",
        stderr(&o)
    );
    let o = frh(&["roots", "--field", "2:1", "--skew=F^+"]);
    assert!(stderr(&o).contains("column 30"), "{}", stderr(&o));
}

#[test]
fn exit_codes() {
    assert_eq!(frh(&["field", "--field", "4:1"]).status.code(), Some(2));
    assert_eq!(
        frh(&["witt", "ghost", "1+t", "--N", "2", "--ring", "2:1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        frh(&["rh", "cov", "--require-unit", MIXED]).status.code(),
        Some(2)
    );
    assert_eq!(
        frh(&["rh", "cov", "/nonexistent/module.json"])
            .status
            .code(),
        Some(2)
    );
    let o = frh(&[
        "roots",
        "--field",
        "2:1",
        "--skew",
        "F^2+F+1",
        "--max-degree",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    let o = frh(&[
        "rh",
        "lang",
        r#"{"field":"2:1","matrix":[["1"]]}"#,
        "--target",
        "1",
        "--max-degree",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("extension degree"));
}

#[test]
fn json_round_trips_and_matches_text() {
    for args in fixtures() {
        let v = json(&args);
        assert_eq!(v["schema_version"], 1, "{args:?}");
        assert!(v["provenance"]["library_version"].is_string());
        let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
        assert_eq!(again, v);
        let text = stdout(&frh(&args));
        for (k, val) in v["result"].as_object().unwrap() {
            let shown = match val {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                Value::Bool(b) => b.to_string(),
                _ => continue,
            };
            assert!(text.contains(&format!("{k}: {shown}\n")), "{args:?}: {k}");
        }
    }
}

#[test]
fn identical_runs_give_identical_json() {
    for args in fixtures() {
        assert_eq!(
            without_timing(json(&args)),
            without_timing(json(&args)),
            "{args:?}"
        );
    }
}

#[test]
fn representation_round_trip_through_the_cli() {
    let rep = r#"{"dim":2,"frobenius":[[0,1],[1,1]],"base":"2:1"}"#;
    let inv = json(&["rh", "inv", rep]);
    let module = serde_json::to_string(&inv["result"]["module"]).unwrap();
    let cov = json(&["rh", "cov", &module]);
    assert_eq!(cov["result"]["representation"]["dim"], 2);
    // the only 2-dimensional representation of order 3 over F_2, up to conjugacy
    assert_eq!(cov["result"]["order"], 3);
}

#[test]
fn witt_cache_directory_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_frh"))
        .args(["witt", "mul", "1-2t", "1-3t", "--N", "3", "--json"])
        .env("FRH_WITT_CACHE", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["provenance"]["witt_cache_key"], "mul-N3.v1");
    assert!(dir.path().join("mul-N3.v1.json").exists());
}

#[test]
fn selftest_reports_each_criterion() {
    let o = frh(&["selftest", "--criterion", "1", "--criterion", "4"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(
        text.contains("PASS [1]") && text.contains("PASS [4]"),
        "{text}"
    );
}
