use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_operad-forest"))
        .args(args)
        .env_remove("OPERAD_FOREST_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&all)).unwrap()
}

#[test]
fn enumerate_examples() {
    assert_eq!(json(&["enumerate", "--kind", "rooted", "--n", "3"])["count"], 9);
    let commag = json(&["enumerate", "--kind", "commag", "--n", "3"]);
    assert_eq!(
        commag["items"],
        serde_json::json!(["((1*2)*3)", "(1*(2*3))", "(2*(1*3))"])
    );
    assert!(stdout(&["enumerate", "--kind", "pbt", "--leaves", "4"]).ends_with("count: 5"));
}

#[test]
fn product_examples() {
    assert_eq!(
        stdout(&["product", "--op", "prelie", "3(1,4)", "2"]),
        "3(1(2),4) + 3(1,2,4) + 3(1,4(2))"
    );
    assert_eq!(stdout(&["product", "--op", "nap", "1(2)", "3(4)"]), "1(2,3(4))");
    let left = json(&["product", "--op", "dend-left", "(o,o)", "(o,o)"]);
    assert_eq!(
        left,
        serde_json::json!([{"basis": "(o,(o,o))", "coeff_lambda": ["1/1"]}])
    );
    // x ≻ (x ≻ x) carries a λ term, which vanishes at λ = 0
    let args = ["product", "--op", "dend-right", "(o,o)", "((o,o),o)"];
    assert_eq!(stdout(&args), "(((o,o),o),o) + λ·((o,(o,o)),o)");
    let mut at_zero = args.to_vec();
    at_zero.extend(["--lambda", "0"]);
    assert_eq!(stdout(&at_zero), "(((o,o),o),o)");
}

#[test]
fn map_examples() {
    assert_eq!(stdout(&["map", "--name", "psi", "(2*(1*3))"]), "2(1(3))");
    assert_eq!(stdout(&["map", "--name", "psi-inverse", "1(2,3)"]), "((1*2)*3)");
    assert_eq!(
        stdout(&["map", "--name", "phi-tilde", "(2*(1*3))"]),
        "1(2,3) + 2(1(3)) + 2(3(1)) + 3(1,2)"
    );
    assert_eq!(
        stdout(&["map", "--name", "color", "1(3,4(2))"]),
        "1(4(2),3) red=[(4,2)]"
    );
}

#[test]
fn decompose_examples() {
    let d = json(&["decompose", "4(1(2,3))"]);
    assert_eq!(d["blocks"], serde_json::json!([[1, 2, 3], [4]]));
    assert_eq!(d["skeleton"], "4(3)");
    assert_eq!(stdout(&["decompose", "--all", "4", "--count-x"]), "16");
    assert!(stdout(&["decompose", "1"]).contains("blocks: {1}"));
}

#[test]
fn check_reports_and_exit_codes() {
    let r = json(&["check", "injectivity", "--map", "phi", "--n", "5"]);
    assert_eq!(r["verdict"], "pass");
    assert_eq!(r["results"]["certificates"][0]["rank"], 105);
    assert_eq!(
        r["command"],
        serde_json::json!(["--json", "check", "injectivity", "--map", "phi", "--n", "5"])
    );

    let j = json(&["check", "jordan"]);
    assert_eq!(j["results"]["arity3_rank"], 3);
    assert!(j["assertions"].as_array().unwrap().iter().all(|a| a["passed"] == true));

    let s = json(&["check", "series", "--order", "7"]);
    assert_eq!(
        s["results"]["x"]["dims"],
        serde_json::json!([1, 1, 3, 16, 120, 1146, 13258])
    );

    // a value of λ outside {0, 1, −1} makes the relations fail: exit 1
    let out = run(&["check", "dend-relations", "--n", "4", "--lambda", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("FAIL  three relations at λ = 2"));

    assert_eq!(run(&["check", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(run(&["check", "roundtrip", "--n", "9"]).status.code(), Some(2));
    assert_eq!(run(&["map", "--name", "psi", "(1*"]).status.code(), Some(2));
}

#[test]
fn json_is_deterministic() {
    let args = ["--json", "check", "filtration", "--n", "5"];
    assert_eq!(stdout(&args), stdout(&args));
    let args = ["--json", "--jobs", "1", "check", "filtration", "--n", "5"];
    let single = stdout(&args);
    let args = ["--json", "--jobs", "4", "check", "filtration", "--n", "5"];
    let multi: Value = serde_json::from_str(&stdout(&args)).unwrap();
    let single: Value = serde_json::from_str(&single).unwrap();
    assert_eq!(single["results"], multi["results"]);
    assert!(single.get("elapsed_ms").is_none());
    let timed = json(&["--timings", "check", "jordan"]);
    assert!(timed["elapsed_ms"].is_u64());
}

#[test]
fn bounds_from_env_and_config() {
    let out = Command::new(env!("CARGO_BIN_EXE_operad-forest"))
        .args(["check", "roundtrip", "--n", "5"])
        .env("OPERAD_FOREST_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bound 4"));

    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("bounds.toml");
    std::fs::write(&path, "max_n = 3\n").unwrap();
    let cfg = path.to_str().unwrap();
    assert_eq!(
        run(&["--config", cfg, "check", "roundtrip", "--n", "4"]).status.code(),
        Some(2)
    );
    assert!(run(&["--config", cfg, "check", "roundtrip", "--n", "3"])
        .status
        .success());
    std::fs::write(&path, "unknown_key = 1\n").unwrap();
    assert_eq!(run(&["--config", cfg, "check", "jordan"]).status.code(), Some(2));
}

#[test]
fn series_and_fixtures() {
    let x = json(&["series", "--target", "x", "--order", "7"]);
    assert_eq!(
        x,
        serde_json::json!({"kind": "EGS", "dims": [1, 1, 3, 16, 120, 1146, 13258]})
    );
    let table = stdout(&["series", "--target", "y", "--order", "5"]);
    assert!(table.contains("2130"), "{table}");
    let cf = json(&["series", "--target", "y-closed-form"]);
    assert_eq!(cf["computed_matches_listed"], true);
    assert_eq!(cf["ogs_matches"], false);
    assert_eq!(
        json(&["series", "--target", "dup-split", "--order", "12"])["holds"],
        true
    );
    let f = json(&["fixtures"]);
    assert_eq!(f["x_counts"][3], 16);
    assert!(f["redblack_n4"].as_array().unwrap().len() >= 10);
}
