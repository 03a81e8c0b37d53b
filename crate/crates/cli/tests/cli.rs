use catdet_cli::{run, Outcome};
use serde_json::Value;

fn call(args: &[&str]) -> Outcome {
    let argv: Vec<String> = std::iter::once("catdet").chain(args.iter().copied()).map(String::from).collect();
    run(&argv)
}

fn json_of(args: &[&str]) -> Value {
    let out = call(args);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn without_timings(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timings");
    v
}

#[test]
fn verify_catalan_determinant_up_to_twelve() {
    let v = json_of(&["verify", "--id", "eq1", "--n-max", "12", "--format", "json"]);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 13);
    assert!(results.iter().all(|r| r["status"] == "pass"));
    let ns: Vec<i64> = results.iter().map(|r| r["params"]["n"].as_i64().unwrap()).collect();
    assert_eq!(ns, (0..=12).collect::<Vec<_>>());
    assert_eq!(v["summary"]["pass"], 13);
    assert_eq!(v["summary"]["fail"], 0);
    assert!(v["config"].is_object() && v["timings"].is_object());
}

#[test]
fn mod_three_conjecture_reports_verified_range() {
    let out = call(&["conjecture", "--id", "c14", "--n-max", "27"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("verified-up-to 27"), "{}", out.stdout);
    assert!(out.stdout.contains("CONJECTURE"));
}

#[test]
fn counterexamples_do_not_change_the_exit_code() {
    let v = json_of(&["conjecture", "--id", "c13a", "--n-max", "6", "--format", "json"]);
    let c = &v["conjectures"][0];
    assert_eq!(c["status"], "counterexample");
    assert_eq!(c["first_counterexample"]["params"]["k"], 6);
    assert_eq!(c["first_counterexample"]["params"]["n"], 4);
    assert_eq!(c["first_counterexample"]["reverified"], true);
}

#[test]
fn modulus_filter_selects_conjectures() {
    let v = json_of(&["conjecture", "--mod", "3", "--n-max", "9", "--format", "json"]);
    let ids: Vec<&str> = v["conjectures"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["c14"]);
}

#[test]
fn reports_are_reproducible_apart_from_timings() {
    let args = ["verify", "--id", "eq64,eq68r", "--seed", "7", "--format", "json", "--n-max", "3"];
    let a = without_timings(json_of(&args));
    let b = without_timings(json_of(&args));
    assert_eq!(a, b);
    let mut parallel = args.to_vec();
    parallel.extend(["--jobs", "2"]);
    let mut c = without_timings(json_of(&parallel));
    c["config"]["jobs"] = Value::Null;
    assert_eq!(a, c);
}

#[test]
fn seed_shifts_the_random_cases() {
    let seeds = |s: &str| {
        let v = json_of(&["verify", "--id", "eq64", "--seed", s, "--format", "json", "--n-max", "2"]);
        v["results"].as_array().unwrap().iter().map(|r| r["params"]["seed"].as_i64().unwrap()).min().unwrap()
    };
    assert_eq!(seeds("100") - seeds("0"), 100);
}

#[test]
fn markdown_and_json_agree_on_verdicts() {
    let args = ["verify", "--id", "eq7", "--n-max", "4", "--k-max", "2"];
    let md = call(&args).stdout;
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let v = json_of(&json_args);
    let passes = v["results"].as_array().unwrap().iter().filter(|r| r["status"] == "pass").count();
    assert_eq!(md.matches("| pass |").count(), passes);
    assert!(md.contains(&format!("pass {passes}, fail 0")));
}

#[test]
fn malformed_input_exits_nonzero() {
    for args in [
        vec!["verify", "--id", "no_such_check"],
        vec!["verify"],
        vec!["verify", "--id", "eq1", "--param", "n=5..2"],
        vec!["verify", "--id", "eq1", "--param", "zz=1..2"],
        vec!["verify", "--id", "eq1", "--n-max", "ten"],
        vec!["conjecture", "--id", "c99"],
        vec!["suite", "--mod", "5"],
        vec!["frobnicate"],
    ] {
        let out = call(&args);
        assert_ne!(out.code, 0, "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn list_names_every_check_and_conjecture() {
    let out = call(&["list"]);
    assert_eq!(out.code, 0);
    for id in ["eq1", "eq74", "thm15a", "eq115", "c12", "c13a", "c13b", "c14"] {
        assert!(out.stdout.contains(&format!("| {id} |")), "{id}");
    }
    let v = json_of(&["list", "--format", "json"]);
    assert_eq!(v["checks"].as_array().unwrap().len(), catdet::identity_suite::registry().len());
}

#[test]
fn pinned_and_explicit_parameters() {
    let v = json_of(&["verify", "--id", "eq35", "--x", "-3", "--n-max", "2", "--format", "json"]);
    assert!(v["results"].as_array().unwrap().iter().all(|r| r["params"]["x"] == -3));
    let v = json_of(&["verify", "--id", "eq58", "--r", "3", "--param", "k=2", "--n-max", "3", "--format", "json"]);
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 4);
    assert!(results.iter().all(|r| r["params"]["r"] == 3 && r["params"]["k"] == 2));
}

#[test]
fn out_flag_writes_the_report() {
    let path = std::env::temp_dir().join(format!("catdet-report-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = call(&["verify", "--id", "eq2", "--n-max", "5", "--format", "json", "--out", p]);
    assert_eq!(out.code, 0);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), out.stdout);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn bench_reports_timings() {
    let out = call(&["bench", "--id", "eq1,eq2", "--n-max", "6"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("## Timings") && out.stdout.contains("| eq2 |"));
}

#[test]
fn fail_fast_stops_at_first_failure_free_run() {
    let v = json_of(&["verify", "--id", "eq1", "--n-max", "5", "--fail-fast", "--format", "json"]);
    assert_eq!(v["results"].as_array().unwrap().len(), 6);
}

#[test]
fn committed_index_matches_the_registry() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/index.md");
    let committed = std::fs::read_to_string(path).unwrap();
    let out = call(&["list", "--format", "markdown"]);
    assert_eq!(out.code, 0);
    assert_eq!(committed.trim_end(), out.stdout.trim_end(), "regenerate docs/index.md with `catdet list`");
}
