use yh::cli::run;
use yh::scalars::parse_sqrtext;

fn call(args: &[&str]) -> (i32, String) {
    run(std::iter::once("yh").chain(args.iter().copied()))
}

#[test]
fn compare_case_13_is_all_equal() {
    let (code, out) = call(&["compare", "--case", "13", "--d", "3", "--subset", "0", "--format", "json"]);
    assert_eq!(code, 0);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(rows.len(), yh::corpus::builtin().len());
    assert!(rows.iter().all(|r| r["equal"] == true && r["case"] == 13));
}

#[test]
fn output_is_deterministic() {
    let args = ["compare", "--case", "7", "--d", "2", "--subset", "0,1", "--format", "json", "--with-diagnostic"];
    let a = call(&args);
    assert_eq!(a, call(&args));
    std::env::set_var("YH_THREADS", "1");
    let b = call(&args);
    std::env::remove_var("YH_THREADS");
    assert_eq!(a, b);
}

#[test]
fn json_values_round_trip() {
    let (code, out) = call(&["delta", "--braid", "1 -2 1 -2", "--d", "3", "--subset", "0,2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let parsed = parse_sqrtext(v["value"].as_str().unwrap()).unwrap();
    let sol = yh::esystem::solve(3, &[0, 2]).unwrap();
    let alpha = yh::braid::BraidWord::parse("1 -2 1 -2", None).unwrap();
    assert_eq!(parsed, yh::invariants::delta_s(&alpha, &sol).unwrap().value);
}

#[test]
fn esystem_all_lists_every_subset() {
    let (code, out) = call(&["esystem", "--d", "3", "--all", "--verify", "--format", "json"]);
    assert_eq!(code, 0);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&out).unwrap();
    assert_eq!(rows.len(), 7);
    assert!(rows.iter().all(|r| r["verified"] == true));
}

#[test]
fn markov_test_reads_a_corpus_file() {
    let dir = std::env::temp_dir().join(format!("yh-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.txt");
    std::fs::write(&path, "# small\nn=3; 1 -2 1 -2\n1 1 1\n").unwrap();
    let (code, out) = call(&["markov-test", "--corpus", path.to_str().unwrap(), "--d", "2", "--subset", "1"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().count(), 10);
    assert!(out.lines().all(|l| l.starts_with("PASS")));
    let (code, out) = call(&["markov-test", "--corpus", dir.join("missing").to_str().unwrap(), "--d", "2", "--subset", "1"]);
    assert_eq!(code, 1);
    assert!(out.contains("\"io\""));
}

#[test]
fn bound_homflypt_and_bad_options() {
    let (code, out) = call(&["homflypt", "--braid", "1 1", "--bind", "q=1,zeta=z"]);
    assert_eq!(code, 0);
    assert!(!out.is_empty());
    assert_eq!(call(&["esystem", "--d", "0"]).0, 1);
    assert_eq!(call(&["compare", "--case", "17", "--d", "2", "--subset", "0"]).0, 1);
    assert_eq!(call(&["compare", "--d", "2", "--subset", "0"]).0, 2);
    let (code, out) = call(&["delta", "--braid", "1", "--d", "2", "--subset", "0,2"]);
    assert_eq!(code, 1);
    assert!(out.contains("invalid-option"));
}

#[test]
fn selftest_passes() {
    let (code, out) = call(&["selftest"]);
    assert_eq!(code, 0, "{out}");
}
