use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_p3convex")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn count_plain() {
    let out = run(&["count", "gen:path:6", "--algo", "tree"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "37");
    assert_eq!(stdout(&run(&["count", "gen:star:10"])).trim(), "522");
    assert_eq!(stdout(&run(&["count", "gen:cycle:5", "--algo", "structured-a"])).trim(), "17");
}

#[test]
fn count_json_keeps_big_counts_exact() {
    let out = run(&["count", "gen:edgeless:256", "--json"]);
    assert!(out.status.success());
    let v = json(&out);
    let expected = (num_bigint::BigUint::from(1u8) << 256u32).to_string();
    assert_eq!(v["noc"], Value::String(expected));
    assert_eq!(v["n"], 256);
    assert_eq!(v["instrumentation"]["components"], 256);
}

#[test]
fn algorithms_agree_on_the_paw() {
    let answers: Vec<String> = ["auto", "oracle", "generic", "structured-A", "structured-B", "structured-C", "kl"]
        .iter()
        .map(|algo| stdout(&run(&["count", "gen:paw", "--algo", algo])).trim().to_owned())
        .collect();
    assert!(answers.iter().all(|a| a == &answers[0]), "{answers:?}");
}

#[test]
fn kl_reads_a_partition_file() {
    let dir = std::env::temp_dir().join(format!("p3convex-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let part = dir.join("part.json");
    std::fs::write(&part, r#"{"independent_parts":[[0,1]],"clique_parts":[[2,3,4]]}"#).unwrap();
    let g = dir.join("g.txt");
    std::fs::write(&g, stdout(&run(&["generate", "threshold:IIUUU"]))).unwrap();
    let with_file = run(&["count", g.to_str().unwrap(), "--algo", "kl", "--partition", part.to_str().unwrap()]);
    let oracle = run(&["count", g.to_str().unwrap(), "--algo", "oracle"]);
    assert!(with_file.status.success(), "{}", String::from_utf8_lossy(&with_file.stderr));
    assert_eq!(stdout(&with_file), stdout(&oracle));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn wrong_algorithm_is_a_usage_error() {
    let out = run(&["count", "gen:cycle:5", "--algo", "tree"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not a tree"));
    assert_eq!(run(&["count", "gen:moebius:4"]).status.code(), Some(2));
}

#[test]
fn generate_is_deterministic() {
    let star = stdout(&run(&["generate", "star:5"]));
    let lines: Vec<&str> = star.lines().collect();
    assert_eq!(lines, ["5 4", "0 1", "0 2", "0 3", "0 4"]);
    let a = run(&["generate", "gnp:9:0.5", "--seed", "3"]);
    let b = run(&["generate", "gnp:9:0.5", "--seed", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_table1() {
    let out = run(&["verify", "table1"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["pass"], true);
    assert_eq!(v["rows"].as_array().unwrap().len(), 10);
}

#[test]
fn verify_extremal_names_the_star() {
    let out = run(&["verify", "extremal", "--n", "6"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["pass"], true);
    let achievers = v["achievers"].as_array().unwrap();
    assert!(achievers.iter().all(|a| a["shape"] == "Star"), "{achievers:?}");
    assert_eq!(achievers.len(), 6);
}

#[test]
fn verify_monotonicity_and_spanning_trees() {
    let out = run(&["verify", "monotonicity", "--random", "200"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["pairs_checked"], 200);
    let out = run(&["verify", "spanning-tree", "--max-n", "5"]);
    assert!(out.status.success());
}

#[test]
fn verify_reduction_reports_identity_failures() {
    let out = run(&["verify", "reduction", "--graph", "gen:path:3"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["pass"], false);
    assert_eq!(v["structural_failures"], 0);
    assert_eq!(v["identity_failures"], 1);
    let witness = &v["witnesses"][0]["identity"];
    assert_eq!(witness["noc_h"], "8");
    assert_eq!(witness["predicted_noc_h"], "18");
}

#[test]
fn bench_csv() {
    let out = run(&["bench", "--families", "cycle,star", "--n-range", "5..7", "--variants", "A,C", "--csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,n,variant,colorings_enumerated,wall_time_ms,noc"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 2 * 3 * 2);
    for row in &rows {
        let noc = stdout(&run(&["count", &format!("gen:{}:{}", row[0], row[1]), "--algo", "oracle"]));
        assert_eq!(row[5], noc.trim());
    }
}
