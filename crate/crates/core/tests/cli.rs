use std::process::{Command, Output};

fn gridbond(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gridbond"))
        .args(args)
        .env_remove("GRIDBOND_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gamma_prints_value_first() {
    let o = gridbond(&["gamma", "--product", "strong", "4", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("4"));
}

#[test]
fn bondage_prints_value_and_witness() {
    let o = gridbond(&[
        "bondage",
        "--product",
        "strong",
        "4",
        "5",
        "--deterministic",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("3"));
    let witness = lines.next().unwrap();
    assert!(witness.starts_with("witness: "));
    assert_eq!(witness.matches('-').count(), 3);
}

#[test]
fn bondage_json_has_coordinates() {
    let o = gridbond(&[
        "bondage",
        "--product",
        "direct",
        "6",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["gamma"], 10);
    assert_eq!(v["bondage"]["exact"], 2);
    assert_eq!(v["witness"].as_array().unwrap().len(), 2);
}

#[test]
fn file_input_uses_one_based_labels() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.txt");
    std::fs::write(
        &path,
        "c path on four vertices\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n",
    )
    .unwrap();
    let o = gridbond(&["gamma", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("2"));
    assert!(
        out.contains("{1 3}")
            || out.contains("{1 4}")
            || out.contains("{2 3}")
            || out.contains("{2 4}")
    );
}

#[test]
fn bad_file_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "p edge 3 2\ne 1 2\ne 2 9\n").unwrap();
    let o = gridbond(&["gamma", "--file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn bad_flag_exits_3() {
    let o = gridbond(&["verify", "strong", "--n", "6..2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8(o.stderr).unwrap().contains("--n"));
    let o = gridbond(&["bondage", "--product", "strong", "4", "4", "--workers", "0"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn time_budget_reports_lower_bound_and_exit_2() {
    let o = gridbond(&[
        "bondage",
        "--product",
        "strong",
        "7",
        "7",
        "--time-budget",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with('>'));
}

#[test]
fn truncated_enumeration_exits_2() {
    let o = gridbond(&[
        "gamma-sets",
        "--product",
        "cartesian",
        "4",
        "4",
        "--cap",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("(truncated)"));
}

#[test]
fn verify_json_round_trips() {
    let o = gridbond(&[
        "verify", "strong", "--n", "2..4", "--m", "2..4", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rep: gridbond::verify::SweepReport = serde_json::from_str(&text).unwrap();
    assert_eq!(rep.cases.len(), 9);
    assert_eq!(gridbond::report::to_json(&rep), text);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let o = gridbond(&[
        "sweep",
        "direct",
        "--n",
        "2..3",
        "--m",
        "3",
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let csv = std::fs::read_to_string(path).unwrap();
    assert_eq!(csv.lines().count(), 3);
}

#[test]
fn witness_is_checked() {
    let o = gridbond(&["witness", "4", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("raises gamma: true"));
}
