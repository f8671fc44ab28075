use std::process::{Command, Output};

use raney::records::Record;

fn raney(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_raney"))
        .args(args)
        .env_remove("RANEY_CAP")
        .output()
        .expect("run raney")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Whitespace-separated column `col` of every data row in a table.
fn column(text: &str, col: usize) -> Vec<String> {
    text.lines()
        .filter(|l| l.starts_with(|c: char| c.is_ascii_digit()))
        .map(|l| l.split_whitespace().nth(col).unwrap().to_string())
        .collect()
}

fn records(args: &[&str]) -> Vec<Record> {
    stdout(&raney(args))
        .lines()
        .map(|l| l.parse().unwrap())
        .collect()
}

#[test]
fn raney_tables() {
    let out = stdout(&raney(&["raney", "--p", "4", "--r", "2", "--k-max", "3"]));
    assert_eq!(column(&out, 1), ["1", "2", "9", "52"]);
    let out = stdout(&raney(&["raney", "--p", "2", "--r", "1", "--k-max", "4"]));
    assert_eq!(column(&out, 1), ["1", "1", "2", "5", "14"]);
    let out = stdout(&raney(&["raney", "--p", "1", "--r", "1", "--k-max", "6"]));
    assert_eq!(column(&out, 1), ["1"; 7]);
}

#[test]
fn check_agrees() {
    let out = stdout(&raney(&[
        "raney", "--p", "3", "--r", "2", "--k-max", "10", "--check",
    ]));
    assert!(column(&out, 4).iter().all(|v| v == "yes"));
}

#[test]
fn catalan_table() {
    let out = stdout(&raney(&["catalan", "--p", "3", "--k-max", "4"]));
    assert_eq!(column(&out, 1), ["1", "1", "3", "12", "55"]);
}

#[test]
fn enumerate_counts() {
    assert_eq!(
        records(&["enumerate", "--p", "2", "--r", "2", "--k", "1"]).len(),
        2
    );
    assert_eq!(
        records(&["enumerate", "--p", "4", "--r", "2", "--k", "1"]).len(),
        2
    );
    assert_eq!(
        records(&["enumerate", "--p", "3", "--r", "3", "--k", "0"]).len(),
        1
    );
    let tuple = stdout(&raney(&["enumerate", "--p", "2", "--r", "3", "--k", "3"]));
    let tiered = stdout(&raney(&[
        "enumerate",
        "--p",
        "2",
        "--r",
        "3",
        "--k",
        "3",
        "--method",
        "tiered",
    ]));
    let mut tuple: Vec<&str> = tuple.lines().collect();
    let mut tiered: Vec<&str> = tiered.lines().collect();
    tuple.sort_unstable();
    tiered.sort_unstable();
    assert_eq!(tuple, tiered);
    assert_eq!(tuple.len(), 28);
}

#[test]
fn records_reprint_identically() {
    for args in [
        &["enumerate", "--p", "3", "--r", "2", "--k", "2"][..],
        &["webs", "--variant", "constant", "--k", "2"][..],
        &["webs", "--variant", "minus", "--k", "2"][..],
    ] {
        let text = stdout(&raney(args));
        let again: String = text
            .lines()
            .map(|l| format!("{}\n", l.parse::<Record>().unwrap()))
            .collect();
        assert_eq!(again, text);
    }
}

#[test]
fn web_counts() {
    assert_eq!(
        records(&["webs", "--variant", "constant", "--k", "0"]).len(),
        1
    );
    assert_eq!(
        records(&["webs", "--variant", "constant", "--k", "1"]).len(),
        2
    );
    assert_eq!(
        records(&["webs", "--variant", "constant", "--k", "3"]).len(),
        52
    );
    let arc = records(&["webs", "--variant", "minus", "--k", "0"]);
    assert_eq!(arc.len(), 1);
    assert_eq!(arc[0].boundary.as_ref().unwrap().to_string(), "-+");
    assert_eq!(
        records(&["webs", "--variant", "minus", "--k", "1"]).len(),
        1
    );
}

#[test]
fn conjecture_is_flagged() {
    let out = stdout(&raney(&[
        "conjecture",
        "--n",
        "3",
        "--j",
        "2",
        "--k-max",
        "3",
    ]));
    assert!(out.starts_with("UNVERIFIED"));
    assert_eq!(column(&out, 1), ["1", "2", "9", "52"]);
    let out = stdout(&raney(&[
        "conjecture",
        "--n",
        "4",
        "--j",
        "1",
        "--k-max",
        "1",
    ]));
    let rows: Vec<Vec<&str>> = out
        .lines()
        .filter(|l| l.starts_with(|c: char| c.is_ascii_digit()))
        .map(|l| l.split_whitespace().collect())
        .collect();
    assert_eq!(rows[0][1..], ["1", "1"]);
    assert_eq!(rows[1][1], "6");
}

#[test]
fn exit_codes() {
    assert_eq!(
        raney(&["raney", "--p", "0", "--r", "1", "--k-max", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        raney(&[
            "enumerate",
            "--p",
            "2",
            "--r",
            "2",
            "--k",
            "1",
            "--format",
            "table"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        raney(&["conjecture", "--n", "2", "--j", "1", "--k-max", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(raney(&["verify", "--inject-fault"]).status.code(), Some(1));
    assert_eq!(raney(&["verify"]).status.code(), Some(0));
    let capped = raney(&[
        "enumerate",
        "--p",
        "2",
        "--r",
        "2",
        "--k",
        "6",
        "--cap",
        "100",
    ]);
    assert_eq!(capped.status.code(), Some(3));
}

#[test]
fn cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_raney"))
        .args(["webs", "--variant", "minus", "--k", "1"])
        .env("RANEY_CAP", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap of 3"));
}

#[test]
fn dot_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().to_str().unwrap();
    stdout(&raney(&[
        "webs",
        "--variant",
        "constant",
        "--k",
        "2",
        "--format",
        "dot",
        "--out",
        path,
    ]));
    let mut names: Vec<String> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.len(), 9);
    assert_eq!(names[0], "web_constant_k2_0000.dot");
    let text = std::fs::read_to_string(dir.path().join(&names[0])).unwrap();
    assert!(text.starts_with("digraph"));

    let blocked = dir.path().join(&names[0]).join("sub");
    let out = raney(&[
        "enumerate",
        "--p",
        "2",
        "--r",
        "2",
        "--k",
        "1",
        "--format",
        "dot",
        "--out",
        blocked.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(3));
}
