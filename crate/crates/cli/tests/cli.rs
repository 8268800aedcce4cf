use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use twotrees::{is_isomorphic, Graph};

fn twotrees(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twotrees"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("tests/fixtures")
            .join(name),
    )
    .unwrap()
}

#[test]
fn bicentral_table_csv_is_golden() {
    let o = twotrees(&["tables", "--r", "2", "--n", "4..12", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), fixture("bicentral_4_12.csv"));
}

#[test]
fn tricentral_table_csv_is_golden() {
    let o = twotrees(&["tables", "--r", "3", "--n", "3..12"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), fixture("tricentral_3_12.csv"));
}

#[test]
fn unicentral_table_rows() {
    let o = twotrees(&["tables", "--r", "1", "--n", "4..8"]);
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 4);
    assert!(rows.iter().all(|r| r.ends_with(",2,1")));
    assert!(rows[0].starts_with("5,4,"));
}

#[test]
fn tables_json_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let o = twotrees(&[
        "tables",
        "--r",
        "2",
        "--n",
        "9",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let records = v["records"].as_array().unwrap();
    assert_eq!(records.len(), 3);
    assert_eq!(records[0]["delta"], 6);
    assert_eq!(records[0]["count"], 2);
}

#[test]
fn tables_output_is_byte_stable_across_thread_counts() {
    let a = twotrees(&[
        "--threads",
        "1",
        "tables",
        "--r",
        "3",
        "--n",
        "3..11",
        "--format",
        "json",
    ]);
    let b = twotrees(&[
        "--threads",
        "4",
        "tables",
        "--r",
        "3",
        "--n",
        "3..11",
        "--format",
        "json",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn tables_rejects_bad_input() {
    assert_eq!(
        twotrees(&["tables", "--r", "2", "--n", "4..14"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        twotrees(&["tables", "--r", "4", "--n", "4..6"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        twotrees(&["tables", "--r", "2", "--n", "9..4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        twotrees(&["tables", "--r", "2", "--n", "a..b"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn construct_examples() {
    let o = twotrees(&["construct", "fan", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let g = Graph::from_json(&stdout(&o)).unwrap();
    assert_eq!((g.n(), g.edge_count()), (6, 9));

    let o = twotrees(&["construct", "gpq", "7", "1", "3"]);
    let g = Graph::from_json(&stdout(&o)).unwrap();
    assert_eq!(g.n(), 30);
    assert_eq!(g.degree_sequence().count(13), 3);
    assert!(stderr(&o).starts_with("r=3 Δ=13"));

    let o = twotrees(&["construct", "bicentral", "9", "6"]);
    assert_eq!(stderr(&o).trim(), "r=2 Δ=6 x=4 y=3 σ=2");

    let o = twotrees(&[
        "construct",
        "bicentral-sigma3",
        "9",
        "2",
        "--format",
        "text",
    ]);
    assert!(stdout(&o).starts_with("r=2 Δ=6 x=4 y=3 σ=3\n"));
}

#[test]
fn construct_usage_errors() {
    for args in [
        &["construct", "wheel", "6"][..],
        &["construct", "fan"],
        &["construct", "book", "2", "3"],
        &["construct", "gpq", "7", "3", "1"],
        &["construct", "tricentral-extremal", "7"],
        &["construct", "fan", "-1"],
    ] {
        let o = twotrees(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn check_seq_examples() {
    let out = stdout(&twotrees(&["check-seq", "5,5,2,2,2,2"]));
    assert!(out.contains("graphic: yes"));
    assert!(out.contains("two-tree: yes"));
    assert!(out.contains("central r=2: Δ=5"));
    assert!(out.contains("central r=1: none"));

    assert!(stdout(&twotrees(&["check-seq", "3,1,1"])).contains("graphic: no"));

    let out = stdout(&twotrees(&["check-seq", "5,5,5,5,2,2,2,2,2"]));
    assert!(out.contains("two-tree: no (failed: iv)"), "{out}");

    let o = twotrees(&["check-seq", "2,2,2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["central"], serde_json::json!([{ "r": 3, "delta": 2 }]));

    assert_eq!(twotrees(&["check-seq", "5,x,2"]).status.code(), Some(2));
    assert_eq!(twotrees(&["check-seq", ""]).status.code(), Some(2));
}

#[test]
fn params_lists_range() {
    let out = stdout(&twotrees(&["params", "9", "2"]));
    assert_eq!(out.lines().count(), 3);
    assert!(out
        .lines()
        .next()
        .unwrap()
        .starts_with("n=9 r=2 Δ=6 x=4 y=3 feasible=yes"));
    let out = stdout(&twotrees(&["params", "9", "2", "5", "--format", "csv"]));
    assert_eq!(
        out,
        "n,r,delta,x,y,feasible,degree_sequence\n9,2,5,6,1,false,\"\"\n"
    );
    assert_eq!(twotrees(&["params", "9", "0"]).status.code(), Some(2));
}

#[test]
fn audit_exit_codes() {
    let o = twotrees(&["audit", "9"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));

    let o = twotrees(&["audit", "9", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["passed"] == true));

    let o = twotrees(&["audit", "8", "--inject-failure", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failed: Vec<_> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .collect();
    assert_eq!(failed.len(), 1);
    let witness: Graph = serde_json::from_value(failed[0]["counterexample"].clone()).unwrap();
    assert!(witness.is_two_tree());

    assert_eq!(twotrees(&["audit", "20"]).status.code(), Some(2));
}

#[test]
fn iso_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let p = |name: &str| dir.path().join(name).to_str().unwrap().to_owned();
    let write = |name: &str, args: &[&str]| {
        let o = twotrees(args);
        fs::write(p(name), &o.stdout).unwrap();
    };
    write("fan.json", &["construct", "fan", "5"]);
    // the same fan with the hub moved to vertex 4 and the path reversed
    fs::write(
        p("fan2.json"),
        r#"{"n":5,"edges":[[0,1],[1,2],[2,3],[0,4],[1,4],[2,4],[3,4]]}"#,
    )
    .unwrap();
    let fan = Graph::from_json(&fs::read_to_string(p("fan.json")).unwrap()).unwrap();
    let fan2 = Graph::from_json(&fs::read_to_string(p("fan2.json")).unwrap()).unwrap();
    assert!(is_isomorphic(&fan, &fan2));

    let o = twotrees(&["iso", &p("fan.json"), &p("fan2.json")]);
    assert_eq!(
        (o.status.code(), stdout(&o).as_str()),
        (Some(0), "isomorphic\n")
    );

    write("g12.json", &["construct", "gpq", "7", "1", "2"]);
    write("g23.json", &["construct", "gpq", "7", "2", "3"]);
    let o = twotrees(&["iso", &p("g12.json"), &p("g23.json")]);
    assert_eq!(
        (o.status.code(), stdout(&o).as_str()),
        (Some(1), "non-isomorphic\n")
    );

    fs::write(p("bad.json"), "{\"n\": 3, \"edges\": [[0, 3]]}").unwrap();
    assert_eq!(
        twotrees(&["iso", &p("fan.json"), &p("bad.json")])
            .status
            .code(),
        Some(2)
    );
    fs::write(p("trunc.json"), "{\"n\": 3").unwrap();
    assert_eq!(
        twotrees(&["iso", &p("trunc.json"), &p("fan.json")])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        twotrees(&["iso", &p("fan.json"), &p("missing.json")])
            .status
            .code(),
        Some(2)
    );
}
