use super::{run, RunOutput};
use serde_json::Value;

fn dsi(args: &[&str], stdin: Option<&str>) -> RunOutput {
    let argv = std::iter::once("dsi").chain(args.iter().copied());
    run(argv, &mut stdin.unwrap_or("").as_bytes())
}

fn stdout(o: &RunOutput) -> String {
    o.stdout.clone()
}

fn tsv_rows(text: &str) -> Vec<std::collections::HashMap<String, String>> {
    let mut lines = text.lines();
    let header: Vec<_> = lines
        .next()
        .unwrap()
        .split('\t')
        .map(String::from)
        .collect();
    lines
        .map(|l| {
            header
                .iter()
                .cloned()
                .zip(l.split('\t').map(String::from))
                .collect()
        })
        .collect()
}

#[test]
fn matched_cliques_tsv_row() {
    let o = dsi(
        &[
            "bounds",
            "--gen",
            "matched_cliques:3",
            "--j",
            "1",
            "--format",
            "tsv",
        ],
        None,
    );
    assert_eq!(o.code, 0);
    let rows = tsv_rows(&stdout(&o));
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["alpha_j"], "2");
    assert_eq!(rows[0]["a_j"], "2");
    assert_eq!(rows[0]["a"], "3");
    assert_eq!(rows[0]["checks"], "pass");
}

#[test]
fn generate_dodecahedron() {
    let o = dsi(&["generate", "dodecahedron"], None);
    assert_eq!(o.code, 0);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    let g = dsi_bounds::graph::parse_graph6(text.trim()).unwrap();
    assert_eq!((g.order(), g.size()), (20, 30));

    let o = dsi(&["generate", "cycle:4", "--edge-list"], None);
    assert_eq!(stdout(&o), "4 4\n0 1\n0 3\n1 2\n2 3\n");
}

#[test]
fn corpus_summary() {
    let o = dsi(
        &["corpus", "--n", "5", "--j", "1,2", "--format", "json"],
        None,
    );
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["graphs"], 1024);
    // edgeless-ish graphs break c' <= c_j, so the scan reports failures and exits 1
    let failures = v["failures"].as_u64().unwrap();
    assert_eq!(
        v["failures_by_check"]["c_weak<=c_j"].as_u64(),
        Some(failures)
    );
    assert_eq!(o.code, if failures == 0 { 0 } else { 1 });

    let o = dsi(&["corpus", "--n", "4", "--j", "2"], None);
    assert!(stdout(&o).contains("graphs"));
}

#[test]
fn tsv_and_json_carry_the_same_values() {
    let args = [
        "bounds",
        "--gen",
        "double_hub_wheel:2",
        "--j",
        "1,2,3",
        "--p",
        "3",
        "--domination",
    ];
    let json = dsi(&[&args[..], &["--format", "json"]].concat(), None);
    let tsv = dsi(&[&args[..], &["--format", "tsv"]].concat(), None);
    assert_eq!(json.code, tsv.code);
    let rows = tsv_rows(&stdout(&tsv));
    let records: Vec<Value> = stdout(&json)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), records.len());
    for (row, rec) in rows.iter().zip(&records) {
        for (key, cell) in row {
            match &rec[key.as_str()] {
                Value::Null => assert_eq!(cell, "-", "{key}"),
                Value::Number(n) => assert_eq!(cell, &n.to_string(), "{key}"),
                Value::Bool(b) => assert_eq!(cell, &b.to_string(), "{key}"),
                Value::String(s) => assert_eq!(cell, s, "{key}"),
                Value::Object(r) => {
                    assert_eq!(cell, &format!("{}/{}", r["num"], r["den"]), "{key}")
                }
                Value::Array(_) => assert_eq!(cell, "pass", "{key}"),
            }
        }
    }
}

#[test]
fn reads_stdin_and_files() {
    let o = dsi(&["oracle", "alpha", "--format", "json"], Some("Dhc\nC~\n"));
    assert_eq!(o.code, 0);
    let vals: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(vals[0]["value"], 2);
    assert_eq!(vals[1]["value"], 1);

    let dir = std::env::temp_dir().join(format!("dsi-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("p3.txt");
    std::fs::write(&path, "3 2\n0 1\n1 2\n").unwrap();
    let o = dsi(
        &[
            "bounds",
            "--input",
            path.to_str().unwrap(),
            "--format",
            "json",
        ],
        None,
    );
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!((v["n"].as_u64(), v["alpha_j"].as_u64()), (Some(3), Some(2)));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn chain_failure_exits_one() {
    // E_3: the literal c' exceeds c_1
    let o = dsi(&["bounds", "--gen", "empty:3", "--format", "human"], None);
    assert_eq!(o.code, 1);
    assert!(stdout(&o).contains("FAIL c_weak<=c_j"));
}

#[test]
fn usage_and_input_errors_exit_two() {
    for (args, stdin) in [
        (&["bounds"][..], Some("!!\n")),
        (&["bounds", "--gen", "nope:3"][..], None),
        (&["bounds", "--gen", "path:30"][..], None),
        (&["bounds", "--gen", "complete:3", "--j", "0"][..], None),
        (&["bounds", "--gen", "complete:3", "--p", "2"][..], None),
        (&["bounds", "--gen", "complete:3", "--input", "x"][..], None),
        (&["bounds", "--input", "/nonexistent/graph.txt"][..], None),
        (&["corpus", "--n", "8"][..], None),
        (&["frobnicate"][..], None),
    ] {
        let o = dsi(args, stdin);
        assert_eq!(o.code, 2, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn guard_overrides_reach_the_oracle() {
    let o = dsi(&["oracle", "chi", "--gen", "dodecahedron"], None);
    assert_eq!(o.code, 2);
    let o = dsi(
        &[
            "oracle",
            "chi",
            "--gen",
            "dodecahedron",
            "--chromatic-guard",
            "20",
            "--format",
            "json",
        ],
        None,
    );
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["value"], 3);
}

#[test]
fn examples_report_known_mismatches() {
    let o = dsi(&["examples", "--format", "json"], None);
    let results: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let failing: Vec<_> = results.iter().filter(|r| r["pass"] == false).collect();
    assert_eq!(failing.len(), 2);
    assert!(failing
        .iter()
        .all(|r| r["name"] == "delta5_triangulation(r=5,j=3)"));
    assert_eq!(o.code, 1);
}

#[test]
fn help_is_not_an_error() {
    let o = dsi(&["--help"], None);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("corpus"));
    assert!(o.stderr.is_empty());
}
