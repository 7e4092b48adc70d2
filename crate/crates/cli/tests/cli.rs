use std::process::{Command, Output};

fn compedge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compedge")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ideal_of_path() {
    let o = compedge(&["ideal", "--which", "ic", "path:4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(x3x4, x1x4, x1x2)\n");

    let o = compedge(&["ideal", "--which", "jc", "path:4"]);
    assert_eq!(stdout(&o), "(x2x4, x1x4, x1x3)\n");
    let o = compedge(&["ideal", "--which", "veronese:2", "complete:3", "--json"]);
    assert_eq!(stdout(&o), "{\"n\":3,\"gens\":[[0,1,1],[1,0,1],[1,1,0]]}\n");
}

#[test]
fn dual_matches_cover_ideal() {
    let a = compedge(&["dual", "cycle:5"]);
    let b = compedge(&["ideal", "--which", "jc", "cycle:5"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn reg_table_for_two_disjoint_edges() {
    let o = compedge(&["reg-table", "union:complete:2,complete:2", "--kmax", "3", "--field", "Zp:2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for row in rows {
        assert_eq!(row["reg_ic"], row["forecast_ic"]);
    }
    assert_eq!(v["all_match"], true);

    let text = stdout(&compedge(&["reg-table", "union:complete:2,complete:2", "--kmax", "3"]));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn verify_suite_summary() {
    let o = compedge(&["verify", "decomposition", "--n", "4", "--jobs", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "decomposition: 71 graphs scanned (n = 2..4), 0 skipped, 0 mismatches\n");
}

#[test]
fn verify_writes_csv() {
    let dir = std::env::temp_dir().join(format!("compedge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("rows.csv");
    let o = compedge(&["verify", "power-regularity", "--n", "4", "--kmax", "2", "--csv", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(&path).unwrap();
    assert!(csv.starts_with("n,bitmask,c,reg,forecast,depth\n"));
    assert_eq!(csv.lines().count(), 1 + 70);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "chordal", "--n", "4", "--json", "--jobs", "3"];
    assert_eq!(compedge(&args).stdout, compedge(&args).stdout);
    let args = ["classify", "complete_multipartite:1,2,2", "--json"];
    assert_eq!(compedge(&args).stdout, compedge(&args).stdout);
}

#[test]
fn decompose_and_classify() {
    let o = compedge(&["decompose", "complete:3"]);
    assert_eq!(stdout(&o), "(x1, x2, x3)\nunmixed: yes\n");
    let o = compedge(&["classify", "path:3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["verdicts"]["gorenstein"], true);
    assert_eq!(v["consistent"], true);
}

#[test]
fn betti_table_layout() {
    let o = compedge(&["betti", "cycle:5", "--field", "Q"]);
    assert_eq!(stdout(&o), "       0 1 2\ntotal: 5 5 1\n    3: 5 5 1\n");
    let o = compedge(&["betti", "path:3", "--which", "edge", "--power", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("{\"entries\":"));
}

#[test]
fn lq_order_and_probe() {
    let o = compedge(&["lq-order", "path:4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("verified: yes\n"));
    let o = compedge(&["lq-order", "path:4", "--peo", "4,3,2,1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = compedge(&["probe", "cycle:4", "--kmax", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 2);
}

#[test]
fn graph_files() {
    let dir = std::env::temp_dir().join(format!("compedge-graph-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("p4.txt");
    std::fs::write(&good, "# path on four vertices\n4\n1 2\n2 3\n3 4\n").unwrap();
    let o = compedge(&["ideal", good.to_str().unwrap()]);
    assert_eq!(stdout(&o), "(x3x4, x1x4, x1x2)\n");
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "4\n1 9\n").unwrap();
    let o = compedge(&["ideal", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    // usage errors
    assert_eq!(compedge(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(compedge(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(compedge(&["reg-table", "path:3", "--kmax", "0"]).status.code(), Some(2));
    assert_eq!(compedge(&["betti", "path:3", "--field", "Zp:4"]).status.code(), Some(2));
    assert_eq!(compedge(&["ideal", "tree:4"]).status.code(), Some(2));
    assert_eq!(compedge(&["lq-order", "cycle:4"]).status.code(), Some(2));
    // a resource guard: a boundary matrix of a small power is already too large
    let o = compedge(&["betti", "complete:5", "--which", "edge", "--power", "3"]);
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(String::from_utf8_lossy(&o.stderr).contains("guard"));
}
