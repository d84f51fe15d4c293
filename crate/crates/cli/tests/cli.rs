use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use zfpd::families::{are_isomorphic, cycle, parse_graph6, path, wheel};
use zfpd::products::cartesian_product;

fn zfpd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zfpd")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn value_of(report: &Value, graph: usize, param: &str) -> u64 {
    report["graphs"][graph]["values"]
        .as_array()
        .unwrap()
        .iter()
        .find(|v| v["param"] == param)
        .unwrap()["value"]
        .as_u64()
        .unwrap()
}

#[test]
fn compute_cycle_json() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "c6.g6", "EhEG\n");
    let o = zfpd(&["compute", "--params", "zf,pd,dom", "--input", &f, "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["params"], serde_json::json!(["zf", "pd", "dom"]));
    assert_eq!(value_of(&v, 0, "zf"), 2);
    assert_eq!(value_of(&v, 0, "pd"), 1);
    assert_eq!(value_of(&v, 0, "dom"), 2);
    assert!(v["graphs"][0]["values"].as_array().unwrap().iter().all(|x| x["valid"] == true));
}

#[test]
fn compute_path_cover_from_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "k4.txt", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let o = zfpd(&["compute", "--params", "pathcover", "--input", &f, "--edgelist", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(value_of(&v, 0, "pathcover"), 2);
    assert_eq!(v["graphs"][0]["values"][0]["witness"].as_array().unwrap().len(), 2);
}

#[test]
fn compute_empty_file_and_disconnected_graph() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "empty.g6", "");
    let o = zfpd(&["compute", "--input", &f, "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["graphs"].as_array().unwrap().len(), 0);

    let f = write(dir.path(), "two.g6", "A?\n");
    let o = zfpd(&["compute", "--params", "zf", "--input", &f, "--format", "table"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("skipped"));
}

#[test]
fn compute_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "bad.g6", "~~~\n");
    let o = zfpd(&["compute", "--input", &f]);
    assert_eq!(o.status.code(), Some(2));
    let o = zfpd(&["compute", "--params", "chromatic", "--input", &f]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_families() {
    let o = zfpd(&["gen", "--family", "wheel", "--n", "6"]);
    assert!(o.status.success());
    let g = parse_graph6(stdout(&o).trim()).unwrap();
    assert!(are_isomorphic(&g, &wheel(6).unwrap()).unwrap());

    let o = zfpd(&["gen", "--family", "wagner"]);
    let g = parse_graph6(stdout(&o).trim()).unwrap();
    assert_eq!((g.order(), g.size()), (8, 12));
    assert!(g.is_regular() && g.max_degree() == 3);

    let o = zfpd(&["gen", "--family", "multipartite", "--parts", "1,2,3"]);
    assert_eq!(parse_graph6(stdout(&o).trim()).unwrap().size(), 11);

    let o = zfpd(&["gen", "--family", "spider", "--legs", "1,2,3"]);
    assert!(parse_graph6(stdout(&o).trim()).unwrap().is_tree());

    let o = zfpd(&["gen", "--family", "moebius-kantor", "--n", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn product_grid_and_amalgam() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "p2.g6", "A_\n");
    let b = write(dir.path(), "p4.g6", "Ch\n");
    assert!(are_isomorphic(&parse_graph6("Ch").unwrap(), &path(4).unwrap()).unwrap());
    let o = zfpd(&["product", "--kind", "cartesian", &a, &b]);
    assert!(o.status.success());
    let grid = parse_graph6(stdout(&o).trim()).unwrap();
    let want = cartesian_product(&path(2).unwrap(), &path(4).unwrap()).unwrap().0;
    assert!(are_isomorphic(&grid, &want).unwrap());

    let o = zfpd(&["product", "--kind", "amalgam", &a, &a, "--at", "1,0"]);
    let g = parse_graph6(stdout(&o).trim()).unwrap();
    assert!(are_isomorphic(&g, &path(3).unwrap()).unwrap());

    let o = zfpd(&["product", "--kind", "amalgam", &a, &a]);
    assert_eq!(o.status.code(), Some(2));

    let out = dir.path().join("c.g6");
    let o = zfpd(&["product", "--kind", "lex", &a, &a, "--out", out.to_str().unwrap()]);
    assert!(o.status.success() && o.stdout.is_empty());
    let k4 = parse_graph6(std::fs::read_to_string(&out).unwrap().trim()).unwrap();
    assert_eq!(k4.size(), 6);
}

#[test]
fn verify_exit_codes() {
    let o = zfpd(&["verify", "--ids", "T1", "--max-n", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["reports"][0]["graphs_checked"], 143);

    let o = zfpd(&["verify", "--ids", "BOGUS", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["errors"].as_array().unwrap().len(), 1);

    let o = zfpd(&["verify", "--ids", "T8", "--max-n", "6", "--format", "table"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("T8 [FAIL]"));

    let o = zfpd(&["verify", "--ids", "T1", "--no-builtin"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_with_universe_file_and_workers() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "u.g6", "EhEG\nEsa?\n");
    let o = zfpd(&["verify", "--ids", "T1", "--universe", &f, "--no-builtin", "--workers", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["reports"][0]["graphs_checked"], 2);
}

/// Report layout against a stored golden file, with timing zeroed.
#[test]
fn verify_json_matches_golden() {
    let o = zfpd(&["verify", "--ids", "T11,T14", "--max-n", "6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let mut v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for r in v["reports"].as_array_mut().unwrap() {
        r["elapsed_ms"] = Value::from(0);
    }
    let golden: Value =
        serde_json::from_str(include_str!("golden/verify_t11_t14.json")).unwrap();
    assert_eq!(v, golden);
}

#[test]
fn library_entry_point() {
    use clap::Parser;
    let cli = zfpd_cli::Cli::parse_from(["zfpd", "gen", "--family", "cycle", "--n", "6"]);
    let out = zfpd_cli::run(cli, false).unwrap();
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "EhEG\n");
    let report = zfpd_cli::compute_report(
        &[cycle(5).unwrap()],
        &[zfpd::invariants::Parameter::ZeroForcing],
    );
    assert_eq!(report.graphs[0].values[0].value, 2);
}
