use std::path::Path;
use std::process::{Command, Output};

fn qgkm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgkm"))
        .args(args)
        .output()
        .expect("spawn qgkm")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn graph_n_zero_is_usage_error() {
    let o = qgkm(&["graph", "--n", "0"]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
}

#[test]
fn graph_text_lists_labels() {
    let o = qgkm(&["graph", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("f(1) = -x3"), "{}", s);
    assert!(s.contains("f(6) = x2"), "{}", s);
    assert!(s.contains("alpha(1,5) = -x1 + x2 + x3"), "{}", s);
}

#[test]
fn graph_dot_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.dot");
    let o = qgkm(&["graph", "--n", "2", "--format", "dot", "--out", path_str(&out)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let s = std::fs::read_to_string(&out).unwrap();
    assert!(s.starts_with("graph"), "{}", s);
    // the 3 bar-pairs are the only missing edges
    assert_eq!(s.matches(" -- ").count(), 12);
}

#[test]
fn hilbert_rejects_dot() {
    let o = qgkm(&["hilbert", "--n", "2", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unknown_subcommand_is_usage_error() {
    assert_eq!(qgkm(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qgkm(&["verify"]).status.code(), Some(2));
}

#[test]
fn verify_passes_on_built_graph() {
    let o = qgkm(&["verify", "--n", "2", "--seed", "11"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("all suites pass"));
}

#[test]
fn verify_catches_corrupted_graph() {
    let dir = tempfile::tempdir().unwrap();
    let good = qgkm(&["graph", "--n", "2", "--format", "json"]);
    assert_eq!(good.status.code(), Some(0));
    let mut g: serde_json::Value = serde_json::from_slice(&good.stdout).unwrap();

    let path = dir.path().join("good.json");
    std::fs::write(&path, serde_json::to_string(&g).unwrap()).unwrap();
    let o = qgkm(&["verify", "--graph", path_str(&path)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    // flip the sign of alpha(1,2) = x1
    let first = &mut g["alpha"][0];
    assert_eq!(first["edge"], serde_json::json!([1, 2]));
    assert_eq!(first["value"], "x1");
    first["value"] = "-x1".into();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, serde_json::to_string(&g).unwrap()).unwrap();

    let o = qgkm(&["verify", "--graph", path_str(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("witness"), "{}", s);
    assert!(s.contains("alpha(1,2) = -x1"), "{}", s);
}

#[test]
fn verify_graph_file_n_mismatch_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let good = qgkm(&["graph", "--n", "2", "--format", "json"]);
    let path = dir.path().join("g.json");
    std::fs::write(&path, &good.stdout).unwrap();
    let o = qgkm(&["verify", "--n", "3", "--graph", path_str(&path)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn reduce_class_and_violation() {
    let dir = tempfile::tempdir().unwrap();
    // M_1 at n = 2: M_1(j) = alpha(j,1) = -alpha(1,j)
    let m1 = dir.path().join("m1.json");
    std::fs::write(
        &m1,
        r#"{"1":"0","2":"-x1","3":"-x2","4":"-x3","5":"x1 - x2 - x3","6":"-x2 - x3"}"#,
    )
    .unwrap();
    let o = qgkm(&["reduce", "--n", "2", path_str(&m1)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "h = (1)*M_1");

    let o = qgkm(&["reduce", "--n", "2", path_str(&m1), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["g_poly"], serde_json::json!(["0", "1", "0"]));

    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"1":"0","2":"-x2","3":"-x2","4":"-x3","5":"x1 - x2 - x3","6":"-x2 - x3"}"#,
    )
    .unwrap();
    let o = qgkm(&["reduce", "--n", "2", path_str(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("edge 1-2"), "{}", stderr(&o));
}

#[test]
fn reduce_malformed_input_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("junk.json");
    std::fs::write(&p, r#"{"1":"x1 +"}"#).unwrap();
    assert_eq!(qgkm(&["reduce", "--n", "2", path_str(&p)]).status.code(), Some(2));
    let missing = dir.path().join("missing.json");
    assert_eq!(qgkm(&["reduce", "--n", "2", path_str(&missing)]).status.code(), Some(2));
}

#[test]
fn product_worked_instance() {
    let o = qgkm(&["product", "--n", "2", "--K", "2,3,6", "--H", "3,5,6"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("equal: true"), "{}", s);
    assert!(s.contains("M_1 + M_4 - X"), "{}", s);
    assert!(s.contains("Delta_{3,6}"), "{}", s);
}

#[test]
fn product_rejects_bad_set() {
    let o = qgkm(&["product", "--n", "2", "--K", "1,6", "--H", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hilbert_table_text_and_csv() {
    let o = qgkm(&["hilbert", "--n", "2", "--max-d", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("expected"));
    assert!(s.contains("ranks: 1,4,11,23,41"), "{}", s);

    let o = qgkm(&["hilbert", "--n", "2", "--max-d", "4", "--format", "csv"]);
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "d,degree,rank,expected,torsion");
    assert_eq!(lines[5], "4,8,41,41,");
}

#[test]
fn ordinary_q6() {
    let o = qgkm(&["ordinary", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let s = stdout(&o);
    assert!(s.contains("Betti: (1,1,1,2,1,1,1)"), "{}", s);
    assert!(s.contains("x² ≡ 0"), "{}", s);
}

#[test]
fn ordinary_q4_json() {
    let o = qgkm(&["ordinary", "--n", "2", "--format", "json", "--sequential"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["betti"]["betti"], serde_json::json!([1, 1, 2, 1, 1]));
}
