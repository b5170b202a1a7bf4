// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

use std::path::Path;
use std::process::{Command, Output};

fn fcolor(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fcolor")).current_dir(dir).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(dir: &Path, file: &str, args: &[&str]) {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", file]);
    assert_eq!(fcolor(dir, &full).status.code(), Some(0));
}

#[test]
fn odd_cycle_is_class2_by_exact_search() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "c5.fgr", &["cycle", "5"]);
    let o = fcolor(dir.path(), &["classify", "c5.fgr"]);
    assert_eq!(o.status.code(), Some(2));
    let text = stdout(&o);
    assert!(text.contains("class: class2"));
    assert!(text.contains("rule: EXACT"));
}

#[test]
fn bipartite_is_class1_with_json_witness() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "k33.fgr", &["complete_bipartite", "3", "3"]);
    let o = fcolor(dir.path(), &["classify", "k33.fgr", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["class"], "class1");
    assert_eq!(v["rule"], "BIPARTITE");
    assert_eq!(v["delta_f"], 3);
    assert_eq!(v["witness"]["k"], 3);
}

#[test]
fn tampered_coloring_names_the_vertex() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "k33.fgr", &["complete_bipartite", "3", "3"]);
    let col = fcolor(dir.path(), &["color", "k33.fgr"]);
    assert_eq!(col.status.code(), Some(0));
    std::fs::write(dir.path().join("good.json"), &col.stdout).unwrap();
    assert_eq!(fcolor(dir.path(), &["verify", "k33.fgr", "good.json"]).status.code(), Some(0));

    let mut v: serde_json::Value = serde_json::from_slice(&col.stdout).unwrap();
    let edges = v["edges"].as_array_mut().unwrap();
    let first = edges[0].clone();
    let other = edges.iter().position(|e| e[0] == first[0] && e[2] != first[2]).unwrap();
    edges[other][2] = first[2].clone();
    std::fs::write(dir.path().join("bad.json"), serde_json::to_string(&v).unwrap()).unwrap();
    let o = fcolor(dir.path(), &["verify", "k33.fgr", "bad.json"]);
    assert_eq!(o.status.code(), Some(2));
    let vertex = first[0].as_u64().unwrap();
    assert!(stdout(&o).contains(&format!("invalid: vertex {vertex} has 2 edges of color {}", first[2])));
}

#[test]
fn requested_palette_is_honoured() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "k5.fgr", &["complete", "5", "--f", "const:2"]);
    let o = fcolor(dir.path(), &["color", "k5.fgr", "--colors", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["k"], 2);
    gen(dir.path(), "c5.fgr", &["cycle", "5"]);
    assert_eq!(fcolor(dir.path(), &["color", "c5.fgr", "--colors", "2"]).status.code(), Some(1));
}

#[test]
fn oracle_reports_chi_f() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "w.fgr", &["graph_w"]);
    let o = fcolor(dir.path(), &["oracle", "w.fgr", "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["chi_f"], 4);
}

#[test]
fn usage_and_missing_input_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(fcolor(dir.path(), &["bogus"]).status.code(), Some(64));
    assert_eq!(fcolor(dir.path(), &["classify"]).status.code(), Some(64));
    assert_eq!(fcolor(dir.path(), &["gen", "nosuch"]).status.code(), Some(64));
    assert_eq!(fcolor(dir.path(), &["classify", "missing.fgr"]).status.code(), Some(66));
    std::fs::write(dir.path().join("bad.fgr"), "p fgraph 2 1\nf 1 1\ne 1 1\n").unwrap();
    let o = fcolor(dir.path(), &["classify", "bad.fgr"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn batch_lists_every_file_in_order() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "a.fgr", &["cycle", "5"]);
    gen(dir.path(), "b.fgr", &["complete_bipartite", "2", "3"]);
    gen(dir.path(), "c.fgr", &["complete", "4", "--f", "const:2"]);
    let o = fcolor(dir.path(), &["batch", "."]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(
        lines,
        ["a.fgr class2 EXACT delta_f=2", "b.fgr class1 BIPARTITE delta_f=3", "c.fgr class1 EVEN_F delta_f=2"]
    );
}

#[test]
fn export_dot_colors_edges() {
    let dir = tempfile::tempdir().unwrap();
    gen(dir.path(), "p.fgr", &["path", "3"]);
    let plain = stdout(&fcolor(dir.path(), &["export-dot", "p.fgr"]));
    assert!(plain.starts_with("graph G {"));
    assert!(plain.contains("1 -- 2"));
    let col = fcolor(dir.path(), &["color", "p.fgr"]);
    std::fs::write(dir.path().join("p.json"), &col.stdout).unwrap();
    let colored = stdout(&fcolor(dir.path(), &["export-dot", "p.fgr", "--coloring", "p.json"]));
    assert!(colored.contains("color="));
}
