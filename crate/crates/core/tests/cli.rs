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

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn linarb(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_linarb"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited")
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8(bytes.to_vec()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_then_exact_prints_four() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("petersen.txt");
    let o = linarb(
        &["gen", "--family", "petersen", "--out", path_str(&graph)],
        "",
    );
    assert_eq!(code(&o), 0);
    let o = linarb(&["exact", "--k", "1", path_str(&graph)], "");
    assert_eq!(code(&o), 0, "{}", text(&o.stderr));
    assert_eq!(text(&o.stdout).lines().next(), Some("4"));
}

#[test]
fn exhausted_budget_exits_3() {
    let graph = text(&linarb(&["gen", "--family", "petersen"], "").stdout);
    let o = linarb(&["exact", "--k", "2", "--budget-nodes", "2", "-"], &graph);
    assert_eq!(code(&o), 3);
    assert!(text(&o.stdout).contains("lower-bound-only"));
    let o = linarb(
        &[
            "decompose",
            "--method",
            "exact",
            "--k",
            "1",
            "--budget-ms",
            "0",
            "-",
        ],
        &graph,
    );
    assert_eq!(code(&o), 3);
}

#[test]
fn verify_accepts_and_rejects() {
    let dir = tempfile::tempdir().unwrap();
    let (graph, cert) = (dir.path().join("g.txt"), dir.path().join("c.json"));
    assert_eq!(
        code(&linarb(
            &["gen", "--family", "path:5", "-o", path_str(&graph)],
            ""
        )),
        0
    );
    assert_eq!(
        code(&linarb(
            &[
                "decompose",
                "--k",
                "2",
                "--family",
                "path:5",
                "-o",
                path_str(&cert)
            ],
            ""
        )),
        0
    );
    let good = std::fs::read_to_string(&cert).unwrap();
    assert_eq!(
        good.trim(),
        r#"{"k":2,"n":5,"forests":[[[0,1],[2,3]],[[1,2],[3,4]]]}"#
    );
    let o = linarb(&["verify", path_str(&graph), path_str(&cert)], "");
    assert_eq!(code(&o), 0);

    let cases = [
        (
            r#"{"k":2,"n":5,"forests":[[[0,1],[2,3]],[[1,2],[3,4],[0,1]]]}"#,
            "duplicate-edge",
        ),
        (r#"{"k":2,"n":5,"forests":[]}"#, "missing-edge"),
        (
            r#"{"k":1,"n":5,"forests":[[[0,1],[1,2],[2,3],[3,4]]]}"#,
            "component-too-long",
        ),
        (
            r#"{"k":4,"n":5,"forests":[[[0,1],[1,2],[2,3],[3,4],[0,4]]]}"#,
            "foreign-edge",
        ),
    ];
    for (bad, kind) in cases {
        std::fs::write(&cert, bad).unwrap();
        let o = linarb(&["verify", path_str(&graph), path_str(&cert)], "");
        assert_eq!(code(&o), 1, "{bad}");
        assert!(text(&o.stderr).contains(kind), "{bad}: {}", text(&o.stderr));
    }
    std::fs::write(&cert, r#"{"k":2,"n":5,"forests":[],"note":1}"#).unwrap();
    assert_eq!(
        code(&linarb(&["verify", path_str(&graph), path_str(&cert)], "")),
        2
    );
}

#[test]
fn parse_errors_exit_2_with_line() {
    let o = linarb(&["exact", "--k", "1", "-"], "2 1\n1 1\n");
    assert_eq!(code(&o), 2);
    assert!(text(&o.stderr).contains("line 2"));
    assert_eq!(code(&linarb(&["gen", "--family", "hypercube:99"], "")), 2);
    assert_eq!(code(&linarb(&["report", "--network", "torus:2,3"], "")), 2);
    assert_eq!(code(&linarb(&[], "")), 2);
}

#[test]
fn product_and_bounds() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.txt"), dir.path().join("b.txt"));
    linarb(&["gen", "--family", "path:4", "-o", path_str(&a)], "");
    linarb(&["gen", "--family", "path:3", "-o", path_str(&b)], "");
    let o = linarb(
        &["product", "--kind", "cartesian", path_str(&a), path_str(&b)],
        "",
    );
    assert_eq!(code(&o), 0);
    assert!(text(&o.stdout).starts_with("12 17\n"));
    let o = linarb(
        &[
            "bounds",
            "--k",
            "3",
            "--kind",
            "strong",
            path_str(&a),
            path_str(&b),
        ],
        "",
    );
    assert_eq!(code(&o), 0);
    assert!(
        text(&o.stdout).starts_with("k=3 [4, 4]"),
        "{}",
        text(&o.stdout)
    );
    let o = linarb(&["bounds", "--k", "1", "--kind", "join", path_str(&a)], "");
    assert_eq!(code(&o), 2);
}

#[test]
fn report_is_deterministic() {
    let args = [
        "report",
        "--network",
        "grid",
        "--params",
        "4,3",
        "--k",
        "1,2,3,4",
    ];
    let first = linarb(&args, "");
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, linarb(&args, "").stdout);
    let csv = text(&first.stdout);
    assert_eq!(csv.lines().count(), 17);
    let o = linarb(
        &[
            "report",
            "--network",
            "hyper_petersen_lex:4",
            "--k",
            "1",
            "--format",
            "text",
        ],
        "",
    );
    assert_eq!(code(&o), 0);
    assert!(text(&o.stdout).contains("FLAG"));
}
