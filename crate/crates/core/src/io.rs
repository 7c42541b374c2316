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

//! Text edge lists and certificate JSON.
//!
//! Edge list: a header line `n m`, then exactly `m` lines `u v` with
//! `0 <= u < v < n`. Blank lines are ignored; line numbers in errors are
//! 1-based and count every line.
//!
//! Certificate: `{"k":K,"n":N,"forests":[[[u,v],...],...]}` with `u < v` and
//! each forest's edges sorted.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forest::Decomposition;
use crate::graph::{Edge, Graph};

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let bad = |msg: String| Error::Parse { line, msg };
    let mut it = text.split_whitespace();
    let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
        return Err(bad(format!("expected two integers, got {text:?}")));
    };
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| bad(format!("not a non-negative integer: {s:?}")))
    };
    Ok((num(a)?, num(b)?))
}

/// Parses an edge list. Self-loops, `u > v`, out-of-range endpoints,
/// duplicate edges and a wrong edge count are rejected.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let Some((hline, header)) = lines.next() else {
        return Err(Error::Parse {
            line: 1,
            msg: "missing header \"n m\"".into(),
        });
    };
    let (n, m) = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for (line, text) in lines {
        let (u, v) = parse_pair(line, text)?;
        let bad = |msg: String| Err(Error::Parse { line, msg });
        if edges.len() == m {
            return bad(format!("more than {m} edge lines"));
        }
        if u == v {
            return bad(format!("self-loop at {u}"));
        }
        if u > v {
            return bad(format!("expected u < v, got {u} {v}"));
        }
        if v >= n {
            return bad(format!("vertex {v} out of range for n = {n}"));
        }
        if !seen.insert((u, v)) {
            return bad(format!("duplicate edge {u} {v}"));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        let line = text.lines().count().max(1);
        return Err(Error::Parse {
            line,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges)
}

/// Inverse of [`parse_graph`]: header, then edges in sorted order.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateDoc {
    k: usize,
    n: usize,
    forests: Vec<Vec<[usize; 2]>>,
}

/// Compact certificate JSON, no trailing newline.
pub fn emit_certificate(d: &Decomposition) -> String {
    let doc = CertificateDoc {
        k: d.k(),
        n: d.vertex_count(),
        forests: d
            .forests()
            .iter()
            .map(|f| f.edges().iter().map(|e| [e.u(), e.v()]).collect())
            .collect(),
    };
    serde_json::to_string(&doc).expect("certificate serializes")
}

/// Parses certificate JSON. Unknown fields, `k = 0`, edges with `u >= v` and
/// endpoints `>= n` are schema errors; duplicate or missing edges are left
/// for the verifier.
pub fn parse_certificate(text: &str) -> Result<Decomposition> {
    let doc: CertificateDoc =
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    if doc.k == 0 {
        return Err(Error::Schema("k must be at least 1".into()));
    }
    let mut forests = Vec::with_capacity(doc.forests.len());
    for (i, f) in doc.forests.iter().enumerate() {
        let mut edges = Vec::with_capacity(f.len());
        for &[u, v] in f {
            if u >= v {
                return Err(Error::Schema(format!(
                    "forest {i}: edge [{u},{v}] needs u < v"
                )));
            }
            if v >= doc.n {
                return Err(Error::Schema(format!(
                    "forest {i}: vertex {v} out of range for n = {}",
                    doc.n
                )));
            }
            edges.push(Edge::new(u, v));
        }
        forests.push(edges);
    }
    Ok(Decomposition::new(doc.k, doc.n, forests))
}
