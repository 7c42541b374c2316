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

//! Immutable simple graphs on dense vertex labels `0..n` and generators for
//! the named families used throughout the crate.

use std::collections::VecDeque;
use std::fmt;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};

/// An undirected edge in normal form: `u() < v()`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Builds the normalized edge `{a, b}`. Panics on a self-loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "self-loop {a}-{a} is not an edge");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u, self.v)
    }

    /// The endpoint opposite to `x`, if `x` is an endpoint.
    pub fn other(self, x: usize) -> Option<usize> {
        if x == self.u {
            Some(self.v)
        } else if x == self.v {
            Some(self.u)
        } else {
            None
        }
    }

    pub fn touches(self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl From<(usize, usize)> for Edge {
    fn from((a, b): (usize, usize)) -> Self {
        Edge::new(a, b)
    }
}

/// Undirected simple graph with vertices `0..n`.
///
/// The edge list is kept sorted in normal form and every adjacency list is
/// sorted, so two graphs built from the same edge set compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and endpoints
    /// outside `0..n`.
    pub fn new<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<(usize, usize)>,
    {
        let mut list = Vec::new();
        for e in edges {
            let (a, b) = e.into();
            if a == b {
                return Err(Error::param(format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::param(format!(
                    "edge {a}-{b} has an endpoint outside 0..{n}"
                )));
            }
            list.push(Edge::new(a, b));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::param(format!("duplicate edge {}", w[0])));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    // `edges` must be sorted, deduplicated and in range.
    pub(crate) fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Builds from edges produced by a trusted generator (normalizes and sorts).
    pub(crate) fn from_generated(n: usize, mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        Self::from_sorted(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True iff the graph is not a forest.
    pub fn has_cycle(&self) -> bool {
        let mut uf = UnionFind::<usize>::new(self.n);
        self.edges.iter().any(|e| !uf.union(e.u, e.v))
    }

    /// Subgraph induced by `vertices`, relabeled to `0..vertices.len()` in the
    /// given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| local[e.u] != usize::MAX && local[e.v] != usize::MAX)
            .map(|e| Edge::new(local[e.u], local[e.v]))
            .collect();
        Graph::from_generated(vertices.len(), edges)
    }

    /// Spanning subgraph keeping only the listed edges (which must belong to
    /// this graph).
    pub fn edge_subgraph(&self, edges: &[Edge]) -> Result<Graph> {
        if let Some(e) = edges.iter().find(|e| !self.contains(**e)) {
            return Err(Error::param(format!("edge {e} is not in the graph")));
        }
        Graph::new(self.n, edges.iter().map(|e| e.endpoints()))
    }

    /// Disjoint union, `other` relabeled to start at `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(
                other
                    .edges
                    .iter()
                    .map(|e| Edge::new(e.u + shift, e.v + shift)),
            )
            .collect();
        Graph::from_sorted(self.n + other.n, edges)
    }
}

/// Named graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Path on `n` vertices (`n - 1` edges).
    Path(usize),
    /// Cycle on `n` vertices.
    Cycle(usize),
    /// Complete graph on `n` vertices.
    Complete(usize),
    /// Complete bipartite graph with parts of size `s` and `t`.
    CompleteBipartite(usize, usize),
    /// Hypercube of dimension `d` (`2^d` vertices).
    Hypercube(u32),
    Petersen,
    /// `n` isolated vertices.
    Empty(usize),
}

const MAX_HYPERCUBE_DIM: u32 = 20;

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Path(n) if n < 1 => Err(Error::param("path needs n >= 1")),
            FamilySpec::Cycle(n) if n < 3 => Err(Error::param("cycle needs n >= 3")),
            FamilySpec::Complete(n) if n < 1 => Err(Error::param("complete graph needs n >= 1")),
            FamilySpec::CompleteBipartite(s, t) if s < 1 || t < 1 => {
                Err(Error::param("complete bipartite graph needs s, t >= 1"))
            }
            FamilySpec::Hypercube(d) if d > MAX_HYPERCUBE_DIM => Err(Error::param(format!(
                "hypercube dimension is limited to {MAX_HYPERCUBE_DIM}"
            ))),
            _ => Ok(()),
        }
    }

    /// Parses a kind name plus integer parameters, e.g. `("cycle", [5])`.
    pub fn from_parts(kind: &str, params: &[usize]) -> Result<Self> {
        let arity = |want: usize| -> Result<()> {
            if params.len() == want {
                Ok(())
            } else {
                Err(Error::param(format!(
                    "family {kind} takes {want} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        let spec = match kind {
            "path" => {
                arity(1)?;
                FamilySpec::Path(params[0])
            }
            "cycle" => {
                arity(1)?;
                FamilySpec::Cycle(params[0])
            }
            "complete" => {
                arity(1)?;
                FamilySpec::Complete(params[0])
            }
            "complete_bipartite" | "bipartite" => {
                arity(2)?;
                FamilySpec::CompleteBipartite(params[0], params[1])
            }
            "hypercube" => {
                arity(1)?;
                let d = u32::try_from(params[0])
                    .map_err(|_| Error::param("hypercube dimension too large"))?;
                FamilySpec::Hypercube(d)
            }
            "petersen" => {
                arity(0)?;
                FamilySpec::Petersen
            }
            "empty" => {
                arity(1)?;
                FamilySpec::Empty(params[0])
            }
            other => return Err(Error::param(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Parses `kind` or `kind:p1,p2`, e.g. `petersen`, `path:5`, `bipartite:2,3`.
    pub fn parse(text: &str) -> Result<Self> {
        let (kind, rest) = match text.split_once(':') {
            Some((k, r)) => (k, r),
            None => (text, ""),
        };
        let params = rest
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::param(format!("bad family parameter {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(kind.trim(), &params)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::CompleteBipartite(s, t) => write!(f, "complete_bipartite:{s},{t}"),
            FamilySpec::Hypercube(d) => write!(f, "hypercube:{d}"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
        }
    }
}

/// Outer 5-cycle on 0..5, inner pentagram 5-7-9-6-8-5, spokes i-(i+5).
pub(crate) fn petersen_edges() -> Vec<Edge> {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push(Edge::new(i, (i + 1) % 5));
        edges.push(Edge::new(5 + i, 5 + (i + 2) % 5));
        edges.push(Edge::new(i, i + 5));
    }
    edges
}

/// Builds the canonical labeled graph for `spec`.
pub fn build_family(spec: FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let g = match spec {
        FamilySpec::Path(n) => {
            Graph::from_generated(n, (1..n).map(|i| Edge::new(i - 1, i)).collect())
        }
        FamilySpec::Cycle(n) => {
            Graph::from_generated(n, (0..n).map(|i| Edge::new(i, (i + 1) % n)).collect())
        }
        FamilySpec::Complete(n) => Graph::from_generated(
            n,
            (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| Edge::new(a, b)))
                .collect(),
        ),
        FamilySpec::CompleteBipartite(s, t) => Graph::from_generated(
            s + t,
            (0..s)
                .flat_map(|a| (0..t).map(move |b| Edge::new(a, s + b)))
                .collect(),
        ),
        FamilySpec::Hypercube(d) => {
            let n = 1usize << d;
            let edges = (0..n)
                .flat_map(|v| {
                    (0..d).filter_map(move |bit| {
                        let w = v ^ (1 << bit);
                        (v < w).then(|| Edge::new(v, w))
                    })
                })
                .collect();
            Graph::from_generated(n, edges)
        }
        FamilySpec::Petersen => Graph::from_generated(10, petersen_edges()),
        FamilySpec::Empty(n) => Graph::empty(n),
    };
    Ok(g)
}

/// `(max degree, edge count)`.
pub fn degree_stats(g: &Graph) -> (usize, usize) {
    (g.max_degree(), g.edge_count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(g: &Graph) -> Vec<(usize, usize)> {
        g.edges().iter().map(|e| e.endpoints()).collect()
    }

    #[test]
    fn path_five() {
        let g = build_family(FamilySpec::Path(5)).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(pairs(&g), vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
    }

    #[test]
    fn petersen_shape() {
        let g = build_family(FamilySpec::Petersen).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
        // inner pentagram as labeled 6-8-10-7-9 one-indexed
        for (a, b) in [(5, 7), (7, 9), (9, 6), (6, 8), (8, 5)] {
            assert!(g.has_edge(a, b));
        }
        assert_eq!(degree_stats(&g), (3, 15));
    }

    #[test]
    fn small_families() {
        let q0 = build_family(FamilySpec::Hypercube(0)).unwrap();
        assert_eq!((q0.vertex_count(), q0.edge_count()), (1, 0));
        assert_eq!(
            build_family(FamilySpec::Complete(4)).unwrap().edge_count(),
            6
        );
        assert_eq!(
            degree_stats(&build_family(FamilySpec::Path(2)).unwrap()),
            (1, 1)
        );
        assert_eq!(
            degree_stats(&build_family(FamilySpec::Complete(5)).unwrap()),
            (4, 10)
        );
        let k23 = build_family(FamilySpec::CompleteBipartite(2, 3)).unwrap();
        assert_eq!((k23.vertex_count(), k23.edge_count()), (5, 6));
        let q3 = build_family(FamilySpec::Hypercube(3)).unwrap();
        assert_eq!(
            (q3.vertex_count(), q3.edge_count(), q3.max_degree()),
            (8, 12, 3)
        );
    }

    #[test]
    fn invalid_params_name_the_constraint() {
        let err = build_family(FamilySpec::Cycle(2)).unwrap_err();
        assert!(err.to_string().contains("n >= 3"), "{err}");
        assert!(build_family(FamilySpec::Path(0)).is_err());
        assert!(build_family(FamilySpec::CompleteBipartite(0, 2)).is_err());
        assert!(FamilySpec::parse("cycle:1").is_err());
        assert!(FamilySpec::parse("wheel:5").is_err());
    }

    #[test]
    fn parse_round_trips_display() {
        for s in [
            "path:5",
            "cycle:7",
            "complete:4",
            "complete_bipartite:2,3",
            "hypercube:3",
            "petersen",
            "empty:2",
        ] {
            assert_eq!(FamilySpec::parse(s).unwrap().to_string(), s);
        }
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
    }

    #[test]
    fn cycle_detection_and_components() {
        let c = build_family(FamilySpec::Cycle(4)).unwrap();
        assert!(c.has_cycle());
        let p = build_family(FamilySpec::Path(4)).unwrap();
        assert!(!p.has_cycle());
        let u = p.disjoint_union(&c);
        assert_eq!(u.components(), vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]]);
        assert_eq!(u.induced(&[4, 5, 6, 7]), c);
    }
}
