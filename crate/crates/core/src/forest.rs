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

//! Linear k-forests, decompositions, and the verifier.
//!
//! A linear k-forest is an edge set whose components are paths with at most
//! `k` edges. A [`Decomposition`] is an ordered list of such forests that
//! partitions the edge set of a target graph; it witnesses `la_k <= len`.
//! Everything that builds a decomposition in this crate is checked against
//! [`verify_decomposition`].

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Edge set claimed to be a linear k-forest. Edges are kept sorted; duplicates
/// are preserved so the verifier can report them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearKForest {
    k: usize,
    edges: Vec<Edge>,
}

impl LinearKForest {
    pub fn new(k: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut edges: Vec<Edge> = edges.into_iter().collect();
        edges.sort_unstable();
        LinearKForest { k, edges }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Ordered list of nonempty linear k-forests on `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Decomposition {
    k: usize,
    n: usize,
    forests: Vec<LinearKForest>,
}

impl Decomposition {
    /// Empty edge sets are dropped.
    pub fn new<I, F>(k: usize, n: usize, forests: I) -> Self
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = Edge>,
    {
        let forests = forests
            .into_iter()
            .map(|f| LinearKForest::new(k, f))
            .filter(|f| !f.is_empty())
            .collect();
        Decomposition { k, n, forests }
    }

    pub fn empty(k: usize, n: usize) -> Self {
        Decomposition {
            k,
            n,
            forests: Vec::new(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn forests(&self) -> &[LinearKForest] {
        &self.forests
    }

    /// Number of (nonempty) forests.
    pub fn len(&self) -> usize {
        self.forests.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forests.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.forests.iter().map(LinearKForest::len).sum()
    }

    /// Same forests, reinterpreted at a larger length bound.
    pub fn relax(mut self, k: usize) -> Self {
        assert!(k >= self.k, "relax cannot shrink k from {} to {k}", self.k);
        self.k = k;
        for f in &mut self.forests {
            f.k = k;
        }
        self
    }

    /// Concatenates the forests of `other` after these ones.
    pub fn concat(mut self, other: Decomposition) -> Self {
        assert_eq!(
            self.n, other.n,
            "decompositions live on different vertex sets"
        );
        let k = self.k.max(other.k);
        self.forests.extend(other.forests);
        self.relax(k)
    }
}

/// What went wrong, with a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ViolationKind {
    /// A vertex meets three or more forest edges.
    DegreeExceeded { vertex: usize, degree: usize },
    /// `edge` closes a cycle.
    Cycle { edge: Edge },
    /// The component containing `vertex` (its smallest vertex) has `length` edges.
    ComponentTooLong { vertex: usize, length: usize },
    /// `edge` is not an edge of the target graph.
    ForeignEdge { edge: Edge },
    /// `edge` of the target graph is covered by no forest.
    MissingEdge { edge: Edge },
    /// `edge` is listed more than once.
    DuplicateEdge { edge: Edge },
}

impl ViolationKind {
    pub fn name(&self) -> &'static str {
        match self {
            ViolationKind::DegreeExceeded { .. } => "degree>2",
            ViolationKind::Cycle { .. } => "cycle",
            ViolationKind::ComponentTooLong { .. } => "component-too-long",
            ViolationKind::ForeignEdge { .. } => "foreign-edge",
            ViolationKind::MissingEdge { .. } => "missing-edge",
            ViolationKind::DuplicateEdge { .. } => "duplicate-edge",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Index of the offending forest, when the violation belongs to one.
    pub forest: Option<usize>,
    pub kind: ViolationKind,
}

impl Violation {
    fn at(forest: Option<usize>, kind: ViolationKind) -> Self {
        Violation { forest, kind }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind.name())?;
        match self.kind {
            ViolationKind::DegreeExceeded { vertex, degree } => {
                write!(f, " at vertex {vertex} (degree {degree})")?
            }
            ViolationKind::ComponentTooLong { vertex, length } => {
                write!(f, " at component of vertex {vertex} (length {length})")?
            }
            ViolationKind::Cycle { edge }
            | ViolationKind::ForeignEdge { edge }
            | ViolationKind::MissingEdge { edge }
            | ViolationKind::DuplicateEdge { edge } => write!(f, " at edge {edge}")?,
        }
        if let Some(i) = self.forest {
            write!(f, " in forest {i}")?;
        }
        Ok(())
    }
}

// Degree, acyclicity and component length for sorted edges already known to
// lie on vertices 0..n.
fn check_structure(n: usize, edges: &[Edge], k: usize) -> std::result::Result<(), ViolationKind> {
    let mut degree = vec![0usize; n];
    for e in edges {
        degree[e.u()] += 1;
        degree[e.v()] += 1;
    }
    if let Some((vertex, &degree)) = degree.iter().enumerate().find(|(_, &d)| d > 2) {
        return Err(ViolationKind::DegreeExceeded { vertex, degree });
    }
    let mut uf = UnionFind::<usize>::new(n);
    for &edge in edges {
        if !uf.union(edge.u(), edge.v()) {
            return Err(ViolationKind::Cycle { edge });
        }
    }
    let mut length = vec![0usize; n];
    for e in edges {
        length[uf.find(e.u())] += 1;
    }
    for vertex in 0..n {
        let root = uf.find(vertex);
        if length[root] > k {
            return Err(ViolationKind::ComponentTooLong {
                vertex,
                length: length[root],
            });
        }
    }
    Ok(())
}

fn check_membership(
    g: &Graph,
    edges: &[Edge],
    seen: &mut HashSet<Edge>,
) -> std::result::Result<(), ViolationKind> {
    for &edge in edges {
        if !g.contains(edge) {
            return Err(ViolationKind::ForeignEdge { edge });
        }
        if !seen.insert(edge) {
            return Err(ViolationKind::DuplicateEdge { edge });
        }
    }
    Ok(())
}

/// Checks that `f` is a linear `f.k()`-forest inside `g`.
///
/// Scan order: foreign and duplicate edges in sorted edge order, then degree
/// by ascending vertex, then cycles in edge order, then component length by
/// smallest vertex.
pub fn verify_forest(g: &Graph, f: &LinearKForest) -> std::result::Result<(), Violation> {
    let mut seen = HashSet::with_capacity(f.len());
    check_membership(g, f.edges(), &mut seen).map_err(|k| Violation::at(None, k))?;
    check_structure(g.vertex_count(), f.edges(), f.k()).map_err(|k| Violation::at(None, k))
}

/// Checks that `d` partitions `E(g)` into linear `d.k()`-forests.
///
/// Scan order: forests in order for foreign or repeated edges, then uncovered
/// edges of `g` in sorted order, then each forest's structure.
pub fn verify_decomposition(g: &Graph, d: &Decomposition) -> std::result::Result<(), Violation> {
    let mut seen = HashSet::with_capacity(g.edge_count());
    for (i, f) in d.forests().iter().enumerate() {
        check_membership(g, f.edges(), &mut seen).map_err(|k| Violation::at(Some(i), k))?;
    }
    if let Some(&edge) = g.edges().iter().find(|e| !seen.contains(e)) {
        return Err(Violation::at(None, ViolationKind::MissingEdge { edge }));
    }
    for (i, f) in d.forests().iter().enumerate() {
        check_structure(g.vertex_count(), f.edges(), d.k())
            .map_err(|k| Violation::at(Some(i), k))?;
    }
    Ok(())
}

/// The paths of a forest, each as a vertex sequence starting from its smaller
/// endpoint, ordered by that endpoint.
pub fn forest_components(f: &LinearKForest) -> Result<Vec<Vec<usize>>> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in f.edges() {
        adj.entry(e.u()).or_default().push(e.v());
        adj.entry(e.v()).or_default().push(e.u());
    }
    if let Some((v, nb)) = adj.iter().find(|(_, nb)| nb.len() > 2) {
        return Err(Error::MalformedForest(format!(
            "vertex {v} has degree {}",
            nb.len()
        )));
    }
    let mut visited: HashSet<usize> = HashSet::new();
    let mut paths = Vec::new();
    for (&start, nb) in &adj {
        if nb.len() != 1 || visited.contains(&start) {
            continue;
        }
        let mut path = vec![start];
        visited.insert(start);
        let (mut prev, mut cur) = (start, nb[0]);
        loop {
            if !visited.insert(cur) {
                return Err(Error::MalformedForest(format!("vertex {cur} revisited")));
            }
            path.push(cur);
            match adj[&cur].iter().find(|&&x| x != prev) {
                Some(&next) if adj[&cur].len() == 2 => {
                    prev = cur;
                    cur = next;
                }
                _ => break,
            }
        }
        paths.push(path);
    }
    let covered: usize = paths.iter().map(|p| p.len() - 1).sum();
    if covered != f.len() {
        return Err(Error::MalformedForest(
            "forest contains a cycle or a repeated edge".to_string(),
        ));
    }
    Ok(paths)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec};

    fn edges(list: &[(usize, usize)]) -> Vec<Edge> {
        list.iter().map(|&p| Edge::from(p)).collect()
    }

    #[test]
    fn petersen_spokes_are_a_matching() {
        let g = build_family(FamilySpec::Petersen).unwrap();
        let spokes = LinearKForest::new(1, edges(&[(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]));
        assert_eq!(verify_forest(&g, &spokes), Ok(()));
    }

    #[test]
    fn p3_is_too_long_for_k1() {
        let g = build_family(FamilySpec::Path(3)).unwrap();
        let f = LinearKForest::new(1, edges(&[(0, 1), (1, 2)]));
        let v = verify_forest(&g, &f).unwrap_err();
        assert_eq!(
            v.kind,
            ViolationKind::ComponentTooLong {
                vertex: 0,
                length: 2
            }
        );
    }

    #[test]
    fn triangle_is_a_cycle() {
        let g = build_family(FamilySpec::Cycle(3)).unwrap();
        let f = LinearKForest::new(3, g.edges().to_vec());
        let v = verify_forest(&g, &f).unwrap_err();
        assert_eq!(v.kind.name(), "cycle");
        assert_eq!(
            v.kind,
            ViolationKind::Cycle {
                edge: Edge::new(1, 2)
            }
        );
    }

    #[test]
    fn star_exceeds_degree() {
        let g = build_family(FamilySpec::CompleteBipartite(1, 3)).unwrap();
        let f = LinearKForest::new(5, g.edges().to_vec());
        let v = verify_forest(&g, &f).unwrap_err();
        assert_eq!(
            v.kind,
            ViolationKind::DegreeExceeded {
                vertex: 0,
                degree: 3
            }
        );
    }

    #[test]
    fn foreign_edge() {
        let g = build_family(FamilySpec::Path(3)).unwrap();
        let f = LinearKForest::new(1, edges(&[(0, 2)]));
        assert_eq!(
            verify_forest(&g, &f).unwrap_err().kind.name(),
            "foreign-edge"
        );
    }

    fn p5_alternating() -> (Graph, Decomposition) {
        let g = build_family(FamilySpec::Path(5)).unwrap();
        let d = Decomposition::new(2, 5, [edges(&[(0, 1), (2, 3)]), edges(&[(1, 2), (3, 4)])]);
        (g, d)
    }

    #[test]
    fn p5_alternating_matchings_verify() {
        let (g, d) = p5_alternating();
        assert_eq!(verify_decomposition(&g, &d), Ok(()));
    }

    #[test]
    fn p5_missing_edge() {
        let (g, _) = p5_alternating();
        let d = Decomposition::new(2, 5, [edges(&[(0, 1), (2, 3)]), edges(&[(1, 2)])]);
        let v = verify_decomposition(&g, &d).unwrap_err();
        assert_eq!(
            v.kind,
            ViolationKind::MissingEdge {
                edge: Edge::new(3, 4)
            }
        );
    }

    #[test]
    fn p5_duplicate_across_forests() {
        let (g, _) = p5_alternating();
        let d = Decomposition::new(
            2,
            5,
            [edges(&[(0, 1), (2, 3)]), edges(&[(0, 1), (1, 2), (3, 4)])],
        );
        let v = verify_decomposition(&g, &d).unwrap_err();
        assert_eq!(v.forest, Some(1));
        assert_eq!(
            v.kind,
            ViolationKind::DuplicateEdge {
                edge: Edge::new(0, 1)
            }
        );
    }

    #[test]
    fn empty_forests_are_dropped() {
        let d = Decomposition::new(1, 3, [vec![], edges(&[(0, 1)]), vec![]]);
        assert_eq!(d.len(), 1);
    }

    #[test]
    fn components() {
        let f = LinearKForest::new(2, edges(&[(0, 1), (1, 2)]));
        assert_eq!(forest_components(&f).unwrap(), vec![vec![0, 1, 2]]);
        let f = LinearKForest::new(1, edges(&[(0, 1), (2, 3)]));
        assert_eq!(forest_components(&f).unwrap(), vec![vec![0, 1], vec![2, 3]]);
        let f = LinearKForest::new(1, []);
        assert!(forest_components(&f).unwrap().is_empty());
        let f = LinearKForest::new(3, edges(&[(2, 1), (1, 4), (4, 0)]));
        assert_eq!(forest_components(&f).unwrap(), vec![vec![0, 4, 1, 2]]);
    }

    #[test]
    fn components_reject_malformed() {
        let tri = LinearKForest::new(3, edges(&[(0, 1), (1, 2), (0, 2)]));
        assert!(matches!(
            forest_components(&tri),
            Err(Error::MalformedForest(_))
        ));
        let star = LinearKForest::new(3, edges(&[(0, 1), (0, 2), (0, 3)]));
        assert!(forest_components(&star).is_err());
        let tri_plus = LinearKForest::new(3, edges(&[(0, 1), (1, 2), (0, 2), (4, 5)]));
        assert!(forest_components(&tri_plus).is_err());
    }
}
