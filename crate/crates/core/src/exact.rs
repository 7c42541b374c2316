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

//! Exact linear `k`-arboricity by branch and bound, plus a brute-force oracle
//! for very small graphs.
//!
//! The search assigns edges in a fixed order (larger endpoint degree first,
//! then lexicographic) to at most `t` classes. Each class keeps per-vertex
//! degrees and a union-find whose roots carry component edge counts, so an
//! assignment is accepted iff both endpoints have class degree below 2, they
//! lie in different class components, and the merged path has at most `k`
//! edges. Classes are opened in index order.

use std::time::{Duration, Instant};

use crate::bounds::lower_bound;
use crate::error::{Error, Result};
use crate::forest::Decomposition;
use crate::graph::{Edge, Graph};

/// Largest edge count accepted by [`brute_force_la_k`].
pub const BRUTE_FORCE_EDGE_LIMIT: usize = 10;

/// Search limits; the first one reached stops the search. `None` is
/// unlimited and a zero limit is exhausted before the first node.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_millis: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn millis(ms: u64) -> Self {
        Budget {
            max_nodes: None,
            max_millis: Some(ms),
        }
    }

    pub fn nodes(n: u64) -> Self {
        Budget {
            max_nodes: Some(n),
            max_millis: None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Exact,
    /// The budget ran out; `value` is only a lower bound.
    LowerBoundOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Certificate(Decomposition),
    Infeasible,
    BudgetExhausted,
}

#[derive(Clone, Debug)]
pub struct ExactResult {
    pub value: usize,
    /// Present iff `status` is [`SolveStatus::Exact`].
    pub certificate: Option<Decomposition>,
    pub stats: SolveStats,
    pub status: SolveStatus,
}

struct Meter {
    budget: Budget,
    start: Instant,
    nodes: u64,
}

impl Meter {
    fn new(budget: Budget) -> Self {
        Meter {
            budget,
            start: Instant::now(),
            nodes: 0,
        }
    }

    /// Counts one node; true once the budget is spent.
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.budget.max_nodes.is_some_and(|max| self.nodes > max) {
            return true;
        }
        match self.budget.max_millis {
            Some(ms) if self.nodes % 256 == 1 => self.start.elapsed().as_millis() >= u128::from(ms),
            _ => false,
        }
    }

    fn stats(&self) -> SolveStats {
        SolveStats {
            nodes: self.nodes,
            elapsed: self.start.elapsed(),
        }
    }
}

enum Outcome {
    Found,
    Dead,
    Exhausted,
}

struct Undo {
    class: usize,
    child: usize,
    root: usize,
    root_size: u32,
    root_count: u32,
}

struct Search<'m> {
    n: usize,
    k: u32,
    t: usize,
    edges: Vec<(usize, usize)>,
    deg: Vec<u8>,
    parent: Vec<u32>,
    size: Vec<u32>,
    count: Vec<u32>,
    rem: Vec<u32>,
    class_of: Vec<usize>,
    open: usize,
    meter: &'m mut Meter,
}

impl<'m> Search<'m> {
    fn new(g: &Graph, k: usize, t: usize, meter: &'m mut Meter) -> Self {
        let n = g.vertex_count();
        let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|e| e.endpoints()).collect();
        edges.sort_by_key(|&(u, v)| (std::cmp::Reverse(g.degree(u).max(g.degree(v))), u, v));
        let cells = t * n;
        Search {
            n,
            k: u32::try_from(k).unwrap_or(u32::MAX),
            t,
            deg: vec![0; cells],
            parent: (0..cells).map(|i| (i % n.max(1)) as u32).collect(),
            size: vec![1; cells],
            count: vec![0; cells],
            rem: (0..n).map(|v| g.degree(v) as u32).collect(),
            class_of: vec![usize::MAX; edges.len()],
            edges,
            open: 0,
            meter,
        }
    }

    fn find(&self, class: usize, mut x: usize) -> usize {
        let base = class * self.n;
        while self.parent[base + x] as usize != x {
            x = self.parent[base + x] as usize;
        }
        x
    }

    fn try_assign(&mut self, class: usize, u: usize, v: usize) -> Option<Undo> {
        let base = class * self.n;
        if self.deg[base + u] >= 2 || self.deg[base + v] >= 2 {
            return None;
        }
        let (ru, rv) = (self.find(class, u), self.find(class, v));
        if ru == rv || self.count[base + ru] + self.count[base + rv] + 1 > self.k {
            return None;
        }
        let (root, child) = if self.size[base + ru] >= self.size[base + rv] {
            (ru, rv)
        } else {
            (rv, ru)
        };
        let undo = Undo {
            class,
            child,
            root,
            root_size: self.size[base + root],
            root_count: self.count[base + root],
        };
        self.parent[base + child] = root as u32;
        self.size[base + root] += self.size[base + child];
        self.count[base + root] += self.count[base + child] + 1;
        self.deg[base + u] += 1;
        self.deg[base + v] += 1;
        Some(undo)
    }

    fn revert(&mut self, undo: Undo, u: usize, v: usize) {
        let base = undo.class * self.n;
        self.parent[base + undo.child] = undo.child as u32;
        self.size[base + undo.root] = undo.root_size;
        self.count[base + undo.root] = undo.root_count;
        self.deg[base + u] -= 1;
        self.deg[base + v] -= 1;
    }

    /// Whether the classes can still absorb the unassigned edges at `x`.
    fn room_at(&self, x: usize) -> bool {
        let fresh = self.k.min(2);
        let mut room = fresh * (self.t - self.open) as u32;
        for class in 0..self.open {
            room += match self.deg[class * self.n + x] {
                0 => fresh,
                1 if self.count[class * self.n + self.find(class, x)] < self.k => 1,
                _ => 0,
            };
            if room >= self.rem[x] {
                return true;
            }
        }
        room >= self.rem[x]
    }

    fn dfs(&mut self, i: usize) -> Outcome {
        if i == self.edges.len() {
            return Outcome::Found;
        }
        if self.meter.tick() {
            return Outcome::Exhausted;
        }
        let (u, v) = self.edges[i];
        self.rem[u] -= 1;
        self.rem[v] -= 1;
        for class in 0..(self.open + 1).min(self.t) {
            let Some(undo) = self.try_assign(class, u, v) else {
                continue;
            };
            let opened = class == self.open;
            if opened {
                self.open += 1;
            }
            if self.room_at(u) && self.room_at(v) {
                match self.dfs(i + 1) {
                    Outcome::Found => {
                        self.class_of[i] = class;
                        return Outcome::Found;
                    }
                    Outcome::Exhausted => return Outcome::Exhausted,
                    Outcome::Dead => {}
                }
            }
            if opened {
                self.open -= 1;
            }
            self.revert(undo, u, v);
        }
        self.rem[u] += 1;
        self.rem[v] += 1;
        Outcome::Dead
    }

    fn classes(&self) -> Vec<Vec<Edge>> {
        let mut out = vec![Vec::new(); self.open];
        for (&(u, v), &c) in self.edges.iter().zip(&self.class_of) {
            out[c].push(Edge::new(u, v));
        }
        out
    }
}

enum Settled {
    Classes(Vec<Vec<Edge>>),
    Infeasible,
    Exhausted,
}

/// Decides one connected graph with `t` classes.
fn search_component(g: &Graph, k: usize, t: usize, meter: &mut Meter) -> Settled {
    if g.edge_count() == 0 {
        return Settled::Classes(Vec::new());
    }
    if t == 0 {
        return Settled::Infeasible;
    }
    let mut search = Search::new(g, k, t, meter);
    match search.dfs(0) {
        Outcome::Found => Settled::Classes(search.classes()),
        Outcome::Dead => Settled::Infeasible,
        Outcome::Exhausted => Settled::Exhausted,
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::param("k must be at least 1"))
    } else {
        Ok(())
    }
}

/// Nontrivial components as `(original labels, induced graph)`.
fn edge_components(g: &Graph) -> Vec<(Vec<usize>, Graph)> {
    g.components()
        .into_iter()
        .filter(|c| c.len() > 1)
        .map(|c| {
            let sub = g.induced(&c);
            (c, sub)
        })
        .collect()
}

/// Merges per-component classes index by index into one decomposition.
fn merge(k: usize, n: usize, parts: &[(Vec<usize>, Vec<Vec<Edge>>)]) -> Decomposition {
    let width = parts.iter().map(|(_, c)| c.len()).max().unwrap_or(0);
    let mut forests = vec![Vec::new(); width];
    for (labels, classes) in parts {
        for (i, class) in classes.iter().enumerate() {
            forests[i].extend(
                class
                    .iter()
                    .map(|e| Edge::new(labels[e.u()], labels[e.v()])),
            );
        }
    }
    Decomposition::new(k, n, forests)
}

/// Decides whether `g` splits into at most `t` linear `k`-forests.
pub fn feasible_with_t_classes(
    g: &Graph,
    k: usize,
    t: usize,
    budget: Budget,
) -> Result<Feasibility> {
    check_k(k)?;
    let mut meter = Meter::new(budget);
    let mut parts = Vec::new();
    for (labels, sub) in edge_components(g) {
        match search_component(&sub, k, t, &mut meter) {
            Settled::Classes(c) => parts.push((labels, c)),
            Settled::Infeasible => return Ok(Feasibility::Infeasible),
            Settled::Exhausted => return Ok(Feasibility::BudgetExhausted),
        }
    }
    Ok(Feasibility::Certificate(merge(k, g.vertex_count(), &parts)))
}

/// `la_k(g)` with a certificate. Components are solved separately, each
/// starting from the larger of its own lower bound and the best value so far.
pub fn exact_la_k(g: &Graph, k: usize, budget: Budget) -> Result<ExactResult> {
    check_k(k)?;
    let mut meter = Meter::new(budget);
    let mut value = 0;
    let mut parts = Vec::new();
    let mut exhausted = false;
    for (labels, sub) in edge_components(g) {
        let mut t = lower_bound(&sub, k)?.max(value);
        loop {
            match search_component(&sub, k, t, &mut meter) {
                Settled::Classes(c) => {
                    parts.push((labels, c));
                    break;
                }
                Settled::Infeasible => t += 1,
                Settled::Exhausted => {
                    exhausted = true;
                    break;
                }
            }
        }
        value = value.max(t);
        if exhausted {
            break;
        }
    }
    let (certificate, status) = if exhausted {
        (None, SolveStatus::LowerBoundOnly)
    } else {
        (Some(merge(k, g.vertex_count(), &parts)), SolveStatus::Exact)
    };
    Ok(ExactResult {
        value,
        certificate,
        stats: meter.stats(),
        status,
    })
}

/// Longest path length in `block` if it is a linear forest.
fn block_need(n: usize, block: &[Edge]) -> Option<usize> {
    let mut deg = vec![0usize; n];
    let mut comp: Vec<usize> = (0..n).collect();
    let mut edges = vec![0usize; n];
    for e in block {
        let (a, b) = e.endpoints();
        deg[a] += 1;
        deg[b] += 1;
        if deg[a] > 2 || deg[b] > 2 || comp[a] == comp[b] {
            return None;
        }
        let (keep, drop) = (comp[a], comp[b]);
        for c in comp.iter_mut() {
            if *c == drop {
                *c = keep;
            }
        }
        edges[keep] += edges[drop] + 1;
    }
    (0..n).filter(|&v| comp[v] == v).map(|v| edges[v]).max()
}

/// `la_k(g)` for `k = 1..=max(|E|, 1)` by enumerating every partition of the
/// edge set. Entry `i` holds `la_{i+1}`.
pub fn brute_force_profile(g: &Graph) -> Result<Vec<usize>> {
    let m = g.edge_count();
    if m > BRUTE_FORCE_EDGE_LIMIT {
        return Err(Error::TooLarge {
            edges: m,
            limit: BRUTE_FORCE_EDGE_LIMIT,
        });
    }
    let mut best = vec![usize::MAX; m.max(1)];
    if m == 0 {
        best[0] = 0;
        return Ok(best);
    }
    let mut labels = vec![0usize; m];
    let mut blocks: Vec<Vec<Edge>> = Vec::new();
    fn walk(
        g: &Graph,
        i: usize,
        labels: &mut Vec<usize>,
        blocks: &mut Vec<Vec<Edge>>,
        best: &mut [usize],
        used: usize,
    ) {
        let m = labels.len();
        if i == m {
            blocks.clear();
            blocks.resize(used, Vec::new());
            for (e, &l) in g.edges().iter().zip(labels.iter()) {
                blocks[l].push(*e);
            }
            let mut need = 0;
            for b in blocks.iter() {
                match block_need(g.vertex_count(), b) {
                    Some(x) => need = need.max(x),
                    None => return,
                }
            }
            for slot in best.iter_mut().skip(need.max(1) - 1) {
                *slot = (*slot).min(used);
            }
            return;
        }
        for l in 0..=used {
            labels[i] = l;
            walk(g, i + 1, labels, blocks, best, used.max(l + 1));
        }
    }
    walk(g, 0, &mut labels, &mut blocks, &mut best, 0);
    Ok(best)
}

/// `la_k(g)` by exhaustive enumeration; limited to
/// [`BRUTE_FORCE_EDGE_LIMIT`] edges.
pub fn brute_force_la_k(g: &Graph, k: usize) -> Result<usize> {
    check_k(k)?;
    let profile = brute_force_profile(g)?;
    Ok(profile[(k - 1).min(profile.len() - 1)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::verify_decomposition;
    use crate::graph::{build_family, FamilySpec};

    fn fam(s: FamilySpec) -> Graph {
        build_family(s).unwrap()
    }

    fn exact(g: &Graph, k: usize) -> usize {
        let r = exact_la_k(g, k, Budget::unlimited()).unwrap();
        assert_eq!(r.status, SolveStatus::Exact);
        let cert = r.certificate.unwrap();
        assert_eq!(verify_decomposition(g, &cert), Ok(()));
        assert_eq!(cert.len(), r.value);
        r.value
    }

    #[test]
    fn feasibility_examples() {
        let c5 = fam(FamilySpec::Cycle(5));
        let f = |g: &Graph, k, t| feasible_with_t_classes(g, k, t, Budget::unlimited()).unwrap();
        assert_eq!(f(&c5, 1, 2), Feasibility::Infeasible);
        assert!(matches!(f(&c5, 1, 3), Feasibility::Certificate(d) if d.len() == 3));
        assert!(
            matches!(f(&fam(FamilySpec::Path(2)), 1, 1), Feasibility::Certificate(d) if d.len() == 1)
        );
        assert!(matches!(f(&Graph::empty(3), 1, 0), Feasibility::Certificate(d) if d.is_empty()));
        assert_eq!(f(&fam(FamilySpec::Path(2)), 1, 0), Feasibility::Infeasible);
    }

    #[test]
    fn exact_examples() {
        let pet = fam(FamilySpec::Petersen);
        assert_eq!(exact(&pet, 3), 3);
        assert_eq!(exact(&pet, 1), 4);
        assert_eq!(exact(&fam(FamilySpec::Complete(4)), 2), 3);
        assert_eq!(exact(&fam(FamilySpec::Path(5)), 2), 2);
        assert_eq!(exact(&Graph::empty(4), 1), 0);
    }

    #[test]
    fn components_take_the_max() {
        let g = fam(FamilySpec::Cycle(5)).disjoint_union(&fam(FamilySpec::Path(3)));
        assert_eq!(exact(&g, 1), 3);
        let g = fam(FamilySpec::Path(2)).disjoint_union(&fam(FamilySpec::Complete(4)));
        assert_eq!(exact(&g, 1), 3);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let pet = fam(FamilySpec::Petersen);
        let r = exact_la_k(&pet, 1, Budget::nodes(5)).unwrap();
        assert_eq!(r.status, SolveStatus::LowerBoundOnly);
        assert!(r.certificate.is_none());
        assert!(r.value <= 4 && r.value >= 2);
        let r = exact_la_k(&pet, 2, Budget::millis(0)).unwrap();
        assert_eq!(r.status, SolveStatus::LowerBoundOnly);
        assert_eq!(
            feasible_with_t_classes(&pet, 1, 4, Budget::nodes(0)).unwrap(),
            Feasibility::BudgetExhausted
        );
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(brute_force_la_k(&fam(FamilySpec::Cycle(4)), 1).unwrap(), 2);
        assert_eq!(
            brute_force_la_k(&fam(FamilySpec::Complete(3)), 1).unwrap(),
            3
        );
        assert_eq!(brute_force_la_k(&fam(FamilySpec::Path(3)), 2).unwrap(), 1);
        assert_eq!(brute_force_la_k(&fam(FamilySpec::Path(3)), 7).unwrap(), 1);
        assert_eq!(brute_force_la_k(&Graph::empty(2), 1).unwrap(), 0);
        assert_eq!(
            brute_force_la_k(&fam(FamilySpec::Complete(5)), 1).unwrap(),
            5
        );
        assert!(matches!(
            brute_force_la_k(&fam(FamilySpec::Petersen), 1),
            Err(Error::TooLarge {
                edges: 15,
                limit: 10
            })
        ));
        assert!(exact_la_k(&Graph::empty(1), 0, Budget::unlimited()).is_err());
    }

    #[test]
    fn brute_force_matches_search_on_small_families() {
        for s in [
            FamilySpec::Path(6),
            FamilySpec::Cycle(5),
            FamilySpec::Cycle(6),
            FamilySpec::Complete(4),
            FamilySpec::Complete(5),
            FamilySpec::CompleteBipartite(2, 3),
        ] {
            let g = fam(s);
            let profile = brute_force_profile(&g).unwrap();
            for (i, &want) in profile.iter().enumerate() {
                assert_eq!(exact(&g, i + 1), want, "{s} k={}", i + 1);
            }
        }
    }
}
