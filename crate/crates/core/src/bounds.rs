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

//! Closed-form bounds on the linear k-arboricity and product bound intervals.
//!
//! Every number in a [`BoundReport`] carries a [`BoundSource`] naming the
//! argument that produced it.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::ProductKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundSource {
    /// `ceil(max degree / 2)`: every vertex meets each forest at most twice.
    HalfMaxDegree,
    /// `ceil(|E| / floor(k|V|/(k+1)))`: edge capacity of one linear k-forest.
    EdgeCapacity,
    /// A graph with a cycle needs two forests.
    NonForest,
    /// `la_1 = chromatic index <= max degree + 1`, and `la_k` is non-increasing in `k`.
    ChromaticIndex,
    /// Largest factor value: each factor is a subgraph of the Cartesian product.
    FactorMax,
    /// Sum of factor values: copy each factor's forests into every layer.
    CartesianSum,
    /// `ceil((max degree of one side + order of the other) / 2)` for the join.
    JoinDegree,
    /// Factor forests plus one perfect matching per vertex of the larger side.
    JoinMatchings,
    /// `ceil((D(H) + |V(H)| D(G)) / 2)` for the lexicographic product.
    LexDegree,
    /// `la(G) |V(H)| + la(H)`: parallel forests over every blown-up edge.
    LexParallel,
    /// `ceil(D(G) D(H) / 2)` for the direct product.
    DirectDegree,
    /// `2 la(G) la(H)`: alternating split of the first factor's paths.
    DirectSplit,
    /// `ceil((D(G)D(H) + D(G) + D(H)) / 2)` for the strong product.
    StrongDegree,
    /// Cartesian plus direct constructions.
    StrongSplit,
    /// `ceil(n/2) <= la_k(K_n) <= n`.
    CompleteGraph,
    /// Size of an explicit verified decomposition.
    Construction,
    /// Value computed by exhaustive search.
    Exact,
}

impl BoundSource {
    pub fn tag(self) -> &'static str {
        match self {
            BoundSource::HalfMaxDegree => "half-max-degree",
            BoundSource::EdgeCapacity => "edge-capacity",
            BoundSource::NonForest => "non-forest",
            BoundSource::ChromaticIndex => "chromatic-index",
            BoundSource::FactorMax => "factor-max",
            BoundSource::CartesianSum => "cartesian-sum",
            BoundSource::JoinDegree => "join-degree",
            BoundSource::JoinMatchings => "join-matchings",
            BoundSource::LexDegree => "lexicographic-degree",
            BoundSource::LexParallel => "lexicographic-parallel",
            BoundSource::DirectDegree => "direct-degree",
            BoundSource::DirectSplit => "direct-split",
            BoundSource::StrongDegree => "strong-degree",
            BoundSource::StrongSplit => "strong-split",
            BoundSource::CompleteGraph => "complete-graph",
            BoundSource::Construction => "construction",
            BoundSource::Exact => "exact",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Lower,
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoundTerm {
    pub side: Side,
    pub source: BoundSource,
    pub value: usize,
}

impl BoundTerm {
    pub fn lower(source: BoundSource, value: usize) -> Self {
        BoundTerm {
            side: Side::Lower,
            source,
            value,
        }
    }

    pub fn upper(source: BoundSource, value: usize) -> Self {
        BoundTerm {
            side: Side::Upper,
            source,
            value,
        }
    }
}

/// Interval `[lower, upper]` for `la_k` with the terms that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub k: usize,
    pub lower: usize,
    pub upper: Option<usize>,
    pub provenance: Vec<BoundTerm>,
}

impl BoundReport {
    /// Lower is the largest lower term (0 if none), upper the smallest upper term.
    pub fn from_terms(k: usize, provenance: Vec<BoundTerm>) -> Self {
        let lower = provenance
            .iter()
            .filter(|t| t.side == Side::Lower)
            .map(|t| t.value)
            .max()
            .unwrap_or(0);
        let upper = provenance
            .iter()
            .filter(|t| t.side == Side::Upper)
            .map(|t| t.value)
            .min();
        BoundReport {
            k,
            lower,
            upper,
            provenance,
        }
    }

    pub fn push(&mut self, term: BoundTerm) {
        self.provenance.push(term);
        *self = Self::from_terms(self.k, std::mem::take(&mut self.provenance));
    }

    pub fn is_exact(&self) -> bool {
        self.upper == Some(self.lower)
    }

    /// `lower: a=1, b=2; upper: c=3`
    pub fn provenance_string(&self) -> String {
        let side = |s: Side| {
            self.provenance
                .iter()
                .filter(|t| t.side == s)
                .map(|t| format!("{}={}", t.source.tag(), t.value))
                .collect::<Vec<_>>()
                .join(" ")
        };
        format!("lower: {}; upper: {}", side(Side::Lower), side(Side::Upper))
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.upper {
            Some(u) => write!(f, "k={} [{}, {}]", self.k, self.lower, u)?,
            None => write!(f, "k={} [{}, ?]", self.k, self.lower)?,
        }
        write!(f, " ({})", self.provenance_string())
    }
}

fn check_k(k: usize) -> Result<()> {
    if k < 1 {
        Err(Error::param("k must be at least 1"))
    } else {
        Ok(())
    }
}

/// The individual lower-bound terms behind [`lower_bound`].
pub fn lower_bound_terms(g: &Graph, k: usize) -> Result<Vec<BoundTerm>> {
    check_k(k)?;
    let edges = g.edge_count();
    if edges == 0 {
        return Ok(Vec::new());
    }
    let n = g.vertex_count();
    let capacity = k * n / (k + 1);
    let mut terms = vec![
        BoundTerm::lower(BoundSource::HalfMaxDegree, g.max_degree().div_ceil(2)),
        BoundTerm::lower(BoundSource::EdgeCapacity, edges.div_ceil(capacity)),
    ];
    if g.has_cycle() {
        terms.push(BoundTerm::lower(BoundSource::NonForest, 2));
    }
    Ok(terms)
}

/// `max(ceil(D/2), ceil(|E| / floor(k|V|/(k+1))))`, raised to 2 when `g` has a
/// cycle; 0 for edgeless graphs.
pub fn lower_bound(g: &Graph, k: usize) -> Result<usize> {
    Ok(lower_bound_terms(g, k)?
        .iter()
        .map(|t| t.value)
        .max()
        .unwrap_or(0))
}

/// Lower bound plus the chromatic-index upper bound `D + 1` for a single graph.
pub fn graph_bounds(g: &Graph, k: usize) -> Result<BoundReport> {
    let mut terms = lower_bound_terms(g, k)?;
    let upper = if g.edge_count() == 0 {
        0
    } else {
        g.max_degree() + 1
    };
    terms.push(BoundTerm::upper(BoundSource::ChromaticIndex, upper));
    Ok(BoundReport::from_terms(k, terms))
}

/// What the product bounds need to know about one factor: its shape plus an
/// interval for its linear `k`-arboricity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorSummary {
    pub k: usize,
    pub vertices: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub cyclic: bool,
    pub la_lower: usize,
    pub la_upper: Option<usize>,
}

impl FactorSummary {
    pub fn new(g: &Graph, k: usize, la_lower: usize, la_upper: Option<usize>) -> Self {
        FactorSummary {
            k,
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            max_degree: g.max_degree(),
            cyclic: g.has_cycle(),
            la_lower,
            la_upper,
        }
    }

    pub fn exact(g: &Graph, k: usize, value: usize) -> Self {
        Self::new(g, k, value, Some(value))
    }

    /// Shape of `a * b` (everything except the arboricity interval, which is
    /// copied from `report`).
    pub fn product(
        kind: ProductKind,
        a: &FactorSummary,
        b: &FactorSummary,
        report: &BoundReport,
    ) -> Self {
        FactorSummary {
            k: report.k,
            vertices: product_vertices(kind, a, b),
            edges: product_edges(kind, a, b),
            max_degree: product_max_degree(kind, a, b),
            cyclic: product_is_cyclic(kind, a, b),
            la_lower: report.lower,
            la_upper: report.upper,
        }
    }
}

pub fn product_vertices(kind: ProductKind, a: &FactorSummary, b: &FactorSummary) -> usize {
    match kind {
        ProductKind::Join => a.vertices + b.vertices,
        _ => a.vertices * b.vertices,
    }
}

pub fn product_edges(kind: ProductKind, a: &FactorSummary, b: &FactorSummary) -> usize {
    let cart = a.edges * b.vertices + a.vertices * b.edges;
    let direct = 2 * a.edges * b.edges;
    match kind {
        ProductKind::Cartesian => cart,
        ProductKind::Direct => direct,
        ProductKind::Strong => cart + direct,
        ProductKind::Lexicographic => a.vertices * b.edges + a.edges * b.vertices * b.vertices,
        ProductKind::Join => a.edges + b.edges + a.vertices * b.vertices,
    }
}

pub fn product_max_degree(kind: ProductKind, a: &FactorSummary, b: &FactorSummary) -> usize {
    let (dg, dh) = (a.max_degree, b.max_degree);
    match kind {
        ProductKind::Cartesian => dg + dh,
        ProductKind::Direct => dg * dh,
        ProductKind::Strong => (dg + 1) * (dh + 1) - 1,
        ProductKind::Lexicographic => dh + b.vertices * dg,
        ProductKind::Join => (dg + b.vertices).max(dh + a.vertices),
    }
}

/// Whether the product contains a cycle, decided from the factor shapes.
pub fn product_is_cyclic(kind: ProductKind, a: &FactorSummary, b: &FactorSummary) -> bool {
    let both_edges = a.edges > 0 && b.edges > 0;
    let cart = (a.cyclic && b.vertices > 0) || (b.cyclic && a.vertices > 0) || both_edges;
    let direct = both_edges && (a.cyclic || b.cyclic || (a.max_degree >= 2 && b.max_degree >= 2));
    match kind {
        ProductKind::Cartesian => cart,
        ProductKind::Direct => direct,
        ProductKind::Strong => cart || direct,
        ProductKind::Lexicographic => {
            (a.cyclic && b.vertices > 0)
                || (b.cyclic && a.vertices > 0)
                || (a.edges > 0 && b.vertices >= 2)
        }
        ProductKind::Join => {
            a.cyclic
                || b.cyclic
                || (a.vertices >= 2 && b.vertices >= 2)
                || (a.vertices >= 1 && b.edges > 0)
                || (b.vertices >= 1 && a.edges > 0)
        }
    }
}

fn pair_interval(kind: ProductKind, g: &FactorSummary, h: &FactorSummary) -> BoundReport {
    let k = g.k.max(h.k);
    let delta = product_max_degree(kind, g, h);
    let (p, q) = (g.la_upper, h.la_upper);
    let mut terms = Vec::new();
    let both = |f: fn(usize, usize) -> usize| p.zip(q).map(|(p, q)| f(p, q));
    let (lower_source, upper) = match kind {
        ProductKind::Cartesian => {
            terms.push(BoundTerm::lower(
                BoundSource::FactorMax,
                g.la_lower.max(h.la_lower),
            ));
            (
                None,
                both(|p, q| p + q).map(|u| (BoundSource::CartesianSum, u)),
            )
        }
        ProductKind::Join => {
            let m = g.vertices.max(h.vertices);
            (
                Some(BoundSource::JoinDegree),
                p.zip(q)
                    .map(|(p, q)| (BoundSource::JoinMatchings, p + q + m)),
            )
        }
        ProductKind::Lexicographic => {
            let m = h.vertices;
            (
                Some(BoundSource::LexDegree),
                p.zip(q).map(|(p, q)| (BoundSource::LexParallel, p * m + q)),
            )
        }
        ProductKind::Direct => (
            Some(BoundSource::DirectDegree),
            both(|p, q| 2 * p * q).map(|u| (BoundSource::DirectSplit, u)),
        ),
        ProductKind::Strong => (
            Some(BoundSource::StrongDegree),
            both(|p, q| p + q + 2 * p * q).map(|u| (BoundSource::StrongSplit, u)),
        ),
    };
    if let Some(source) = lower_source {
        terms.push(BoundTerm::lower(source, delta.div_ceil(2)));
    }
    if product_is_cyclic(kind, g, h) {
        terms.push(BoundTerm::lower(BoundSource::NonForest, 2));
    }
    if let Some((source, value)) = upper {
        terms.push(BoundTerm::upper(source, value));
    }
    BoundReport::from_terms(k, terms)
}

/// Bound interval for the linear `max k_i`-arboricity of a product from
/// summaries of its factors.
///
/// Cartesian products of any number of factors use the factor maximum and
/// sum in one step. Lexicographic, direct and strong products of three or
/// more factors are folded left to right, feeding each intermediate interval
/// into the next step. The join takes exactly two factors.
pub fn product_bound_interval(kind: ProductKind, factors: &[FactorSummary]) -> Result<BoundReport> {
    let (min, expected) = match kind {
        ProductKind::Join => (2, "exactly 2"),
        _ => (2, "at least 2"),
    };
    if factors.len() < min || (kind == ProductKind::Join && factors.len() != 2) {
        return Err(Error::Arity {
            kind: kind.name(),
            expected,
            got: factors.len(),
        });
    }
    for f in factors {
        check_k(f.k)?;
    }
    if kind == ProductKind::Cartesian {
        let k = factors.iter().map(|f| f.k).max().unwrap_or(1);
        let mut terms = vec![BoundTerm::lower(
            BoundSource::FactorMax,
            factors.iter().map(|f| f.la_lower).max().unwrap_or(0),
        )];
        let mut acc = factors[0];
        for f in &factors[1..] {
            let step = BoundReport::from_terms(k, Vec::new());
            acc = FactorSummary::product(kind, &acc, f, &step);
        }
        if acc.cyclic {
            terms.push(BoundTerm::lower(BoundSource::NonForest, 2));
        }
        if let Some(sum) = factors.iter().map(|f| f.la_upper).sum::<Option<usize>>() {
            terms.push(BoundTerm::upper(BoundSource::CartesianSum, sum));
        }
        return Ok(BoundReport::from_terms(k, terms));
    }
    let mut acc = factors[0];
    let mut report = BoundReport::from_terms(acc.k, Vec::new());
    for f in &factors[1..] {
        report = pair_interval(kind, &acc, f);
        acc = FactorSummary::product(kind, &acc, f, &report);
    }
    Ok(report)
}

/// Checks a profile `values[k-1] = la_k` for `k = 1, 2, ...`: non-increasing,
/// and `la_1 <= max_degree + 1`. On failure returns the 1-based `k` at which
/// the profile breaks.
pub fn chain_check(values: &[usize], max_degree: usize) -> std::result::Result<(), usize> {
    if let Some(&first) = values.first() {
        if first > max_degree + 1 {
            return Err(1);
        }
    }
    match values.windows(2).position(|w| w[1] > w[0]) {
        Some(i) => Err(i + 2),
        None => Ok(()),
    }
}
