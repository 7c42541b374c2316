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

//! The five binary graph products.
//!
//! For the four coordinate products the vertex `(i, j)` with `i` in `G` and
//! `j` in `H` gets label `i * |V(H)| + j`. The join keeps `G`'s labels and
//! shifts `H`'s by `|V(G)|`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProductKind {
    Cartesian,
    Lexicographic,
    Direct,
    Strong,
    Join,
}

impl ProductKind {
    pub const ALL: [ProductKind; 5] = [
        ProductKind::Cartesian,
        ProductKind::Lexicographic,
        ProductKind::Direct,
        ProductKind::Strong,
        ProductKind::Join,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::Direct => "direct",
            ProductKind::Strong => "strong",
            ProductKind::Join => "join",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cartesian" | "cart" => Ok(ProductKind::Cartesian),
            "lexicographic" | "lex" => Ok(ProductKind::Lexicographic),
            "direct" | "tensor" => Ok(ProductKind::Direct),
            "strong" => Ok(ProductKind::Strong),
            "join" => Ok(ProductKind::Join),
            other => Err(Error::param(format!("unknown product kind {other:?}"))),
        }
    }
}

/// Label of the product vertex `(i, j)` when the second factor has `m` vertices.
#[inline]
pub fn pair_label(i: usize, j: usize, m: usize) -> usize {
    i * m + j
}

fn cartesian_edges(g: &Graph, h: &Graph, out: &mut Vec<Edge>) {
    let m = h.vertex_count();
    for j in 0..m {
        for e in g.edges() {
            out.push(Edge::new(pair_label(e.u(), j, m), pair_label(e.v(), j, m)));
        }
    }
    for i in 0..g.vertex_count() {
        for e in h.edges() {
            out.push(Edge::new(pair_label(i, e.u(), m), pair_label(i, e.v(), m)));
        }
    }
}

fn direct_edges(g: &Graph, h: &Graph, out: &mut Vec<Edge>) {
    let m = h.vertex_count();
    for eg in g.edges() {
        let (a, b) = eg.endpoints();
        for eh in h.edges() {
            let (c, d) = eh.endpoints();
            out.push(Edge::new(pair_label(a, c, m), pair_label(b, d, m)));
            out.push(Edge::new(pair_label(a, d, m), pair_label(b, c, m)));
        }
    }
}

/// Builds `g * h` for the given product kind.
pub fn product(kind: ProductKind, g: &Graph, h: &Graph) -> Graph {
    let (n, m) = (g.vertex_count(), h.vertex_count());
    let mut edges = Vec::new();
    match kind {
        ProductKind::Cartesian => cartesian_edges(g, h, &mut edges),
        ProductKind::Direct => direct_edges(g, h, &mut edges),
        ProductKind::Strong => {
            cartesian_edges(g, h, &mut edges);
            direct_edges(g, h, &mut edges);
        }
        ProductKind::Lexicographic => {
            for e in g.edges() {
                for s in 0..m {
                    for t in 0..m {
                        edges.push(Edge::new(pair_label(e.u(), s, m), pair_label(e.v(), t, m)));
                    }
                }
            }
            for i in 0..n {
                for e in h.edges() {
                    edges.push(Edge::new(pair_label(i, e.u(), m), pair_label(i, e.v(), m)));
                }
            }
        }
        ProductKind::Join => {
            edges.extend_from_slice(g.edges());
            edges.extend(h.edges().iter().map(|e| Edge::new(e.u() + n, e.v() + n)));
            for a in 0..n {
                for b in 0..m {
                    edges.push(Edge::new(a, n + b));
                }
            }
        }
    }
    let order = if kind == ProductKind::Join {
        n + m
    } else {
        n * m
    };
    Graph::from_generated(order, edges)
}

/// Which factor copy to embed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layer {
    /// The copy of `G` at the fixed `H`-vertex `at`.
    G { at: usize },
    /// The copy of `H` at the fixed `G`-vertex `at`.
    H { at: usize },
}

/// Map from factor vertices to product labels for one layer of a coordinate
/// product. `map[x]` is the label of factor vertex `x`.
pub fn layer_embed(g: &Graph, h: &Graph, layer: Layer) -> Result<Vec<usize>> {
    let (n, m) = (g.vertex_count(), h.vertex_count());
    match layer {
        Layer::G { at } if at < m => Ok((0..n).map(|i| pair_label(i, at, m)).collect()),
        Layer::H { at } if at < n => Ok((0..m).map(|j| pair_label(at, j, m)).collect()),
        Layer::G { at } => Err(Error::param(format!("G-layer index {at} outside 0..{m}"))),
        Layer::H { at } => Err(Error::param(format!("H-layer index {at} outside 0..{n}"))),
    }
}
