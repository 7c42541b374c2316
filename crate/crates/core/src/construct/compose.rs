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

//! Composers: factor decompositions in, product decompositions out.
//!
//! Each composer checks its inputs with the verifier, builds the product
//! forests by label arithmetic, and drops empty forests. Counts before
//! dropping: Cartesian `p + q`, join `p + q + max(n, m)`, lexicographic
//! `p m + q`, direct `2 p q`, strong `p + q + 2 p q`.

use crate::error::{Error, Result};
use crate::forest::{forest_components, verify_decomposition, Decomposition, LinearKForest};
use crate::graph::{Edge, Graph};
use crate::product::{layer_embed, pair_label, product, Layer, ProductKind};

use super::families::bipartite_matchings;

/// Odd-position and even-position edges of every path of a linear forest.
/// Both sides are matchings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPair {
    pub first: Vec<Edge>,
    pub second: Vec<Edge>,
}

fn check_input(g: &Graph, d: &Decomposition) -> Result<()> {
    if d.vertex_count() != g.vertex_count() {
        return Err(Error::param(format!(
            "decomposition is on {} vertices, graph has {}",
            d.vertex_count(),
            g.vertex_count()
        )));
    }
    verify_decomposition(g, d).map_err(Error::InvalidDecomposition)
}

fn layer_maps(g: &Graph, h: &Graph, layer: fn(usize) -> Layer, count: usize) -> Vec<Vec<usize>> {
    (0..count)
        .map(|at| layer_embed(g, h, layer(at)).expect("layer index in range"))
        .collect()
}

fn cartesian_forests(
    g: &Graph,
    h: &Graph,
    dg: &Decomposition,
    dh: &Decomposition,
) -> Vec<Vec<Edge>> {
    let g_layers = layer_maps(g, h, |at| Layer::G { at }, h.vertex_count());
    let h_layers = layer_maps(g, h, |at| Layer::H { at }, g.vertex_count());
    let spread = |f: &LinearKForest, maps: &[Vec<usize>]| -> Vec<Edge> {
        maps.iter()
            .flat_map(|map| {
                f.edges()
                    .iter()
                    .map(move |e| Edge::new(map[e.u()], map[e.v()]))
            })
            .collect()
    };
    dg.forests()
        .iter()
        .map(|f| spread(f, &g_layers))
        .chain(dh.forests().iter().map(|f| spread(f, &h_layers)))
        .collect()
}

/// Each forest of `g` copied into every `G`-layer, then each forest of `h`
/// into every `H`-layer.
pub fn compose_cartesian(
    g: &Graph,
    h: &Graph,
    dg: &Decomposition,
    dh: &Decomposition,
) -> Result<Decomposition> {
    check_input(g, dg)?;
    check_input(h, dh)?;
    let k = dg.k().max(dh.k());
    let n = g.vertex_count() * h.vertex_count();
    Ok(Decomposition::new(k, n, cartesian_forests(g, h, dg, dh)))
}

/// Factor forests on their own sides, then the `max(n, m)` perfect matchings
/// of the padded `K_{M,M}` restricted to real vertices.
pub fn compose_join(
    g: &Graph,
    h: &Graph,
    dg: &Decomposition,
    dh: &Decomposition,
) -> Result<Decomposition> {
    check_input(g, dg)?;
    check_input(h, dh)?;
    let (n, m) = (g.vertex_count(), h.vertex_count());
    let k = dg.k().max(dh.k());
    let mut forests: Vec<Vec<Edge>> = dg.forests().iter().map(|f| f.edges().to_vec()).collect();
    forests.extend(dh.forests().iter().map(|f| {
        f.edges()
            .iter()
            .map(|e| Edge::new(e.u() + n, e.v() + n))
            .collect()
    }));
    let side = n.max(m);
    if side > 0 {
        for matching in bipartite_matchings(side)? {
            forests.push(
                matching
                    .into_iter()
                    .filter(|&(a, b)| a < n && b < m)
                    .map(|(a, b)| Edge::new(a, n + b))
                    .collect(),
            );
        }
    }
    Ok(Decomposition::new(k, n + m, forests))
}

/// For each forest `F` of `g` and each shift `j` in `0..|V(h)|`, the parallel
/// forest taking `(u, s) - (w, s + j mod m)` for every edge `u < w` of `F`;
/// then each forest of `h` copied into every `H`-layer.
pub fn compose_lexicographic(
    g: &Graph,
    h: &Graph,
    dg: &Decomposition,
    dh: &Decomposition,
) -> Result<Decomposition> {
    check_input(g, dg)?;
    check_input(h, dh)?;
    let m = h.vertex_count();
    let k = dg.k().max(dh.k());
    let mut forests = Vec::with_capacity(dg.len() * m + dh.len());
    for f in dg.forests() {
        for j in 0..m {
            forests.push(
                f.edges()
                    .iter()
                    .flat_map(|e| {
                        (0..m).map(move |s| {
                            Edge::new(pair_label(e.u(), s, m), pair_label(e.v(), (s + j) % m, m))
                        })
                    })
                    .collect::<Vec<_>>(),
            );
        }
    }
    let h_layers = layer_maps(g, h, |at| Layer::H { at }, g.vertex_count());
    for f in dh.forests() {
        forests.push(
            h_layers
                .iter()
                .flat_map(|map| {
                    f.edges()
                        .iter()
                        .map(move |e| Edge::new(map[e.u()], map[e.v()]))
                })
                .collect(),
        );
    }
    Ok(Decomposition::new(k, g.vertex_count() * m, forests))
}

/// Splits every path of `f` into its odd-position edges (`first`) and
/// even-position edges (`second`), walking from the smaller endpoint.
pub fn alternating_split(f: &LinearKForest) -> Result<SplitPair> {
    let mut pair = SplitPair {
        first: Vec::new(),
        second: Vec::new(),
    };
    for path in forest_components(f)? {
        for (i, w) in path.windows(2).enumerate() {
            let e = Edge::new(w[0], w[1]);
            if i % 2 == 0 {
                pair.first.push(e);
            } else {
                pair.second.push(e);
            }
        }
    }
    pair.first.sort_unstable();
    pair.second.sort_unstable();
    Ok(pair)
}

fn direct_forests(h: &Graph, dg: &Decomposition, dh: &Decomposition) -> Result<Vec<Vec<Edge>>> {
    let m = h.vertex_count();
    let mut forests = Vec::with_capacity(2 * dg.len() * dh.len());
    for f in dg.forests() {
        let split = alternating_split(f)?;
        for side in [&split.first, &split.second] {
            for fh in dh.forests() {
                let mut edges = Vec::with_capacity(2 * side.len() * fh.len());
                for eg in side {
                    let (a, b) = eg.endpoints();
                    for eh in fh.edges() {
                        let (c, d) = eh.endpoints();
                        edges.push(Edge::new(pair_label(a, c, m), pair_label(b, d, m)));
                        edges.push(Edge::new(pair_label(a, d, m), pair_label(b, c, m)));
                    }
                }
                forests.push(edges);
            }
        }
    }
    Ok(forests)
}

/// For each split side of each forest of `g` and each forest of `h`, the
/// doubled edges `(u1,v1)(u2,v2)` and `(u1,v2)(u2,v1)`. A matching edge times
/// a path is two disjoint copies of the path.
pub fn compose_direct(
    g: &Graph,
    h: &Graph,
    dg: &Decomposition,
    dh: &Decomposition,
) -> Result<Decomposition> {
    check_input(g, dg)?;
    check_input(h, dh)?;
    let k = dg.k().max(dh.k());
    let n = g.vertex_count() * h.vertex_count();
    Ok(Decomposition::new(k, n, direct_forests(h, dg, dh)?))
}

/// Cartesian forests followed by direct forests; the two edge sets partition
/// the strong product.
pub fn compose_strong(
    g: &Graph,
    h: &Graph,
    dg: &Decomposition,
    dh: &Decomposition,
) -> Result<Decomposition> {
    check_input(g, dg)?;
    check_input(h, dh)?;
    let k = dg.k().max(dh.k());
    let n = g.vertex_count() * h.vertex_count();
    let mut forests = cartesian_forests(g, h, dg, dh);
    forests.extend(direct_forests(h, dg, dh)?);
    Ok(Decomposition::new(k, n, forests))
}

/// Dispatches to the composer for `kind`.
pub fn compose(
    kind: ProductKind,
    g: &Graph,
    h: &Graph,
    dg: &Decomposition,
    dh: &Decomposition,
) -> Result<Decomposition> {
    match kind {
        ProductKind::Cartesian => compose_cartesian(g, h, dg, dh),
        ProductKind::Lexicographic => compose_lexicographic(g, h, dg, dh),
        ProductKind::Direct => compose_direct(g, h, dg, dh),
        ProductKind::Strong => compose_strong(g, h, dg, dh),
        ProductKind::Join => compose_join(g, h, dg, dh),
    }
}

/// Folds `kind` over `(graph, decomposition)` factors left to right and
/// returns the product graph with its decomposition. One factor is returned
/// unchanged.
pub fn fold_product(
    kind: ProductKind,
    factors: &[(Graph, Decomposition)],
) -> Result<(Graph, Decomposition)> {
    let Some((first, rest)) = factors.split_first() else {
        return Err(Error::Arity {
            kind: kind.name(),
            expected: "at least 1",
            got: 0,
        });
    };
    check_input(&first.0, &first.1)?;
    let mut acc = first.clone();
    for (h, dh) in rest {
        let d = compose(kind, &acc.0, h, &acc.1, dh)?;
        acc = (product(kind, &acc.0, h), d);
    }
    Ok(acc)
}

/// Iterated [`compose_cartesian`]; at most `sum p_i` forests.
pub fn fold_cartesian(factors: &[(Graph, Decomposition)]) -> Result<(Graph, Decomposition)> {
    fold_product(ProductKind::Cartesian, factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{decompose_complete, decompose_family, decompose_path};
    use crate::graph::{build_family, FamilySpec};

    fn fam(s: FamilySpec, k: usize) -> (Graph, Decomposition) {
        (build_family(s).unwrap(), decompose_family(s, k).unwrap())
    }

    fn edges(list: &[(usize, usize)]) -> Vec<Edge> {
        list.iter().map(|&p| Edge::from(p)).collect()
    }

    fn checked(
        kind: ProductKind,
        a: &(Graph, Decomposition),
        b: &(Graph, Decomposition),
    ) -> Decomposition {
        let d = compose(kind, &a.0, &b.0, &a.1, &b.1).unwrap();
        let target = product(kind, &a.0, &b.0);
        assert_eq!(verify_decomposition(&target, &d), Ok(()), "{kind}");
        d
    }

    #[test]
    fn cartesian_examples() {
        let p3 = fam(FamilySpec::Path(3), 2);
        assert_eq!(checked(ProductKind::Cartesian, &p3, &p3).len(), 2);
        let p2 = fam(FamilySpec::Path(2), 1);
        assert_eq!(checked(ProductKind::Cartesian, &p2, &p2).len(), 2);
        let k1 = fam(FamilySpec::Complete(1), 1);
        assert!(checked(ProductKind::Cartesian, &k1, &k1).is_empty());
    }

    #[test]
    fn join_examples() {
        let k1 = fam(FamilySpec::Complete(1), 1);
        assert_eq!(checked(ProductKind::Join, &k1, &k1).len(), 1);
        let k2 = fam(FamilySpec::Complete(2), 1);
        assert!(checked(ProductKind::Join, &k2, &k2).len() <= 4);
        let p3 = fam(FamilySpec::Path(3), 1);
        assert!(checked(ProductKind::Join, &p3, &k1).len() <= 2 + 3);
    }

    #[test]
    fn lexicographic_examples() {
        let p2 = fam(FamilySpec::Path(2), 1);
        assert_eq!(checked(ProductKind::Lexicographic, &p2, &p2).len(), 3);
        let p3 = fam(FamilySpec::Path(3), 2);
        let p2k2 = fam(FamilySpec::Path(2), 2);
        assert_eq!(checked(ProductKind::Lexicographic, &p3, &p2k2).len(), 3);
        let g = fam(FamilySpec::Cycle(5), 2);
        let k1 = fam(FamilySpec::Complete(1), 2);
        assert_eq!(checked(ProductKind::Lexicographic, &g, &k1), g.1);
    }

    #[test]
    fn split_examples() {
        let f = LinearKForest::new(3, edges(&[(0, 1), (1, 2), (2, 3)]));
        let s = alternating_split(&f).unwrap();
        assert_eq!(s.first, edges(&[(0, 1), (2, 3)]));
        assert_eq!(s.second, edges(&[(1, 2)]));
        let s = alternating_split(&LinearKForest::new(1, edges(&[(4, 7)]))).unwrap();
        assert_eq!((s.first.len(), s.second.len()), (1, 0));
        let s = alternating_split(&LinearKForest::new(1, edges(&[(0, 1), (2, 3)]))).unwrap();
        assert_eq!((s.first.len(), s.second.len()), (2, 0));
        let tri = LinearKForest::new(3, edges(&[(0, 1), (1, 2), (0, 2)]));
        assert!(alternating_split(&tri).is_err());
    }

    #[test]
    fn direct_examples() {
        let p2 = fam(FamilySpec::Path(2), 1);
        assert_eq!(checked(ProductKind::Direct, &p2, &p2).len(), 1);
        let p3 = fam(FamilySpec::Path(3), 2);
        assert!(checked(ProductKind::Direct, &p3, &p3).len() <= 2);
        let pet = fam(FamilySpec::Petersen, 4);
        let p2 = fam(FamilySpec::Path(2), 4);
        assert!(checked(ProductKind::Direct, &pet, &p2).len() <= 4);
    }

    #[test]
    fn strong_examples() {
        let p2 = fam(FamilySpec::Path(2), 1);
        assert!(checked(ProductKind::Strong, &p2, &p2).len() <= 3);
        let k1 = fam(FamilySpec::Complete(1), 2);
        let c5 = fam(FamilySpec::Cycle(5), 2);
        assert_eq!(checked(ProductKind::Strong, &k1, &c5), c5.1);
    }

    #[test]
    fn rejects_invalid_input() {
        let g = build_family(FamilySpec::Path(3)).unwrap();
        let bad = Decomposition::new(1, 3, [edges(&[(0, 1), (1, 2)])]);
        let good = decompose_path(3, 1).unwrap();
        assert!(matches!(
            compose_cartesian(&g, &g, &bad, &good),
            Err(Error::InvalidDecomposition(_))
        ));
        let k4 = decompose_complete(4, 1).unwrap();
        assert!(compose_direct(&g, &g, &k4, &good).is_err());
    }

    #[test]
    fn folds() {
        let p2 = fam(FamilySpec::Path(2), 1);
        let (q3, d) = fold_cartesian(&[p2.clone(), p2.clone(), p2.clone()]).unwrap();
        assert_eq!(q3, build_family(FamilySpec::Hypercube(3)).unwrap());
        assert_eq!(verify_decomposition(&q3, &d), Ok(()));
        assert!(d.len() <= 3);
        let (g, d1) = fold_cartesian(std::slice::from_ref(&p2)).unwrap();
        assert_eq!((g, d1), p2);
        assert!(fold_cartesian(&[]).is_err());
    }
}
