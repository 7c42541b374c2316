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

//! Explicit decompositions for the base families.

use crate::error::{Error, Result};
use crate::forest::Decomposition;
use crate::graph::{build_family, Edge, FamilySpec, Graph};

use super::compose::fold_cartesian;

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::param(msg))
    }
}

fn check_k(k: usize) -> Result<()> {
    require(k >= 1, "k must be at least 1")
}

/// `P_n` with `n >= 2`: the path itself when `k >= n - 1`, otherwise its
/// two alternating matchings.
pub fn decompose_path(n: usize, k: usize) -> Result<Decomposition> {
    require(n >= 2, "path decomposition needs n >= 2")?;
    check_k(k)?;
    let edges: Vec<Edge> = (1..n).map(|i| Edge::new(i - 1, i)).collect();
    if k + 1 >= n {
        return Ok(Decomposition::new(k, n, [edges]));
    }
    let (even, odd): (Vec<_>, Vec<_>) = edges.into_iter().partition(|e| e.u() % 2 == 0);
    Ok(Decomposition::new(k, n, [even, odd]))
}

/// `C_n` with `n >= 3`: two forests, except three matchings for odd `n` at
/// `k = 1`.
pub fn decompose_cycle(n: usize, k: usize) -> Result<Decomposition> {
    require(n >= 3, "cycle decomposition needs n >= 3")?;
    check_k(k)?;
    let closing = Edge::new(n - 1, 0);
    let along = |parity: usize| -> Vec<Edge> {
        (0..n - 1)
            .filter(|i| i % 2 == parity)
            .map(|i| Edge::new(i, i + 1))
            .collect()
    };
    if n.is_multiple_of(2) {
        // even positions form a perfect matching; the rest, closing edge
        // included, form the other
        let mut rest = along(1);
        rest.push(closing);
        return Ok(Decomposition::new(k, n, [along(0), rest]));
    }
    if k >= 2 {
        // maximum matching, then a P3 through vertex n-1 plus a matching
        let mut rest = along(1);
        rest.push(closing);
        return Ok(Decomposition::new(k, n, [along(0), rest]));
    }
    Ok(Decomposition::new(
        k,
        n,
        [along(0), along(1), vec![closing]],
    ))
}

/// Near-1-factorization of `K_n` by the round-robin (circle) method: `n - 1`
/// perfect matchings for even `n`, `n` near-perfect matchings for odd `n`.
pub fn round_robin_matchings(n: usize) -> Vec<Vec<Edge>> {
    if n < 2 {
        return Vec::new();
    }
    let even = n + n % 2;
    let rot = even - 1;
    let fixed = even - 1;
    let mut rounds = Vec::with_capacity(rot);
    for r in 0..rot {
        let mut m = Vec::with_capacity(even / 2);
        if fixed < n {
            m.push(Edge::new(r, fixed));
        }
        for i in 1..even / 2 {
            let a = (r + i) % rot;
            let b = (r + rot - i) % rot;
            m.push(Edge::new(a, b));
        }
        rounds.push(m);
    }
    rounds
}

/// `n/2` Hamiltonian paths of `K_n` for even `n` (zigzag rotations).
fn zigzag_paths(n: usize) -> Vec<Vec<Edge>> {
    debug_assert!(n.is_multiple_of(2));
    (0..n / 2)
        .map(|i| {
            let mut seq = Vec::with_capacity(n);
            seq.push(i);
            for step in 1..n {
                let off = step.div_ceil(2);
                let v = if step % 2 == 1 {
                    (i + off) % n
                } else {
                    (i + n - off) % n
                };
                seq.push(v);
            }
            seq.windows(2).map(|w| Edge::new(w[0], w[1])).collect()
        })
        .collect()
}

/// `K_n` with `n >= 2`.
///
/// For `k >= n - 1`: `ceil(n/2)` Hamiltonian-path forests (odd `n` uses the
/// construction for `K_{n+1}` and deletes the extra vertex). Otherwise one
/// matching per round-robin class.
pub fn decompose_complete(n: usize, k: usize) -> Result<Decomposition> {
    require(n >= 2, "complete graph decomposition needs n >= 2")?;
    check_k(k)?;
    if k + 1 >= n {
        let even = n + n % 2;
        let forests = zigzag_paths(even)
            .into_iter()
            .map(|p| p.into_iter().filter(|e| e.v() < n).collect::<Vec<_>>());
        return Ok(Decomposition::new(k, n, forests));
    }
    Ok(Decomposition::new(k, n, round_robin_matchings(n)))
}

/// The `m` perfect matchings `M_j = {(a_i, b_{(i+j) mod m})}` of `K_{m,m}`, as
/// `(left index, right index)` pairs.
pub fn bipartite_matchings(m: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    require(m >= 1, "bipartite matchings need m >= 1")?;
    Ok((0..m)
        .map(|j| (0..m).map(|i| (i, (i + j) % m)).collect())
        .collect())
}

/// Fixed Petersen decompositions (vertex labels as in [`build_family`]):
/// four matchings at `k = 1`, three linear 2-forests, three linear 3-forests,
/// and two linear 4-forests for every `k >= 4`.
pub fn decompose_petersen(k: usize) -> Result<Decomposition> {
    check_k(k)?;
    let spokes: &[(usize, usize)] = &[(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)];
    let forests: Vec<&[(usize, usize)]> = match k {
        1 => vec![
            &[(0, 1), (6, 9), (5, 8), (2, 3)],
            &[(0, 4), (1, 2), (7, 9)],
            &[(3, 4), (6, 8), (5, 7)],
            spokes,
        ],
        2 => vec![
            // paths 0-4-9, 5-8-6, 1-2-7
            &[(0, 4), (4, 9), (5, 8), (8, 6), (1, 2), (2, 7)],
            // paths 2-3-8, 5-7-9, 0-1-6
            &[(2, 3), (3, 8), (5, 7), (7, 9), (0, 1), (1, 6)],
            &[(0, 5), (6, 9), (3, 4)],
        ],
        3 => vec![
            // paths 1-0-4-3, 8-6-9-7
            &[(1, 0), (0, 4), (4, 3), (8, 6), (6, 9), (9, 7)],
            // paths 8-5-7, 3-2-1
            &[(8, 5), (5, 7), (3, 2), (2, 1)],
            spokes,
        ],
        _ => vec![
            // paths 2-1-0-4-3, 6-8-5-7-9
            &[
                (2, 1),
                (1, 0),
                (0, 4),
                (4, 3),
                (6, 8),
                (8, 5),
                (5, 7),
                (7, 9),
            ],
            // paths 7-2-3-8, 4-9-6-1, 0-5
            &[(7, 2), (2, 3), (3, 8), (4, 9), (9, 6), (6, 1), (0, 5)],
        ],
    };
    Ok(Decomposition::new(
        k,
        10,
        forests
            .into_iter()
            .map(|f| f.iter().map(|&p| Edge::from(p)).collect::<Vec<_>>()),
    ))
}

/// First-fit decomposition of an arbitrary graph: each edge, in sorted
/// order, joins the first forest that stays a linear k-forest.
pub fn decompose_greedy(g: &Graph, k: usize) -> Result<Decomposition> {
    check_k(k)?;
    let n = g.vertex_count();
    struct Class {
        edges: Vec<Edge>,
        degree: Vec<u8>,
        // component id per vertex and edge count per component id
        comp: Vec<usize>,
        len: Vec<usize>,
    }
    let mut classes: Vec<Class> = Vec::new();
    for &e in g.edges() {
        let (a, b) = e.endpoints();
        let slot = classes.iter().position(|c| {
            c.degree[a] < 2
                && c.degree[b] < 2
                && c.comp[a] != c.comp[b]
                && c.len[c.comp[a]] + c.len[c.comp[b]] < k
        });
        let c = match slot {
            Some(i) => &mut classes[i],
            None => {
                classes.push(Class {
                    edges: Vec::new(),
                    degree: vec![0; n],
                    comp: (0..n).collect(),
                    len: vec![0; n],
                });
                classes.last_mut().expect("just pushed")
            }
        };
        let (ca, cb) = (c.comp[a], c.comp[b]);
        let merged = c.len[ca] + c.len[cb] + 1;
        for x in c.comp.iter_mut() {
            if *x == cb {
                *x = ca;
            }
        }
        c.len[ca] = merged;
        c.degree[a] += 1;
        c.degree[b] += 1;
        c.edges.push(e);
    }
    Ok(Decomposition::new(
        k,
        n,
        classes.into_iter().map(|c| c.edges),
    ))
}

/// Constructive decomposition for any named family.
pub fn decompose_family(spec: FamilySpec, k: usize) -> Result<Decomposition> {
    check_k(k)?;
    spec.validate()?;
    match spec {
        FamilySpec::Path(1) => Ok(Decomposition::empty(k, 1)),
        FamilySpec::Path(n) => decompose_path(n, k),
        FamilySpec::Cycle(n) => decompose_cycle(n, k),
        FamilySpec::Complete(1) => Ok(Decomposition::empty(k, 1)),
        FamilySpec::Complete(n) => decompose_complete(n, k),
        FamilySpec::CompleteBipartite(s, t) => {
            let m = s.max(t);
            let forests = bipartite_matchings(m)?.into_iter().map(|mat| {
                mat.into_iter()
                    .filter(|&(i, j)| i < s && j < t)
                    .map(|(i, j)| Edge::new(i, s + j))
                    .collect::<Vec<_>>()
            });
            Ok(Decomposition::new(k, s + t, forests))
        }
        FamilySpec::Hypercube(0) => Ok(Decomposition::empty(k, 1)),
        FamilySpec::Hypercube(d) => {
            let p2 = build_family(FamilySpec::Path(2))?;
            let edge = decompose_path(2, k)?;
            let factors = vec![(p2, edge); d as usize];
            Ok(fold_cartesian(&factors)?.1)
        }
        FamilySpec::Petersen => decompose_petersen(k),
        FamilySpec::Empty(n) => Ok(Decomposition::empty(k, n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::verify_decomposition;

    fn check(spec: FamilySpec, d: &Decomposition) {
        let g = build_family(spec).unwrap();
        assert_eq!(verify_decomposition(&g, d), Ok(()), "{spec} k={}", d.k());
    }

    #[test]
    fn paths() {
        let d = decompose_path(5, 4).unwrap();
        check(FamilySpec::Path(5), &d);
        assert_eq!(d.len(), 1);
        let d = decompose_path(5, 2).unwrap();
        check(FamilySpec::Path(5), &d);
        assert_eq!(d.len(), 2);
        assert_eq!(decompose_path(2, 1).unwrap().len(), 1);
        assert!(decompose_path(1, 1).is_err());
        assert!(decompose_path(4, 0).is_err());
    }

    #[test]
    fn cycles() {
        for (n, k, want) in [
            (6, 1, 2),
            (5, 1, 3),
            (5, 2, 2),
            (3, 1, 3),
            (3, 2, 2),
            (4, 1, 2),
            (7, 6, 2),
        ] {
            let d = decompose_cycle(n, k).unwrap();
            check(FamilySpec::Cycle(n), &d);
            assert_eq!(d.len(), want, "C{n} k={k}");
        }
        assert!(decompose_cycle(2, 1).is_err());
    }

    #[test]
    fn complete_graphs() {
        for n in 2..=9 {
            for k in 1..n + 1 {
                let d = decompose_complete(n, k).unwrap();
                check(FamilySpec::Complete(n), &d);
                let want = if k + 1 >= n {
                    n.div_ceil(2)
                } else if n % 2 == 0 {
                    n - 1
                } else {
                    n
                };
                assert_eq!(d.len(), want, "K{n} k={k}");
            }
        }
        assert_eq!(decompose_complete(4, 3).unwrap().len(), 2);
        assert_eq!(decompose_complete(5, 1).unwrap().len(), 5);
        assert_eq!(decompose_complete(2, 1).unwrap().len(), 1);
    }

    #[test]
    fn bipartite_matchings_partition_kmm() {
        assert_eq!(bipartite_matchings(1).unwrap(), vec![vec![(0, 0)]]);
        for m in 1..=6 {
            let ms = bipartite_matchings(m).unwrap();
            assert_eq!(ms.len(), m);
            let mut all: Vec<_> = ms.iter().flatten().copied().collect();
            all.sort_unstable();
            all.dedup();
            assert_eq!(all.len(), m * m);
            for mat in &ms {
                let mut left: Vec<_> = mat.iter().map(|p| p.0).collect();
                let mut right: Vec<_> = mat.iter().map(|p| p.1).collect();
                left.sort_unstable();
                right.sort_unstable();
                assert_eq!(left, (0..m).collect::<Vec<_>>());
                assert_eq!(right, (0..m).collect::<Vec<_>>());
            }
        }
        assert!(bipartite_matchings(0).is_err());
    }

    #[test]
    fn petersen_table() {
        for (k, want) in [(1, 4), (2, 3), (3, 3), (4, 2), (5, 2), (9, 2)] {
            let d = decompose_petersen(k).unwrap();
            check(FamilySpec::Petersen, &d);
            assert_eq!(d.len(), want, "k={k}");
        }
        let spokes: Vec<Edge> = (0..5).map(|i| Edge::new(i, i + 5)).collect();
        assert!(decompose_petersen(1)
            .unwrap()
            .forests()
            .iter()
            .any(|f| f.edges() == spokes));
    }

    #[test]
    fn every_family() {
        let specs = [
            FamilySpec::Path(1),
            FamilySpec::Path(7),
            FamilySpec::Cycle(9),
            FamilySpec::Complete(1),
            FamilySpec::Complete(6),
            FamilySpec::CompleteBipartite(2, 5),
            FamilySpec::CompleteBipartite(3, 3),
            FamilySpec::Hypercube(0),
            FamilySpec::Hypercube(4),
            FamilySpec::Petersen,
            FamilySpec::Empty(3),
        ];
        for spec in specs {
            for k in 1..=4 {
                check(spec, &decompose_family(spec, k).unwrap());
            }
        }
        assert_eq!(
            decompose_family(FamilySpec::CompleteBipartite(2, 5), 1)
                .unwrap()
                .len(),
            5
        );
        assert_eq!(
            decompose_family(FamilySpec::Hypercube(4), 1).unwrap().len(),
            4
        );
    }

    #[test]
    fn greedy_is_valid() {
        for spec in [
            FamilySpec::Petersen,
            FamilySpec::Complete(7),
            FamilySpec::Hypercube(3),
        ] {
            let g = build_family(spec).unwrap();
            for k in 1..=5 {
                check(spec, &decompose_greedy(&g, k).unwrap());
            }
        }
    }
}
