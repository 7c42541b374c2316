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

//! Bound tables for interconnection networks built as graph products.
//!
//! Every row is recomputed from the factor graphs: factor intervals come
//! from the lower bound, a verified construction and (when small) the exact
//! solver; the product interval comes from [`product_bound_interval`]; the
//! composed certificate is built and verified; an exact value is attached
//! when the product is small enough for the search budget.

use std::fmt;
use std::str::FromStr;

use crate::bounds::{
    lower_bound, product_bound_interval, BoundReport, BoundSource, BoundTerm, FactorSummary,
};
use crate::construct::{decompose_family, fold_product};
use crate::error::{Error, Result};
use crate::exact::{exact_la_k, Budget, SolveStatus};
use crate::forest::{verify_decomposition, Decomposition};
use crate::graph::{build_family, FamilySpec, Graph};
use crate::product::ProductKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Network {
    /// Two paths.
    Grid,
    /// Two or more paths.
    Mesh,
    /// Two or more cycles.
    Torus,
    /// Two or more cliques.
    GeneralizedHypercube,
    /// Petersen graph and a hypercube; the parameter is `n >= 3` and the
    /// hypercube has dimension `n - 3`.
    HyperPetersenCart,
    HyperPetersenLex,
    HyperPetersenDir,
    HyperPetersenStr,
}

impl Network {
    pub const ALL: [Network; 8] = [
        Network::Grid,
        Network::Mesh,
        Network::Torus,
        Network::GeneralizedHypercube,
        Network::HyperPetersenCart,
        Network::HyperPetersenLex,
        Network::HyperPetersenDir,
        Network::HyperPetersenStr,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Network::Grid => "grid",
            Network::Mesh => "mesh",
            Network::Torus => "torus",
            Network::GeneralizedHypercube => "generalized_hypercube",
            Network::HyperPetersenCart => "hyper_petersen_cart",
            Network::HyperPetersenLex => "hyper_petersen_lex",
            Network::HyperPetersenDir => "hyper_petersen_dir",
            Network::HyperPetersenStr => "hyper_petersen_str",
        }
    }

    fn hyper_petersen_kind(self) -> Option<ProductKind> {
        match self {
            Network::HyperPetersenCart => Some(ProductKind::Cartesian),
            Network::HyperPetersenLex => Some(ProductKind::Lexicographic),
            Network::HyperPetersenDir => Some(ProductKind::Direct),
            Network::HyperPetersenStr => Some(ProductKind::Strong),
            _ => None,
        }
    }
}

impl fmt::Display for Network {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Network {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Network::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| Error::param(format!("unknown network {s:?}")))
    }
}

/// Largest hyper-Petersen parameter accepted.
pub const MAX_HYPER_PETERSEN: usize = 8;

/// A validated network and its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetworkSpec {
    network: Network,
    params: Vec<usize>,
}

impl NetworkSpec {
    pub fn new(network: Network, params: Vec<usize>) -> Result<Self> {
        let bad = |msg: &str| Err(Error::param(format!("{network}: {msg}")));
        match network {
            Network::Grid if params.len() != 2 => return bad("needs exactly 2 path sizes"),
            Network::Mesh | Network::Torus | Network::GeneralizedHypercube if params.len() < 2 => {
                return bad("needs at least 2 sizes")
            }
            Network::Grid | Network::Mesh if params.iter().any(|&m| m < 2) => {
                return bad("path sizes must be >= 2")
            }
            Network::Torus if params.iter().any(|&m| m < 3) => {
                return bad("cycle sizes must be >= 3")
            }
            Network::GeneralizedHypercube if params.iter().any(|&m| m < 2) => {
                return bad("clique sizes must be >= 2")
            }
            _ => {}
        }
        if network.hyper_petersen_kind().is_some() {
            match params.as_slice() {
                [n] if (3..=MAX_HYPER_PETERSEN).contains(n) => {}
                [_] => return bad(&format!("n must be in 3..={MAX_HYPER_PETERSEN}")),
                _ => return bad("needs exactly 1 parameter n"),
            }
        }
        Ok(NetworkSpec { network, params })
    }

    /// Parses `name:p1,p2,...`.
    pub fn parse(text: &str) -> Result<Self> {
        let (name, rest) = text.split_once(':').unwrap_or((text, ""));
        let params = rest
            .split(',')
            .filter(|s| !s.trim().is_empty())
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::param(format!("bad parameter {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        NetworkSpec::new(name.trim().parse()?, params)
    }

    pub fn network(&self) -> Network {
        self.network
    }

    pub fn params(&self) -> &[usize] {
        &self.params
    }

    pub fn factors(&self) -> Vec<FamilySpec> {
        match self.network {
            Network::Grid | Network::Mesh => {
                self.params.iter().map(|&m| FamilySpec::Path(m)).collect()
            }
            Network::Torus => self.params.iter().map(|&m| FamilySpec::Cycle(m)).collect(),
            Network::GeneralizedHypercube => self
                .params
                .iter()
                .map(|&m| FamilySpec::Complete(m))
                .collect(),
            _ => vec![
                FamilySpec::Petersen,
                FamilySpec::Hypercube(self.params[0] as u32 - 3),
            ],
        }
    }

    pub fn kinds(&self) -> Vec<ProductKind> {
        match self.network.hyper_petersen_kind() {
            Some(kind) => vec![kind],
            None => vec![
                ProductKind::Cartesian,
                ProductKind::Lexicographic,
                ProductKind::Direct,
                ProductKind::Strong,
            ],
        }
    }

    fn label(&self, kind: ProductKind) -> String {
        let list = self
            .params
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        match self.network.hyper_petersen_kind() {
            Some(_) => list,
            None => format!("{kind}({list})"),
        }
    }
}

impl fmt::Display for NetworkSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = self
            .params
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "{}:{list}", self.network)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    /// Products and factors with more edges are not given to the exact solver.
    pub exact_edge_limit: usize,
    pub factor_budget: Budget,
    pub product_budget: Budget,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            exact_edge_limit: 40,
            factor_budget: Budget::nodes(2_000_000),
            product_budget: Budget::nodes(5_000_000),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportRow {
    pub network: Network,
    pub kind: ProductKind,
    pub params: String,
    pub k: usize,
    pub lower: usize,
    pub upper: Option<usize>,
    pub exact: Option<usize>,
    /// Forest count of the verified composed certificate.
    pub construction: usize,
    pub provenance: String,
    /// Set when a printed bound disagrees with the derived one.
    pub flag: Option<String>,
}

/// Interval for one factor: exact when the search finishes, otherwise the
/// lower bound against the construction count.
pub fn summarize_factor(
    g: &Graph,
    k: usize,
    construction: &Decomposition,
    opts: &ReportOptions,
) -> Result<(FactorSummary, bool)> {
    let mut lower = lower_bound(g, k)?;
    let mut upper = construction.len();
    let mut exact = false;
    if g.edge_count() <= opts.exact_edge_limit {
        let r = exact_la_k(g, k, opts.factor_budget)?;
        lower = lower.max(r.value);
        if r.status == SolveStatus::Exact {
            upper = upper.min(r.value);
            exact = true;
        }
    }
    Ok((FactorSummary::new(g, k, lower, Some(upper)), exact))
}

/// Upper bounds stated for the Petersen-lexicographic network with `n = 4`,
/// indexed by `min(k, 4) - 1`. Used only to flag disagreement.
const STATED_HYPER_PETERSEN_LEX_4: [usize; 4] = [14, 13, 13, 12];

fn grid_case(k: usize, factors: &[FamilySpec]) -> String {
    let parts: Vec<String> = factors
        .iter()
        .map(|f| match f {
            FamilySpec::Path(m) if k >= m - 1 => format!("k>={}", m - 1),
            FamilySpec::Path(m) => format!("k<{}", m - 1),
            _ => String::new(),
        })
        .collect();
    format!("case: {}", parts.join(" "))
}

fn row_for(
    spec: &NetworkSpec,
    kind: ProductKind,
    k: usize,
    factors: &[(Graph, Decomposition)],
    summaries: &[FactorSummary],
    factor_notes: &str,
    opts: &ReportOptions,
) -> Result<ReportRow> {
    let mut report: BoundReport = product_bound_interval(kind, summaries)?;
    let mut flag = None;
    if spec.network == Network::GeneralizedHypercube && kind == ProductKind::Lexicographic {
        let n: usize = spec.params.iter().product();
        let sum: usize = spec.params.iter().sum();
        report.push(BoundTerm::lower(BoundSource::CompleteGraph, n.div_ceil(2)));
        report.push(BoundTerm::upper(BoundSource::CompleteGraph, n));
        flag = Some(format!(
            "printed interval uses the clique-size sum {sum}: [{}, {sum}/2]; the product is K_{n}",
            sum.div_ceil(2)
        ));
    }
    if spec.network == Network::HyperPetersenLex && spec.params == [4] {
        let stated = STATED_HYPER_PETERSEN_LEX_4[k.min(4) - 1];
        if report.upper != Some(stated) {
            flag = Some(format!(
                "stated upper {stated} differs from derived upper {}",
                report.upper.map_or("?".into(), |u| u.to_string())
            ));
        }
    }
    let (graph, cert) = fold_product(kind, factors)?;
    verify_decomposition(&graph, &cert).map_err(Error::InvalidDecomposition)?;
    let exact = if graph.edge_count() <= opts.exact_edge_limit {
        let r = exact_la_k(&graph, k, opts.product_budget)?;
        (r.status == SolveStatus::Exact).then_some(r.value)
    } else {
        None
    };
    let mut provenance = format!(
        "{}; construction={}; factors: {factor_notes}",
        report.provenance_string(),
        cert.len()
    );
    if spec.network == Network::Grid {
        provenance.push_str("; ");
        provenance.push_str(&grid_case(k, &spec.factors()));
    }
    Ok(ReportRow {
        network: spec.network,
        kind,
        params: spec.label(kind),
        k,
        lower: report.lower,
        upper: report.upper,
        exact,
        construction: cert.len(),
        provenance,
        flag,
    })
}

/// One row per product kind of `spec` at this `k`, sorted.
pub fn report_network(
    spec: &NetworkSpec,
    k: usize,
    opts: &ReportOptions,
) -> Result<Vec<ReportRow>> {
    if k == 0 {
        return Err(Error::param("k must be at least 1"));
    }
    let mut factors = Vec::new();
    let mut summaries = Vec::new();
    let mut notes = Vec::new();
    for f in spec.factors() {
        let g = build_family(f)?;
        let d = decompose_family(f, k)?;
        verify_decomposition(&g, &d).map_err(Error::InvalidDecomposition)?;
        let (summary, exact) = summarize_factor(&g, k, &d, opts)?;
        notes.push(format!(
            "{f}=[{},{}]{}",
            summary.la_lower,
            summary.la_upper.unwrap_or(d.len()),
            if exact { "" } else { "~" }
        ));
        summaries.push(summary);
        factors.push((g, d));
    }
    let notes = notes.join(" ");
    let mut rows = spec
        .kinds()
        .into_iter()
        .map(|kind| row_for(spec, kind, k, &factors, &summaries, &notes, opts))
        .collect::<Result<Vec<_>>>()?;
    sort_rows(&mut rows);
    Ok(rows)
}

pub fn sort_rows(rows: &mut [ReportRow]) {
    rows.sort_by(|a, b| (a.network, &a.params, a.k).cmp(&(b.network, &b.params, b.k)));
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

fn full_provenance(r: &ReportRow) -> String {
    match &r.flag {
        Some(flag) => format!("{}; FLAG: {flag}", r.provenance),
        None => r.provenance.clone(),
    }
}

pub const CSV_HEADER: [&str; 7] = [
    "network",
    "params",
    "k",
    "lower",
    "upper",
    "exact",
    "provenance",
];

pub fn rows_to_csv(rows: &[ReportRow]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::Io(std::io::Error::other(e));
    w.write_record(CSV_HEADER).map_err(csv_err)?;
    for r in rows {
        w.write_record([
            r.network.name().to_string(),
            r.params.clone(),
            r.k.to_string(),
            r.lower.to_string(),
            opt(r.upper),
            opt(r.exact),
            full_provenance(r),
        ])
        .map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Space-aligned columns; the provenance column is left ragged.
pub fn rows_to_text(rows: &[ReportRow]) -> String {
    let table: Vec<[String; 7]> = std::iter::once(CSV_HEADER.map(String::from))
        .chain(rows.iter().map(|r| {
            [
                r.network.name().to_string(),
                r.params.clone(),
                r.k.to_string(),
                r.lower.to_string(),
                opt(r.upper),
                opt(r.exact),
                full_provenance(r),
            ]
        }))
        .collect();
    let mut widths = [0usize; 6];
    for row in &table {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for row in &table {
        for (w, cell) in widths.iter().zip(row) {
            out.push_str(&format!("{cell:<w$}  "));
        }
        out.push_str(&row[6]);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(text: &str, k: usize) -> Vec<ReportRow> {
        report_network(
            &NetworkSpec::parse(text).unwrap(),
            k,
            &ReportOptions::default(),
        )
        .unwrap()
    }

    fn interval(r: &ReportRow) -> (usize, usize) {
        (r.lower, r.upper.unwrap())
    }

    #[test]
    fn spec_validation() {
        assert!(NetworkSpec::parse("grid:4,3").is_ok());
        assert!(NetworkSpec::parse("grid:4").is_err());
        assert!(NetworkSpec::parse("torus:3,2").is_err());
        assert!(NetworkSpec::parse("generalized_hypercube:2,1").is_err());
        assert!(NetworkSpec::parse("hyper_petersen_cart:2").is_err());
        assert!(NetworkSpec::parse("hyper_petersen_cart:4,4").is_err());
        assert!(NetworkSpec::parse("ring:4").is_err());
        assert!(NetworkSpec::parse("mesh:3,x").is_err());
        let s = NetworkSpec::parse("mesh:2,3,4").unwrap();
        assert_eq!(s.to_string(), "mesh:2,3,4");
        assert_eq!(NetworkSpec::parse(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn grid_rows_at_large_k() {
        let r = rows("grid:4,3", 3);
        let by_kind = |kind| r.iter().find(|x| x.kind == kind).unwrap();
        assert_eq!(interval(by_kind(ProductKind::Cartesian)), (2, 2));
        assert_eq!(interval(by_kind(ProductKind::Lexicographic)), (4, 4));
        assert_eq!(interval(by_kind(ProductKind::Direct)), (2, 2));
        assert_eq!(interval(by_kind(ProductKind::Strong)), (4, 4));
        assert_eq!(by_kind(ProductKind::Cartesian).exact, Some(2));
        assert!(by_kind(ProductKind::Cartesian)
            .provenance
            .contains("case: k>=3 k>=2"));
    }

    #[test]
    fn torus_example() {
        let r = rows("torus:3,3", 2);
        let cart = r.iter().find(|x| x.kind == ProductKind::Cartesian).unwrap();
        assert_eq!(interval(cart), (2, 4));
        assert!(cart.construction <= 4);
    }

    #[test]
    fn hyper_petersen_cart_4() {
        for (k, want) in [(1, (4, 5)), (2, (3, 4)), (3, (3, 4)), (4, (2, 3))] {
            let r = rows("hyper_petersen_cart:4", k);
            assert_eq!(r.len(), 1);
            assert_eq!(interval(&r[0]), want, "k={k}");
        }
    }

    #[test]
    fn hyper_petersen_lex_4_is_flagged() {
        let r = rows("hyper_petersen_lex:4", 1);
        assert_eq!(interval(&r[0]), (4, 9));
        assert!(r[0].flag.as_deref().unwrap().contains("14"));
    }

    #[test]
    fn generalized_hypercube_lex_is_flagged() {
        let r = rows("generalized_hypercube:2,3", 2);
        let lex = r
            .iter()
            .find(|x| x.kind == ProductKind::Lexicographic)
            .unwrap();
        assert!(lex.flag.is_some());
        assert!(lex.upper.unwrap() <= 6);
        assert!(lex.lower >= 3);
    }

    #[test]
    fn output_formats() {
        let r = rows("grid:4,3", 3);
        let csv = rows_to_csv(&r).unwrap();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next(),
            Some("network,params,k,lower,upper,exact,provenance")
        );
        assert!(lines
            .next()
            .unwrap()
            .starts_with("grid,\"cartesian(4,3)\",3,2,2,2,"));
        let text = rows_to_text(&r);
        assert_eq!(text.lines().count(), 5);
        assert!(text.starts_with("network"));
    }
}
