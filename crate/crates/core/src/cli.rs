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

//! Command-line front end. [`cli_dispatch`] runs one command against
//! explicit streams and returns the process exit code:
//! 0 success, 1 verification failure, 2 parse or parameter error,
//! 3 search budget exhausted.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::{graph_bounds, product_bound_interval};
use crate::construct::{decompose_family, decompose_greedy, fold_product};
use crate::error::{Error, Result};
use crate::exact::{exact_la_k, Budget, SolveStatus};
use crate::forest::{verify_decomposition, Decomposition};
use crate::graph::{build_family, FamilySpec, Graph};
use crate::io::{emit_certificate, parse_certificate, parse_graph, write_graph};
use crate::product::{product, ProductKind};
use crate::report::{
    report_network, rows_to_csv, rows_to_text, sort_rows, summarize_factor, NetworkSpec,
    ReportOptions,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "linarb",
    version,
    about = "Linear k-forest decompositions of graphs and graph products"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Constructive,
    Exact,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Text,
}

#[derive(clap::Args, Debug)]
struct BudgetArgs {
    /// Wall-clock limit for the search in milliseconds.
    #[arg(long)]
    budget_ms: Option<u64>,
    /// Limit on search nodes.
    #[arg(long)]
    budget_nodes: Option<u64>,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            max_nodes: self.budget_nodes,
            max_millis: self.budget_ms,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the edge list of a named family, e.g. `petersen` or `cycle:5`.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Write the edge list of a product of two edge-list files.
    Product {
        #[arg(long)]
        kind: ProductKind,
        left: PathBuf,
        right: PathBuf,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Print the bound interval of one graph, or of a product of graphs with `--kind`.
    Bounds {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        kind: Option<ProductKind>,
        #[arg(required = true)]
        graphs: Vec<PathBuf>,
    },
    /// Write a certificate for a family (or a product of families with
    /// `--kind`), or for an edge-list file.
    Decompose {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "constructive")]
        method: Method,
        #[arg(long)]
        family: Vec<String>,
        #[arg(long)]
        kind: Option<ProductKind>,
        graph: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Compute la_k exactly.
    Exact {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        family: Option<String>,
        graph: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Check a certificate against a graph.
    Verify {
        graph: PathBuf,
        certificate: PathBuf,
    },
    /// Print the bound table of a network.
    Report {
        #[arg(long)]
        network: String,
        #[arg(long, value_delimiter = ',')]
        params: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1,2,3,4")]
        k: Vec<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Largest product given to the exact solver.
        #[arg(long)]
        exact_edges: Option<usize>,
        #[arg(long)]
        budget_nodes: Option<u64>,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &PathBuf) -> Result<String> {
        if path.as_os_str() == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            Ok(s)
        } else {
            Ok(std::fs::read_to_string(path)?)
        }
    }

    fn graph(&mut self, path: &PathBuf) -> Result<Graph> {
        parse_graph(&self.read(path)?)
    }

    fn emit(&mut self, out: &Option<PathBuf>, text: &str) -> Result<()> {
        match out {
            Some(path) => std::fs::write(path, text)?,
            None => self.out.write_all(text.as_bytes())?,
        }
        Ok(())
    }
}

/// Outcome of a command that ran without a parse or parameter error.
enum Done {
    Ok,
    Invalid(String),
    Budget(String),
}

fn families(specs: &[String], k: usize) -> Result<Vec<(Graph, Decomposition)>> {
    specs
        .iter()
        .map(|s| {
            let spec = FamilySpec::parse(s)?;
            Ok((build_family(spec)?, decompose_family(spec, k)?))
        })
        .collect()
}

fn family_graph(specs: &[String], kind: Option<ProductKind>) -> Result<Graph> {
    let graphs = specs
        .iter()
        .map(|s| build_family(FamilySpec::parse(s)?))
        .collect::<Result<Vec<_>>>()?;
    match (graphs.len(), kind) {
        (1, None) => Ok(graphs.into_iter().next().expect("one graph")),
        (n, Some(kind)) if n >= 2 => {
            let mut it = graphs.into_iter();
            let first = it.next().expect("two graphs");
            Ok(it.fold(first, |acc, h| product(kind, &acc, &h)))
        }
        _ => Err(Error::param(
            "give one --family, or two or more with --kind",
        )),
    }
}

fn input_graph(
    io: &mut Io,
    family: &[String],
    kind: Option<ProductKind>,
    graph: &Option<PathBuf>,
) -> Result<Graph> {
    match (family.is_empty(), graph) {
        (false, None) => family_graph(family, kind),
        (true, Some(path)) => io.graph(path),
        _ => Err(Error::param("give either --family or a graph file")),
    }
}

fn run(cmd: Command, io: &mut Io) -> Result<Done> {
    match cmd {
        Command::Gen { family, out } => {
            let g = build_family(FamilySpec::parse(&family)?)?;
            io.emit(&out, &write_graph(&g))?;
        }
        Command::Product {
            kind,
            left,
            right,
            out,
        } => {
            let (g, h) = (io.graph(&left)?, io.graph(&right)?);
            io.emit(&out, &write_graph(&product(kind, &g, &h)))?;
        }
        Command::Bounds { k, kind, graphs } => {
            let graphs = graphs
                .iter()
                .map(|p| io.graph(p))
                .collect::<Result<Vec<_>>>()?;
            let report = match (kind, graphs.as_slice()) {
                (None, [g]) => graph_bounds(g, k)?,
                (None, _) => return Err(Error::param("several graphs need --kind")),
                (Some(kind), _) => {
                    let opts = ReportOptions::default();
                    let summaries = graphs
                        .iter()
                        .map(|g| Ok(summarize_factor(g, k, &decompose_greedy(g, k)?, &opts)?.0))
                        .collect::<Result<Vec<_>>>()?;
                    product_bound_interval(kind, &summaries)?
                }
            };
            writeln!(io.out, "{report}")?;
        }
        Command::Decompose {
            k,
            method,
            family,
            kind,
            graph,
            budget,
            out,
        } => {
            let cert = match method {
                Method::Constructive if !family.is_empty() && graph.is_none() => {
                    let factors = families(&family, k)?;
                    match (factors.len(), kind) {
                        (1, None) => factors.into_iter().next().expect("one factor").1,
                        (n, Some(kind)) if n >= 2 => fold_product(kind, &factors)?.1,
                        _ => {
                            return Err(Error::param(
                                "give one --family, or two or more with --kind",
                            ))
                        }
                    }
                }
                Method::Constructive => {
                    decompose_greedy(&input_graph(io, &family, kind, &graph)?, k)?
                }
                Method::Exact => {
                    let g = input_graph(io, &family, kind, &graph)?;
                    let r = exact_la_k(&g, k, budget.budget())?;
                    match r.certificate {
                        Some(c) => c,
                        None => {
                            return Ok(Done::Budget(format!(
                                "budget exhausted; la_{k} >= {}",
                                r.value
                            )))
                        }
                    }
                }
            };
            io.emit(&out, &(emit_certificate(&cert) + "\n"))?;
        }
        Command::Exact {
            k,
            family,
            graph,
            budget,
        } => {
            let g = input_graph(io, family.as_slice(), None, &graph)?;
            let r = exact_la_k(&g, k, budget.budget())?;
            let status = match r.status {
                SolveStatus::Exact => "exact",
                SolveStatus::LowerBoundOnly => "lower-bound-only",
            };
            writeln!(io.out, "{}", r.value)?;
            writeln!(io.out, "status: {status}")?;
            writeln!(io.out, "nodes: {}", r.stats.nodes)?;
            writeln!(io.out, "elapsed_ms: {}", r.stats.elapsed.as_millis())?;
            if r.status == SolveStatus::LowerBoundOnly {
                return Ok(Done::Budget(format!(
                    "budget exhausted; la_{k} >= {}",
                    r.value
                )));
            }
        }
        Command::Verify { graph, certificate } => {
            let g = io.graph(&graph)?;
            let d = parse_certificate(&io.read(&certificate)?)?;
            if d.vertex_count() != g.vertex_count() {
                return Ok(Done::Invalid(format!(
                    "certificate has n = {}, graph has {} vertices",
                    d.vertex_count(),
                    g.vertex_count()
                )));
            }
            match verify_decomposition(&g, &d) {
                Ok(()) => writeln!(io.out, "ok: {} linear {}-forests", d.len(), d.k())?,
                Err(v) => return Ok(Done::Invalid(format!("violation: {v}"))),
            }
        }
        Command::Report {
            network,
            params,
            k,
            format,
            exact_edges,
            budget_nodes,
        } => {
            let spec = if params.is_empty() {
                NetworkSpec::parse(&network)?
            } else {
                NetworkSpec::new(network.parse()?, params)?
            };
            let mut opts = ReportOptions::default();
            if let Some(e) = exact_edges {
                opts.exact_edge_limit = e;
            }
            if let Some(n) = budget_nodes {
                opts.product_budget = Budget::nodes(n);
            }
            let mut rows = Vec::new();
            for k in k {
                rows.extend(report_network(&spec, k, &opts)?);
            }
            sort_rows(&mut rows);
            let text = match format {
                Format::Csv => rows_to_csv(&rows)?,
                Format::Text => rows_to_text(&rows),
            };
            io.out.write_all(text.as_bytes())?;
        }
    }
    Ok(Done::Ok)
}

/// Parses `argv` (program name first) and runs the command.
pub fn cli_dispatch<I, S>(
    argv: I,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let mut io = Io { stdin, out };
    let (code, msg) = match run(cli.command, &mut io) {
        Ok(Done::Ok) => (EXIT_OK, None),
        Ok(Done::Invalid(msg)) => (EXIT_INVALID, Some(msg)),
        Ok(Done::Budget(msg)) => (EXIT_BUDGET, Some(msg)),
        Err(Error::InvalidDecomposition(v)) => (EXIT_INVALID, Some(format!("violation: {v}"))),
        Err(e) => (EXIT_USAGE, Some(format!("error: {e}"))),
    };
    if let Some(msg) = msg {
        let _ = writeln!(err, "{msg}");
    }
    code
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cli(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("linarb").chain(args.iter().copied());
        let code = cli_dispatch(argv, &mut input, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn gen_then_exact_through_stdin() {
        let (code, graph, _) = run_cli(&["gen", "--family", "petersen"], "");
        assert_eq!(code, 0);
        assert!(graph.starts_with("10 15\n"));
        let (code, out, _) = run_cli(&["exact", "--k", "1", "-"], &graph);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("4"));
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_cli(&["frobnicate"], "").0, 2);
        assert_eq!(run_cli(&["gen", "--family", "cycle:2"], "").0, 2);
        assert_eq!(run_cli(&["exact", "--k", "1", "-"], "2 1\n1 1").0, 2);
        assert_eq!(
            run_cli(&["exact", "--k", "0", "--family", "path:3"], "").0,
            2
        );
        assert_eq!(run_cli(&["--help"], "").0, 0);
    }

    #[test]
    fn budget_exit_3() {
        let (code, out, err) = run_cli(
            &[
                "exact",
                "--k",
                "2",
                "--family",
                "petersen",
                "--budget-nodes",
                "1",
            ],
            "",
        );
        assert_eq!(code, 3);
        assert!(out.contains("lower-bound-only"));
        assert!(err.contains("budget"));
        let (code, _, _) = run_cli(
            &[
                "exact",
                "--k",
                "2",
                "--family",
                "petersen",
                "--budget-ms",
                "0",
            ],
            "",
        );
        assert_eq!(code, 3);
    }

    #[test]
    fn decompose_family_product() {
        let (code, out, _) = run_cli(
            &[
                "decompose",
                "--k",
                "3",
                "--family",
                "path:4",
                "--family",
                "path:3",
                "--kind",
                "strong",
            ],
            "",
        );
        assert_eq!(code, 0);
        let d = parse_certificate(out.trim()).unwrap();
        assert!(d.len() <= 4);
        let (code, out, _) = run_cli(
            &[
                "decompose",
                "--k",
                "1",
                "--method",
                "exact",
                "--family",
                "cycle:5",
            ],
            "",
        );
        assert_eq!(code, 0);
        assert_eq!(parse_certificate(out.trim()).unwrap().len(), 3);
    }

    #[test]
    fn bounds_command() {
        let (code, out, _) = run_cli(&["bounds", "--k", "1", "-"], "3 3\n0 1\n0 2\n1 2\n");
        assert_eq!(code, 0);
        assert!(out.starts_with("k=1 [3, 3]"));
    }

    #[test]
    fn report_command() {
        let (code, out, _) = run_cli(
            &["report", "--network", "grid", "--params", "4,3", "--k", "3"],
            "",
        );
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 5);
        let (code, _, _) = run_cli(&["report", "--network", "grid:4"], "");
        assert_eq!(code, 2);
    }
}
