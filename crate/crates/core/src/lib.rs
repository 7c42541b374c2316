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

//! Linear k-forest decompositions.
//!
//! A linear `k`-forest is a forest whose components are paths with at most
//! `k` edges; `la_k(G)` is the least number of them partitioning `E(G)`.
//! This crate builds graphs and graph products, constructs decompositions
//! for base families and composes them across products, verifies
//! certificates, computes bound intervals, and solves small instances
//! exactly.
//!
//! ```
//! use linarb::{build_family, decompose_family, verify_decomposition, FamilySpec};
//!
//! let g = build_family(FamilySpec::Petersen).unwrap();
//! let d = decompose_family(FamilySpec::Petersen, 1).unwrap();
//! assert_eq!(d.len(), 4);
//! assert!(verify_decomposition(&g, &d).is_ok());
//! ```

pub mod bounds;
pub mod cli;
pub mod construct;
pub mod error;
pub mod exact;
pub mod forest;
pub mod graph;
pub mod io;
pub mod product;
pub mod report;

pub use bounds::{
    graph_bounds, lower_bound, product_bound_interval, BoundReport, BoundSource, FactorSummary,
};
pub use construct::{compose, decompose_family, fold_cartesian, fold_product};
pub use error::{Error, Result};
pub use exact::{
    brute_force_la_k, exact_la_k, feasible_with_t_classes, Budget, ExactResult, Feasibility,
    SolveStatus,
};
pub use forest::{
    verify_decomposition, verify_forest, Decomposition, LinearKForest, Violation, ViolationKind,
};
pub use graph::{build_family, Edge, FamilySpec, Graph};
pub use io::{emit_certificate, parse_certificate, parse_graph, write_graph};
pub use product::{product, ProductKind};
pub use report::{report_network, Network, NetworkSpec, ReportOptions, ReportRow};
