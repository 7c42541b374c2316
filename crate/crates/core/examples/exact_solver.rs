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

//! Exact search: a value profile over k, a decision query, and a search
//! stopped by its node budget.

use linarb::exact::brute_force_la_k;
use linarb::{
    build_family, emit_certificate, exact_la_k, feasible_with_t_classes, product, Budget,
    FamilySpec, Feasibility, ProductKind,
};

fn main() -> linarb::Result<()> {
    let g = product(
        ProductKind::Strong,
        &build_family(FamilySpec::Path(4))?,
        &build_family(FamilySpec::Path(3))?,
    );
    for k in 1..=4 {
        let r = exact_la_k(&g, k, Budget::unlimited())?;
        println!(
            "P4 strong P3, k={k}: {} ({:?}, {} nodes)",
            r.value, r.status, r.stats.nodes
        );
    }

    let c5 = build_family(FamilySpec::Cycle(5))?;
    for t in 2..=3 {
        match feasible_with_t_classes(&c5, 1, t, Budget::unlimited())? {
            Feasibility::Certificate(d) => {
                println!("C5 into {t} matchings: yes, {}", emit_certificate(&d))
            }
            other => println!("C5 into {t} matchings: {other:?}"),
        }
    }
    println!("C5 by brute force, k=1: {}", brute_force_la_k(&c5, 1)?);

    let pet = build_family(FamilySpec::Petersen)?;
    let r = exact_la_k(&pet, 1, Budget::nodes(3))?;
    println!(
        "Petersen k=1 with 3 nodes: at least {} ({:?})",
        r.value, r.status
    );
    Ok(())
}
