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

//! Bound intervals for a single graph and for products given only factor
//! summaries.

use linarb::bounds::{graph_bounds, product_bound_interval, FactorSummary};
use linarb::{build_family, FamilySpec, ProductKind};

fn main() -> linarb::Result<()> {
    let pet = build_family(FamilySpec::Petersen)?;
    for k in 1..=4 {
        println!("Petersen {}", graph_bounds(&pet, k)?);
    }
    let k = 3;
    let p4 = FactorSummary::exact(&build_family(FamilySpec::Path(4))?, k, 1);
    let p3 = FactorSummary::exact(&build_family(FamilySpec::Path(3))?, k, 1);
    for kind in ProductKind::ALL {
        println!("P4 {kind} P3: {}", product_bound_interval(kind, &[p4, p3])?);
    }
    let c3 = FactorSummary::exact(&build_family(FamilySpec::Cycle(3))?, 2, 2);
    println!(
        "C3^3 cartesian: {}",
        product_bound_interval(ProductKind::Cartesian, &[c3, c3, c3])?
    );
    Ok(())
}
