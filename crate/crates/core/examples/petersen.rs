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

//! The Petersen graph: explicit forests against exact values for k = 1..5.

use linarb::construct::decompose_petersen;
use linarb::{build_family, exact_la_k, lower_bound, verify_decomposition, Budget, FamilySpec};

fn main() -> linarb::Result<()> {
    let g = build_family(FamilySpec::Petersen)?;
    println!("k  lower  constructed  exact  nodes");
    for k in 1..=5 {
        let d = decompose_petersen(k)?;
        assert!(verify_decomposition(&g, &d).is_ok());
        let r = exact_la_k(&g, k, Budget::unlimited())?;
        println!(
            "{k}  {:>5}  {:>11}  {:>5}  {:>5}",
            lower_bound(&g, k)?,
            d.len(),
            r.value,
            r.stats.nodes
        );
    }
    for (i, f) in decompose_petersen(1)?.forests().iter().enumerate() {
        let edges: Vec<String> = f.edges().iter().map(|e| e.to_string()).collect();
        println!("k=1 forest {i}: {}", edges.join(" "));
    }
    Ok(())
}
