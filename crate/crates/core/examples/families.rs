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

//! Builds each named family and prints its size and a constructive
//! decomposition count for a few values of k.

use linarb::{build_family, decompose_family, verify_decomposition, FamilySpec};

fn main() -> linarb::Result<()> {
    let specs = [
        "path:6",
        "cycle:7",
        "complete:6",
        "complete_bipartite:3,4",
        "hypercube:3",
        "petersen",
    ];
    for text in specs {
        let spec = FamilySpec::parse(text)?;
        let g = build_family(spec)?;
        let counts: Vec<String> = (1..=4)
            .map(|k| {
                let d = decompose_family(spec, k)?;
                assert!(verify_decomposition(&g, &d).is_ok());
                Ok(format!("k={k}:{}", d.len()))
            })
            .collect::<linarb::Result<_>>()?;
        println!(
            "{:<24} n={:<3} m={:<3} max degree {}  forests {}",
            spec.to_string(),
            g.vertex_count(),
            g.edge_count(),
            g.max_degree(),
            counts.join(" ")
        );
    }
    Ok(())
}
