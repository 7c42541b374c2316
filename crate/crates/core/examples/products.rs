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

//! The five graph products of P3 and C4, with their sizes.

use linarb::{build_family, product, FamilySpec, ProductKind};

fn main() -> linarb::Result<()> {
    let g = build_family(FamilySpec::Path(3))?;
    let h = build_family(FamilySpec::Cycle(4))?;
    for kind in ProductKind::ALL {
        let p = product(kind, &g, &h);
        println!(
            "{:<14} vertices {:>2}  edges {:>3}  max degree {:>2}  cyclic {}",
            kind.name(),
            p.vertex_count(),
            p.edge_count(),
            p.max_degree(),
            p.has_cycle()
        );
    }
    let lex = product(ProductKind::Lexicographic, &g, &h);
    let first: Vec<String> = lex.edges()[..6].iter().map(|e| e.to_string()).collect();
    println!(
        "first edges of the lexicographic product: {}",
        first.join(" ")
    );
    Ok(())
}
