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

//! Composes factor decompositions across every product and compares the
//! forest count with the composition cap.

use linarb::construct::{compose, decompose_cycle, decompose_path};
use linarb::{build_family, product, verify_decomposition, FamilySpec, ProductKind};

fn main() -> linarb::Result<()> {
    let k = 2;
    let g = build_family(FamilySpec::Path(4))?;
    let h = build_family(FamilySpec::Cycle(5))?;
    let dg = decompose_path(4, k)?;
    let dh = decompose_cycle(5, k)?;
    let (p, q, n, m) = (dg.len(), dh.len(), g.vertex_count(), h.vertex_count());
    println!("P4: {p} forests, C5: {q} forests, k={k}");
    for kind in ProductKind::ALL {
        let d = compose(kind, &g, &h, &dg, &dh)?;
        let valid = verify_decomposition(&product(kind, &g, &h), &d).is_ok();
        let cap = match kind {
            ProductKind::Cartesian => p + q,
            ProductKind::Join => p + q + n.max(m),
            ProductKind::Lexicographic => p * m + q,
            ProductKind::Direct => 2 * p * q,
            ProductKind::Strong => p + q + 2 * p * q,
        };
        println!(
            "{:<14} {} forests (cap {cap}), verified {valid}",
            kind.name(),
            d.len()
        );
    }
    Ok(())
}
