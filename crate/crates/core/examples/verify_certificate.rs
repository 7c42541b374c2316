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

//! Checks a hand-written certificate, then tampers with it and shows the
//! violation the verifier reports.

use linarb::{build_family, verify_decomposition, Decomposition, Edge, FamilySpec};

fn main() -> linarb::Result<()> {
    let g = build_family(FamilySpec::Path(5))?;
    let e = |u, v| Edge::new(u, v);
    let good = Decomposition::new(2, 5, [vec![e(0, 1), e(2, 3)], vec![e(1, 2), e(3, 4)]]);
    println!(
        "alternating matchings: {:?}",
        verify_decomposition(&g, &good)
    );

    let tampered = [
        (
            "too long",
            Decomposition::new(1, 5, [vec![e(0, 1), e(1, 2), e(2, 3), e(3, 4)]]),
        ),
        (
            "edge dropped",
            Decomposition::new(2, 5, [vec![e(0, 1), e(2, 3)], vec![e(1, 2)]]),
        ),
        (
            "edge repeated",
            Decomposition::new(
                2,
                5,
                [vec![e(0, 1), e(2, 3)], vec![e(1, 2), e(3, 4), e(0, 1)]],
            ),
        ),
        (
            "foreign edge",
            Decomposition::new(4, 5, [vec![e(0, 1), e(1, 2), e(2, 3), e(3, 4), e(0, 4)]]),
        ),
    ];
    for (what, d) in tampered {
        match verify_decomposition(&g, &d) {
            Ok(()) => println!("{what}: unexpectedly valid"),
            Err(v) => println!("{what}: {v}"),
        }
    }
    Ok(())
}
