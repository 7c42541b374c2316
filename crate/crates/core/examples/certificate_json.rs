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

//! Edge-list and certificate round trips through temporary files.

use linarb::{
    build_family, decompose_family, emit_certificate, parse_certificate, parse_graph,
    verify_decomposition, write_graph, FamilySpec,
};

fn main() -> linarb::Result<()> {
    let dir = std::env::temp_dir().join(format!("linarb-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let spec = FamilySpec::Cycle(7);
    let g = build_family(spec)?;
    let d = decompose_family(spec, 1)?;

    std::fs::write(dir.join("c7.txt"), write_graph(&g))?;
    std::fs::write(dir.join("c7.json"), emit_certificate(&d))?;

    let g2 = parse_graph(&std::fs::read_to_string(dir.join("c7.txt"))?)?;
    let json = std::fs::read_to_string(dir.join("c7.json"))?;
    let d2 = parse_certificate(&json)?;
    println!("{json}");
    println!("graph equal: {}, certificate equal: {}", g == g2, d == d2);
    println!("verifies: {:?}", verify_decomposition(&g2, &d2));

    match parse_certificate(r#"{"k":1,"n":7,"forests":[[[3,2]]]}"#) {
        Ok(_) => println!("reversed edge accepted?"),
        Err(e) => println!("reversed edge rejected: {e}"),
    }
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
