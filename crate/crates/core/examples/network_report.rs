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

//! Bound tables for a few networks, as aligned text.

use linarb::report::{report_network, rows_to_text, sort_rows, NetworkSpec, ReportOptions};

fn main() -> linarb::Result<()> {
    let opts = ReportOptions::default();
    for text in [
        "grid:4,3",
        "torus:3,3",
        "generalized_hypercube:2,3",
        "hyper_petersen_lex:4",
    ] {
        let spec = NetworkSpec::parse(text)?;
        let mut rows = Vec::new();
        for k in 1..=4 {
            rows.extend(report_network(&spec, k, &opts)?);
        }
        sort_rows(&mut rows);
        println!("{}", rows_to_text(&rows));
    }
    Ok(())
}
