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

//! Executable constructions: base-family decompositions and product composers.

mod compose;
mod families;

pub use compose::{
    alternating_split, compose, compose_cartesian, compose_direct, compose_join,
    compose_lexicographic, compose_strong, fold_cartesian, fold_product, SplitPair,
};
pub use families::{
    bipartite_matchings, decompose_complete, decompose_cycle, decompose_family, decompose_greedy,
    decompose_path, decompose_petersen, round_robin_matchings,
};
