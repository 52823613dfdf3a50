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

//! Girth of a few mixed graphs, with the shortest-cycle witness, checked
//! against the brute-force cycle enumerator.
//!
//!     cargo run --example girth

use mixcage::constructions::{circulant_12g_odd, h28_graph, h_even};
use mixcage::{mixed_girth, mixed_girth_oracle, MixedGraph};

fn main() {
    let mixed_pair = MixedGraph::from_parts(2, [(0, 1)], [(0, 1)]).unwrap();
    let retrace = MixedGraph::from_parts(2, [(0, 1)], []).unwrap();
    let graphs = [
        ("edge plus arc on one pair", mixed_pair),
        ("single edge", retrace),
        ("C_13({5};{1})", circulant_12g_odd(5).unwrap()),
        ("H_6", h_even(6).unwrap()),
        ("28-vertex [1,3;5] graph", h28_graph()),
    ];
    for (name, g) in &graphs {
        match mixed_girth(g) {
            Some(w) => {
                let oracle = mixed_girth_oracle(g, w.len()).unwrap().map(|c| c.len());
                println!("{name:<28} girth {:<2} oracle {:?}  {w}", w.len(), oracle);
            }
            None => println!("{name:<28} acyclic"),
        }
    }
}
