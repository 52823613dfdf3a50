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

//! Existence by product: an (r,g)-graph times a (z,g)-digraph is a
//! [z,r]-regular mixed graph of girth at least g.
//!
//!     cargo run --example product_existence

use mixcage::constructions::{
    cartesian_product, circulant_digraph, h28_graph, petersen, undirected_cycle,
};
use mixcage::{check_regularity, mixed_girth};

fn main() {
    let cases = [
        (
            "C_5 x dC_5",
            undirected_cycle(5).unwrap(),
            2,
            circulant_digraph(1, 5).unwrap(),
            1,
            5,
        ),
        (
            "C_4 x D(2,4)",
            undirected_cycle(4).unwrap(),
            2,
            circulant_digraph(2, 4).unwrap(),
            2,
            4,
        ),
        (
            "Petersen x dC_5",
            petersen(),
            3,
            circulant_digraph(1, 5).unwrap(),
            1,
            5,
        ),
    ];
    for (name, graph, r, digraph, z, g) in cases {
        let p = cartesian_product(&graph, &digraph).unwrap();
        println!(
            "{name:<16} n={:<3} [{z},{r}]-regular={} girth={:?} (need >= {g})",
            p.order(),
            check_regularity(&p, z, r).is_regular,
            mixed_girth(&p).map(|w| w.len()),
        );
    }
    println!(
        "28-vertex [1,3;5] graph improves on the 50-vertex product: n={}",
        h28_graph().order()
    );
}
