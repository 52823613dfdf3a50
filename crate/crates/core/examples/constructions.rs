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

//! Every construction family, with its regularity and girth.
//!
//!     cargo run --example constructions

use mixcage::constructions::*;
use mixcage::{check_regularity, mixed_girth, MixedGraph};

fn show(name: String, g: &MixedGraph, z: usize, r: usize) {
    let girth = mixed_girth(g).map_or("-".into(), |w| w.len().to_string());
    println!(
        "{name:<26} n={:<4} [{z},{r}]-regular={:<5} girth={girth}",
        g.order(),
        check_regularity(g, z, r).is_regular,
    );
}

fn main() {
    for g in [3, 5, 7, 9] {
        show(
            format!("circ-12g g={g}"),
            &circulant_12g_odd(g).unwrap(),
            1,
            2,
        );
    }
    for g in [4, 6, 8] {
        show(format!("h-even g={g}"), &h_even(g).unwrap(), 1, 2);
    }
    for z in 1..=5 {
        show(format!("circ-z14 z={z}"), &circulant_z14(z).unwrap(), z, 1);
    }
    for (z, g) in [(1, 5), (2, 4), (3, 4)] {
        show(
            format!("circulant-digraph z={z} g={g}"),
            &circulant_digraph(z, g).unwrap(),
            z,
            0,
        );
    }
    show("h28".into(), &h28_graph(), 1, 3);
    for (r, g) in [(3, 6), (3, 7)] {
        let t = lower_bound_tree(r, g).unwrap();
        println!(
            "lb-tree r={r} g={g}            n={:<4} edges={} arcs={} (acyclic: {})",
            t.order(),
            t.edges().len(),
            t.arcs().len(),
            mixed_girth(&t).is_none()
        );
    }
}
