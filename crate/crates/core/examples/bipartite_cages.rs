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

//! The [1,r;4] cages: oriented K_{r+2,r+2}, one per 2-factor cycle type.
//! Exhaustive search confirms there are no others.
//!
//!     cargo run --release --example bipartite_cages

use mixcage::constructions::oriented_kbipartite;
use mixcage::search::{all_witnesses, SearchConfig};
use mixcage::{are_isomorphic, CageParams};

fn partitions(total: usize, min: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![vec![]];
    }
    (min..=total)
        .flat_map(|first| {
            partitions(total - first, first)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

fn main() {
    for r in 1..=4 {
        let types = partitions(r + 2, 2);
        let graphs: Vec<_> = types
            .iter()
            .map(|p| oriented_kbipartite(r, p).unwrap())
            .collect();
        let p = CageParams::new(1, r, 4).unwrap();
        let (found, complete) = all_witnesses(p, 2 * (r + 2), &SearchConfig::default()).unwrap();
        let covered = found.iter().all(|w| {
            graphs
                .iter()
                .any(|k| are_isomorphic(w, k).unwrap().is_some())
        });
        println!(
            "r={r}: cycle types {types:?}; search found {} classes (complete: {complete}), all oriented K_{{{k},{k}}}: {covered}",
            found.len(),
            k = r + 2
        );
    }
}
