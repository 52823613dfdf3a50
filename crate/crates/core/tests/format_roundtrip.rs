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

use mixcage::reproduce::random_mixed_graph;
use mixcage::{parse_graph, write_graph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn written_graphs_parse_back(n in 1..12usize, pa in 0.0..0.6f64, pe in 0.0..0.6f64, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = random_mixed_graph(&mut rng, n, pa, pe);
        // duplicate a few elements to exercise multiset semantics
        if let Some(e) = g.edges().first().copied() {
            g.add_edge(e.v, e.u).unwrap();
        }
        if let Some(a) = g.arcs().first().copied() {
            g.add_arc(a.tail, a.head).unwrap();
        }
        let text = write_graph(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g.clone());
        // writing is canonical
        prop_assert_eq!(write_graph(&parse_graph(&text).unwrap()), text);
    }
}
