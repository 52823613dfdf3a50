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

//! Minimum-order search for a [z,r;g]-mixed graph.
//!
//!     cargo run --release --example min_order_search -- 2 1 4
//!     cargo run --release --example min_order_search -- 3 1 4 4   # 4 threads

use mixcage::bounds::{bound_report, CageParams};
use mixcage::search::{find_min_order, SearchConfig};
use mixcage::write_graph;

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("numeric argument"))
        .collect();
    let (z, r, g) = match args[..] {
        [z, r, g, ..] => (z, r, g),
        _ => (1, 2, 4),
    };
    let cfg = SearchConfig {
        threads: args.get(3).copied().unwrap_or(1),
        ..SearchConfig::default()
    };
    let p = CageParams::new(z, r, g).expect("valid parameters");
    let start = bound_report(p)
        .unwrap()
        .lower
        .map_or(1, |b| b.value as usize);
    let out = find_min_order(p, start, cfg.ceiling, &cfg).expect("search");
    println!(
        "{p}: orders {start}..={} refuted {:?}",
        cfg.ceiling, out.refuted_orders
    );
    match (out.min_order, &out.witness) {
        (Some(n), Some(w)) => println!("minimum order {n}, witness:\n{}", write_graph(w)),
        _ if out.budget_exhausted => println!("budget exhausted"),
        _ => println!("nothing up to order {}", cfg.ceiling),
    }
    println!("{} nodes, {:?}", out.stats.nodes, out.stats.elapsed);
}
