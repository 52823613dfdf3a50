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

//! Lower and upper bounds on mixed cage orders.
//!
//!     cargo run --example bounds_table

use mixcage::bounds::{bound_report, moore_bound, CageParams};

fn main() {
    println!("Moore bound n0(r, g)");
    print!("{:>4}", "r\\g");
    for g in 3..=10 {
        print!("{g:>7}");
    }
    println!();
    for r in 2..=6 {
        print!("{r:>4}");
        for g in 3..=10 {
            print!("{:>7}", moore_bound(r, g).unwrap());
        }
        println!();
    }

    println!("\nknown bounds for [z,r;g]");
    let queries = [
        (1, 2, 5),
        (1, 2, 6),
        (1, 3, 4),
        (1, 3, 5),
        (1, 3, 7),
        (1, 1, 4),
        (2, 1, 4),
        (3, 1, 4),
        (2, 0, 4),
    ];
    for (z, r, g) in queries {
        let p = CageParams::new(z, r, g).unwrap();
        let rep = bound_report(p).unwrap();
        let show = |b: Option<mixcage::bounds::Bound>| {
            b.map_or("-".to_string(), |b| {
                format!("{} ({})", b.value, b.provenance)
            })
        };
        println!(
            "{p:<10} lower {:<22} upper {:<24}{}",
            show(rep.lower),
            show(rep.upper),
            if rep.is_exact() { "exact" } else { "" }
        );
    }
}
