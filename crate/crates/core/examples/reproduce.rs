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

//! Recompute the claim table (the same rows as `mixcage reproduce`).
//!
//!     cargo run --release --example reproduce

use mixcage::reproduce::{claims, Status};
use mixcage::search::SearchConfig;

fn main() {
    let rows = claims(&SearchConfig::default());
    for c in &rows {
        println!("{:<20} {}  {}", c.id, c.status, c.computed);
    }
    let failed = rows.iter().filter(|c| c.status == Status::Fail).count();
    println!("{} rows, {failed} failed", rows.len());
}
