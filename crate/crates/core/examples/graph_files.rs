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

//! Reading and writing the text graph format.
//!
//!     cargo run --example graph_files

use mixcage::constructions::oriented_kbipartite;
use mixcage::format::{parse_graph, write_graph_with_header};

fn main() {
    let g = oriented_kbipartite(1, &[3]).unwrap();
    let text = write_graph_with_header(&g, &["[1,1;4] cage from K_{3,3}".to_string()]);
    print!("{text}");
    let back = parse_graph(&text).unwrap();
    assert_eq!(back, g);

    match parse_graph("n 3\ne 0 1\na 2 2\n") {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
}
