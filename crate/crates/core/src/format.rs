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

//! Line-oriented text format for mixed graphs.
//!
//! ```text
//! # comment
//! n 4
//! e 0 1
//! a 1 2
//! ```
//!
//! `e u v` is an undirected edge, `a u v` an arc `u -> v`. Repeated lines
//! are parallel elements. The writer emits edges then arcs, each sorted.

use std::fmt::Write as _;

use crate::error::GraphError;
use crate::graph::MixedGraph;

pub fn parse_graph(text: &str) -> Result<MixedGraph, GraphError> {
    let mut graph: Option<MixedGraph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| GraphError::Parse {
            line: line_no,
            message,
        };
        let mut tokens = line.split_whitespace();
        let tag = tokens.next().unwrap_or_default();
        let nums = tokens
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| err(format!("expected a non-negative integer, found `{t}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        match (&mut graph, tag) {
            (None, "n") => {
                if nums.len() != 1 {
                    return Err(err("`n` takes exactly one value".into()));
                }
                graph = Some(MixedGraph::new(nums[0]));
            }
            (None, _) => return Err(err("first line must be `n <count>`".into())),
            (Some(_), "n") => return Err(err("duplicate `n` line".into())),
            (Some(g), "e" | "a") => {
                if nums.len() != 2 {
                    return Err(err(format!("`{tag}` takes exactly two vertices")));
                }
                let res = if tag == "e" {
                    g.add_edge(nums[0], nums[1])
                } else {
                    g.add_arc(nums[0], nums[1])
                };
                res.map_err(|e| err(e.to_string()))?;
            }
            (Some(_), other) => return Err(err(format!("unknown record `{other}`"))),
        }
    }
    graph.ok_or(GraphError::Parse {
        line: 0,
        message: "missing `n <count>` line".into(),
    })
}

pub fn write_graph(g: &MixedGraph) -> String {
    write_graph_with_header(g, &[])
}

/// Writes the graph preceded by `# ` comment lines.
pub fn write_graph_with_header(g: &MixedGraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "# {c}");
    }
    let _ = writeln!(out, "n {}", g.order());
    for e in g.sorted_edges() {
        let _ = writeln!(out, "e {} {}", e.u, e.v);
    }
    for a in g.sorted_arcs() {
        let _ = writeln!(out, "a {} {}", a.tail, a.head);
    }
    out
}
