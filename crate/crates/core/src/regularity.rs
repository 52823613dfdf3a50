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

use crate::graph::MixedGraph;

/// Degrees of a vertex that fails a regularity claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeViolation {
    pub vertex: usize,
    pub out_degree: usize,
    pub in_degree: usize,
    pub edge_degree: usize,
}

/// Outcome of checking that a graph is `z`-regular by arcs and `r`-regular by edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub z_claimed: usize,
    pub r_claimed: usize,
    pub is_regular: bool,
    pub violations: Vec<DegreeViolation>,
}

/// Every vertex must be the tail of `z` arcs, the head of `z` arcs and
/// incident with `r` edges.
pub fn check_regularity(g: &MixedGraph, z: usize, r: usize) -> RegularityReport {
    let violations: Vec<_> = g
        .degree_table()
        .into_iter()
        .enumerate()
        .filter(|&(_, (o, i, e))| o != z || i != z || e != r)
        .map(
            |(vertex, (out_degree, in_degree, edge_degree))| DegreeViolation {
                vertex,
                out_degree,
                in_degree,
                edge_degree,
            },
        )
        .collect();
    RegularityReport {
        z_claimed: z,
        r_claimed: r,
        is_regular: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn directed_triangle_is_1_0_regular() {
        let g = MixedGraph::from_parts(3, [], [(0, 1), (1, 2), (2, 0)]).unwrap();
        let rep = check_regularity(&g, 1, 0);
        assert!(rep.is_regular);
        assert!(rep.violations.is_empty());
        assert!(!check_regularity(&g, 1, 1).is_regular);
    }

    #[test]
    fn violation_lists_degrees() {
        let g = MixedGraph::from_parts(3, [(0, 1)], [(0, 2)]).unwrap();
        let rep = check_regularity(&g, 0, 1);
        assert!(!rep.is_regular);
        assert_eq!(
            rep.violations[0],
            DegreeViolation {
                vertex: 0,
                out_degree: 1,
                in_degree: 0,
                edge_degree: 1
            }
        );
        assert_eq!(rep.violations.len(), 2);
    }
}
