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

//! Exact isomorphism test for small mixed multigraphs.

use crate::error::GraphError;
use crate::graph::MixedGraph;

/// Default largest order accepted by [`are_isomorphic`].
pub const ISO_DEFAULT_LIMIT: usize = 16;

/// Multiplicity matrices: `edges[u][v]` and `arcs[u][v]` (tail `u`).
struct Counts {
    n: usize,
    edges: Vec<Vec<u32>>,
    arcs: Vec<Vec<u32>>,
}

impl Counts {
    fn of(g: &MixedGraph) -> Self {
        let n = g.order();
        let mut edges = vec![vec![0; n]; n];
        let mut arcs = vec![vec![0; n]; n];
        for e in g.edges() {
            edges[e.u][e.v] += 1;
            edges[e.v][e.u] += 1;
        }
        for a in g.arcs() {
            arcs[a.tail][a.head] += 1;
        }
        Counts { n, edges, arcs }
    }

    /// Vertex invariant: own degrees, then the sorted degree triples of its
    /// out-, in- and edge-neighbourhoods.
    fn signatures(&self) -> Vec<Vec<u32>> {
        let deg: Vec<[u32; 3]> = (0..self.n)
            .map(|v| {
                [
                    self.arcs[v].iter().sum(),
                    (0..self.n).map(|u| self.arcs[u][v]).sum(),
                    self.edges[v].iter().sum(),
                ]
            })
            .collect();
        (0..self.n)
            .map(|v| {
                let mut sig = deg[v].to_vec();
                for rel in 0..3 {
                    let mut neigh: Vec<[u32; 4]> = (0..self.n)
                        .filter_map(|u| {
                            let m = match rel {
                                0 => self.arcs[v][u],
                                1 => self.arcs[u][v],
                                _ => self.edges[v][u],
                            };
                            (m > 0).then(|| [m, deg[u][0], deg[u][1], deg[u][2]])
                        })
                        .collect();
                    neigh.sort_unstable();
                    sig.push(u32::MAX);
                    sig.extend(neigh.into_iter().flatten());
                }
                sig
            })
            .collect()
    }
}

/// An isomorphism `g1 -> g2` as a vertex map (`map[v]` is the image of `v`),
/// or `None` when the graphs are not isomorphic.
///
/// The map carries edges onto edges and arcs onto arcs with direction and
/// multiplicity preserved. Both graphs must have order at most
/// [`ISO_DEFAULT_LIMIT`].
pub fn are_isomorphic(g1: &MixedGraph, g2: &MixedGraph) -> Result<Option<Vec<usize>>, GraphError> {
    are_isomorphic_with_limit(g1, g2, ISO_DEFAULT_LIMIT)
}

pub fn are_isomorphic_with_limit(
    g1: &MixedGraph,
    g2: &MixedGraph,
    limit: usize,
) -> Result<Option<Vec<usize>>, GraphError> {
    for g in [g1, g2] {
        if g.order() > limit {
            return Err(GraphError::TooLarge {
                order: g.order(),
                limit,
            });
        }
    }
    if g1.order() != g2.order()
        || g1.edges().len() != g2.edges().len()
        || g1.arcs().len() != g2.arcs().len()
    {
        return Ok(None);
    }
    let (c1, c2) = (Counts::of(g1), Counts::of(g2));
    let (s1, s2) = (c1.signatures(), c2.signatures());
    let mut a = s1.clone();
    let mut b = s2.clone();
    a.sort();
    b.sort();
    if a != b {
        return Ok(None);
    }

    // Assign the most constrained vertices first: rarest signature, then
    // vertices adjacent to already-ordered ones.
    let n = c1.n;
    let class_size = |v: usize| s1.iter().filter(|s| **s == s1[v]).count();
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order
                    .iter()
                    .filter(|&&u| c1.edges[u][v] + c1.arcs[u][v] + c1.arcs[v][u] > 0)
                    .count();
                (
                    links,
                    std::cmp::Reverse(class_size(v)),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(&c1, &c2, &s1, &s2, &order, 0, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    c1: &Counts,
    c2: &Counts,
    s1: &[Vec<u32>],
    s2: &[Vec<u32>],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..c2.n {
        if used[w] || s1[v] != s2[w] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| {
            let x = map[u];
            c1.edges[u][v] == c2.edges[x][w]
                && c1.arcs[u][v] == c2.arcs[x][w]
                && c1.arcs[v][u] == c2.arcs[w][x]
        });
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(c1, c2, s1, s2, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Checks that `map` is a bijection carrying `g1` exactly onto `g2`.
pub fn is_isomorphism(g1: &MixedGraph, g2: &MixedGraph, map: &[usize]) -> bool {
    let n = g1.order();
    if g2.order() != n || map.len() != n {
        return false;
    }
    let mut hit = vec![false; n];
    for &x in map {
        if x >= n || std::mem::replace(&mut hit[x], true) {
            return false;
        }
    }
    g1.relabel(map) == *g2
}
