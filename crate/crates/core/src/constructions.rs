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

//! Generators for the explicit mixed graph families.

use crate::error::GraphError;
use crate::graph::MixedGraph;

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidParameter(msg.into())
}

// Generators below only ever insert in-range, loop-free pairs.
fn build(n: usize, edges: Vec<(usize, usize)>, arcs: Vec<(usize, usize)>) -> MixedGraph {
    MixedGraph::from_parts(n, edges, arcs).expect("generator produced an invalid element")
}

/// Undirected cycle `C_n`, `n >= 3`.
pub fn undirected_cycle(n: usize) -> Result<MixedGraph, GraphError> {
    if n < 3 {
        return Err(invalid(format!("undirected cycle needs n >= 3, got {n}")));
    }
    Ok(build(n, (0..n).map(|i| (i, (i + 1) % n)).collect(), vec![]))
}

/// Directed cycle on `n >= 2` vertices.
pub fn directed_cycle(n: usize) -> Result<MixedGraph, GraphError> {
    if n < 2 {
        return Err(invalid(format!("directed cycle needs n >= 2, got {n}")));
    }
    Ok(build(n, vec![], (0..n).map(|i| (i, (i + 1) % n)).collect()))
}

/// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> MixedGraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    build(10, edges, vec![])
}

/// The circulant digraph on `z(g-1)+1` vertices with jumps `1..=z`.
/// It is `z`-regular by arcs with directed girth `g`.
pub fn circulant_digraph(z: usize, g: usize) -> Result<MixedGraph, GraphError> {
    if z < 1 || g < 2 {
        return Err(invalid(format!(
            "circulant digraph needs z >= 1 and g >= 2, got z={z}, g={g}"
        )));
    }
    let n = z * (g - 1) + 1;
    let arcs = (0..n)
        .flat_map(|i| (1..=z).map(move |s| (i, (i + s) % n)))
        .collect();
    Ok(build(n, vec![], arcs))
}

/// Cartesian product `g1 □ g2` of two simple mixed graphs.
///
/// Vertex `(u, v)` gets index `u * g2.order() + v`. `(u, v)` and `(u', v)`
/// are joined as `u` and `u'` are in `g1`; `(u, v)` and `(u, v')` as `v`
/// and `v'` are in `g2`.
pub fn cartesian_product(g1: &MixedGraph, g2: &MixedGraph) -> Result<MixedGraph, GraphError> {
    for (name, g) in [("first", g1), ("second", g2)] {
        if let Some(why) = g.simplicity_violation() {
            return Err(GraphError::NotSimple(format!("{name} factor: {why}")));
        }
    }
    let (n1, n2) = (g1.order(), g2.order());
    let idx = |u: usize, v: usize| u * n2 + v;
    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    for v in 0..n2 {
        edges.extend(g1.edges().iter().map(|e| (idx(e.u, v), idx(e.v, v))));
        arcs.extend(g1.arcs().iter().map(|a| (idx(a.tail, v), idx(a.head, v))));
    }
    for u in 0..n1 {
        edges.extend(g2.edges().iter().map(|e| (idx(u, e.u), idx(u, e.v))));
        arcs.extend(g2.arcs().iter().map(|a| (idx(u, a.tail), idx(u, a.head))));
    }
    Ok(build(n1 * n2, edges, arcs))
}

/// Hangs a tree of the given radius at `root`: the root gets `r` children,
/// every other internal vertex `r - 1`. Returns the next free index.
fn hang_tree(
    edges: &mut Vec<(usize, usize)>,
    root: usize,
    mut next: usize,
    r: usize,
    radius: usize,
) -> usize {
    let mut frontier = vec![root];
    for level in 0..radius {
        let children = if level == 0 { r } else { r - 1 };
        let mut fresh = Vec::with_capacity(frontier.len() * children);
        for &p in &frontier {
            for _ in 0..children {
                edges.push((p, next));
                fresh.push(next);
                next += 1;
            }
        }
        frontier = fresh;
    }
    next
}

/// The mixed tree contained in every `[1, r; g]`-mixed graph: a directed
/// path `x_0 -> ... -> x_{g-1}` with an undirected tree hung at each `x_i`.
///
/// The radius at `x_i` is `i` for `i <= (g-1)/2` (odd `g`) or
/// `i <= (g-2)/2` (even `g`), and `g-i-1` past the middle. The path
/// occupies vertices `0..g`; tree vertices follow in path order.
pub fn lower_bound_tree(r: usize, g: usize) -> Result<MixedGraph, GraphError> {
    if r < 2 || g < 3 {
        return Err(invalid(format!(
            "lower-bound tree needs r >= 2 and g >= 3, got r={r}, g={g}"
        )));
    }
    let last_rising = if g % 2 == 1 { (g - 1) / 2 } else { (g - 2) / 2 };
    let mut edges = Vec::new();
    let mut next = g;
    for i in 0..g {
        let radius = if i <= last_rising { i } else { g - i - 1 };
        next = hang_tree(&mut edges, i, next, r, radius);
    }
    let arcs = (0..g - 1).map(|i| (i, i + 1)).collect();
    Ok(build(next, edges, arcs))
}

/// `K_{r+2,r+2}` with the cycles of a 2-factor oriented as directed cycles.
///
/// Class `A` is `0..r+2`, class `B` is `r+2..2r+4`. Each part `p` of the
/// partition consumes the next `p` indices `a_k..a_{k+p}` of both classes
/// and becomes the directed cycle `a_k -> b_k -> a_{k+1} -> ... -> b_{k+p-1} -> a_k`.
/// Every other pair across the classes is an edge.
pub fn oriented_kbipartite(r: usize, partition: &[usize]) -> Result<MixedGraph, GraphError> {
    let side = r + 2;
    if partition.iter().any(|&p| p < 2) || partition.iter().sum::<usize>() != side {
        return Err(invalid(format!(
            "partition {partition:?} must have parts >= 2 summing to r + 2 = {side}"
        )));
    }
    let mut arcs = Vec::with_capacity(2 * side);
    let mut start = 0;
    for &p in partition {
        for j in 0..p {
            let a = start + j;
            let b = side + start + j;
            let a_next = start + (j + 1) % p;
            arcs.push((a, b));
            arcs.push((b, a_next));
        }
        start += p;
    }
    let mut edges = Vec::new();
    for a in 0..side {
        for b in side..2 * side {
            if !arcs.contains(&(a, b)) && !arcs.contains(&(b, a)) {
                edges.push((a, b));
            }
        }
    }
    Ok(build(2 * side, edges, arcs))
}

/// Edge neighbourhoods of vertices `0..14` in the 28-vertex `[1,3;5]` graph.
const H28_NEIGHBOURS: [[usize; 3]; 14] = [
    [14, 17, 21],
    [15, 18, 22],
    [16, 19, 23],
    [17, 20, 24],
    [14, 18, 25],
    [15, 19, 26],
    [16, 20, 27],
    [14, 23, 27],
    [15, 21, 24],
    [16, 22, 25],
    [17, 23, 26],
    [18, 24, 27],
    [19, 21, 25],
    [20, 22, 26],
];

/// A `[1, 3; 5]`-mixed graph on 28 vertices: four directed 7-cycles
/// `(i, i+1, ..., i+6)` for `i` in `{0, 7, 14, 21}` and 42 edges, all
/// between `0..14` and `14..28`.
pub fn h28_graph() -> MixedGraph {
    let mut arcs = Vec::with_capacity(28);
    for base in [0, 7, 14, 21] {
        for j in 0..7 {
            arcs.push((base + j, base + (j + 1) % 7));
        }
    }
    let edges = H28_NEIGHBOURS
        .iter()
        .enumerate()
        .flat_map(|(v, ns)| ns.iter().map(move |&w| (v, w)))
        .collect();
    build(28, edges, arcs)
}

/// The circulant `[1, 2; g]` graph for odd `g`: order `(g^2+1)/2`, arcs
/// `i -> i+g`, edges `i -- i+1`.
pub fn circulant_12g_odd(g: usize) -> Result<MixedGraph, GraphError> {
    if g < 3 || g.is_multiple_of(2) {
        return Err(invalid(format!("circ-12g needs odd g >= 3, got {g}")));
    }
    let n = (g * g).div_ceil(2);
    let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
    let arcs = (0..n).map(|i| (i, (i + g) % n)).collect();
    Ok(build(n, edges, arcs))
}

/// `H_g` for even `g`: `C_g` times a directed path on `g/2` vertices, plus
/// the wrap arcs `(i, g/2-1) -> (i+g/2, 0)`. Vertex `(i, j)` has index
/// `i * (g/2) + j`.
pub fn h_even(g: usize) -> Result<MixedGraph, GraphError> {
    if g < 4 || g % 2 == 1 {
        return Err(invalid(format!("h-even needs even g >= 4, got {g}")));
    }
    let h = g / 2;
    let idx = |i: usize, j: usize| (i % g) * h + j;
    let mut edges = Vec::with_capacity(g * h);
    let mut arcs = Vec::with_capacity(g * h);
    for i in 0..g {
        for j in 0..h {
            edges.push((idx(i, j), idx(i + 1, j)));
            if j + 1 < h {
                arcs.push((idx(i, j), idx(i, j + 1)));
            }
        }
        arcs.push((idx(i, h - 1), idx(i + h, 0)));
    }
    Ok(build(g * h, edges, arcs))
}

/// Jump set and order of the circulant `[z, 1; 4]` graph.
pub fn z14_jumps(z: usize) -> (usize, Vec<usize>) {
    if z % 2 == 1 {
        let n = 3 * (z + 1);
        let jumps = (1..=z.div_ceil(2)).chain(n / 2 + 1..=2 * z + 1).collect();
        (n, jumps)
    } else {
        let n = 3 * z + 2;
        let jumps = (1..=z / 2).chain(n / 2 + 1..=2 * z + 1).collect();
        (n, jumps)
    }
}

/// Circulant digraph with the [`z14_jumps`] jump set plus the antipodal
/// matching `i -- i + N/2`. It is `[z, 1]`-regular with girth 4.
pub fn circulant_z14(z: usize) -> Result<MixedGraph, GraphError> {
    if z < 1 {
        return Err(invalid("circ-z14 needs z >= 1"));
    }
    let (n, jumps) = z14_jumps(z);
    let arcs = (0..n)
        .flat_map(|i| jumps.iter().map(move |&s| (i, (i + s) % n)))
        .collect();
    let edges = (0..n / 2).map(|i| (i, i + n / 2)).collect();
    Ok(build(n, edges, arcs))
}
