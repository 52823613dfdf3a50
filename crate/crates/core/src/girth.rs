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

//! Mixed girth.
//!
//! A mixed cycle is a closed walk `v_0, ..., v_{k-1}, v_0` with distinct
//! vertices in which every step uses an edge (either way) or an arc (forward
//! only). Traversing one undirected edge out and back is not a cycle, but two
//! distinct elements on the same pair are (a 2-cycle).
//!
//! [`mixed_girth`] is the BFS engine. [`mixed_girth_oracle`] enumerates
//! simple cycles by depth-first search and shares no code with the engine.

use std::collections::VecDeque;
use std::fmt;

use crate::error::BudgetExceeded;
use crate::graph::{MixedGraph, StepKind};

/// The element of the original graph a replacement arc came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Origin {
    /// Index into [`MixedGraph::edges`].
    Edge(usize),
    /// Index into [`MixedGraph::arcs`].
    Arc(usize),
}

impl Origin {
    pub fn kind(&self) -> StepKind {
        match self {
            Origin::Edge(_) => StepKind::Edge,
            Origin::Arc(_) => StepKind::Arc,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LabeledArc {
    pub tail: usize,
    pub head: usize,
    pub origin: Origin,
}

/// Each undirected edge replaced by two antiparallel arcs carrying the
/// edge's identity; original arcs kept as they are.
#[derive(Debug, Clone)]
pub struct ReplacementDigraph {
    n: usize,
    arcs: Vec<LabeledArc>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
}

impl ReplacementDigraph {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[LabeledArc] {
        &self.arcs
    }

    /// Indices of arcs leaving `v`, ordered by head then origin.
    pub fn out_arcs(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// Indices of arcs entering `v`, ordered by tail then origin.
    pub fn in_arcs(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }
}

pub fn replacement_digraph(g: &MixedGraph) -> ReplacementDigraph {
    let n = g.order();
    let mut arcs = Vec::with_capacity(2 * g.edges().len() + g.arcs().len());
    for (i, e) in g.edges().iter().enumerate() {
        arcs.push(LabeledArc {
            tail: e.u,
            head: e.v,
            origin: Origin::Edge(i),
        });
        arcs.push(LabeledArc {
            tail: e.v,
            head: e.u,
            origin: Origin::Edge(i),
        });
    }
    for (i, a) in g.arcs().iter().enumerate() {
        arcs.push(LabeledArc {
            tail: a.tail,
            head: a.head,
            origin: Origin::Arc(i),
        });
    }
    let mut out = vec![Vec::new(); n];
    let mut inc = vec![Vec::new(); n];
    for (i, a) in arcs.iter().enumerate() {
        out[a.tail].push(i);
        inc[a.head].push(i);
    }
    for list in &mut out {
        list.sort_by_key(|&i| (arcs[i].head, arcs[i].origin));
    }
    for list in &mut inc {
        list.sort_by_key(|&i| (arcs[i].tail, arcs[i].origin));
    }
    ReplacementDigraph { n, arcs, out, inc }
}

/// A cycle certificate: `steps[i]` joins `vertices[i]` to `vertices[i + 1]`,
/// with the last step closing back to `vertices[0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
    pub steps: Vec<StepKind>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Checks the witness against `g`: matching lengths, distinct vertices,
    /// every step realised by an element of the declared kind (arcs forward),
    /// and for 2-cycles two distinct elements.
    pub fn validate(&self, g: &MixedGraph) -> Result<(), String> {
        let k = self.vertices.len();
        if k != self.steps.len() {
            return Err(format!("{} vertices but {} steps", k, self.steps.len()));
        }
        if k < 2 {
            return Err(format!("cycle of length {k}"));
        }
        let mut seen = vec![false; g.order()];
        for &v in &self.vertices {
            if v >= g.order() {
                return Err(format!("vertex {v} out of range"));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(format!("vertex {v} repeated"));
            }
        }
        for i in 0..k {
            let (a, b) = (self.vertices[i], self.vertices[(i + 1) % k]);
            let present = match self.steps[i] {
                StepKind::Edge => g.edge_multiplicity(a, b) > 0,
                StepKind::Arc => g.arc_multiplicity(a, b) > 0,
            };
            if !present {
                return Err(format!("no {} from {a} to {b}", self.steps[i]));
            }
        }
        if k == 2 && self.steps == [StepKind::Edge, StepKind::Edge] {
            let (a, b) = (self.vertices[0], self.vertices[1]);
            if g.edge_multiplicity(a, b) < 2 {
                return Err(format!("2-cycle on {{{a}, {b}}} retraces a single edge"));
            }
        }
        Ok(())
    }
}

impl fmt::Display for CycleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, s) in self.vertices.iter().zip(&self.steps) {
            let sym = match s {
                StepKind::Edge => "--",
                StepKind::Arc => "->",
            };
            write!(f, "{v} {sym} ")?;
        }
        match self.vertices.first() {
            Some(v) => write!(f, "{v}"),
            None => Ok(()),
        }
    }
}

/// The lexicographically first 2-cycle, if the graph has one.
fn two_cycle(g: &MixedGraph) -> Option<CycleWitness> {
    use std::collections::BTreeMap;
    // pair -> (edges, arcs low->high, arcs high->low)
    let mut pairs: BTreeMap<(usize, usize), (usize, usize, usize)> = BTreeMap::new();
    for e in g.edges() {
        pairs.entry((e.u, e.v)).or_default().0 += 1;
    }
    for a in g.arcs() {
        let entry = pairs
            .entry((a.tail.min(a.head), a.tail.max(a.head)))
            .or_default();
        if a.tail < a.head {
            entry.1 += 1;
        } else {
            entry.2 += 1;
        }
    }
    pairs.into_iter().find_map(|((u, v), (e, fwd, back))| {
        let steps = if e >= 2 {
            vec![StepKind::Edge, StepKind::Edge]
        } else if fwd > 0 && back > 0 {
            vec![StepKind::Arc, StepKind::Arc]
        } else if e > 0 && fwd > 0 {
            vec![StepKind::Arc, StepKind::Edge]
        } else if e > 0 && back > 0 {
            vec![StepKind::Edge, StepKind::Arc]
        } else {
            return None;
        };
        Some(CycleWitness {
            vertices: vec![u, v],
            steps,
        })
    })
}

/// Breadth-first search from `src` with depth at most `limit`, ignoring
/// replacement arcs whose origin is `skip`. Returns the parent arc of every
/// reached vertex (`usize::MAX` for `src`) and the distances.
fn bfs(
    rd: &ReplacementDigraph,
    src: usize,
    limit: usize,
    skip: Option<Origin>,
    target: Option<usize>,
) -> (Vec<usize>, Vec<usize>) {
    let n = rd.order();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    dist[src] = 0;
    queue.push_back(src);
    while let Some(x) = queue.pop_front() {
        if dist[x] >= limit {
            break;
        }
        for &ai in rd.out_arcs(x) {
            let a = &rd.arcs()[ai];
            if Some(a.origin) == skip || dist[a.head] != usize::MAX {
                continue;
            }
            dist[a.head] = dist[x] + 1;
            parent[a.head] = ai;
            if Some(a.head) == target {
                return (parent, dist);
            }
            queue.push_back(a.head);
        }
    }
    (parent, dist)
}

fn trace_path(rd: &ReplacementDigraph, parent: &[usize], src: usize, to: usize) -> Vec<usize> {
    let mut path = Vec::new();
    let mut x = to;
    while x != src {
        let ai = parent[x];
        path.push(ai);
        x = rd.arcs()[ai].tail;
    }
    path.reverse();
    path
}

/// The girth of `g` with a shortest-cycle witness, or `None` if `g` is acyclic.
///
/// 2-cycles are found by inspecting element multiplicities. Longer cycles
/// come from a BFS out of every vertex `v` in the replacement digraph,
/// closed by a replacement arc entering `v`. When the only route to that
/// arc's tail is the single undirected edge the closing arc came from, the
/// distance is recomputed with that edge removed.
///
/// The witness starts at the smallest vertex lying on any shortest cycle.
pub fn mixed_girth(g: &MixedGraph) -> Option<CycleWitness> {
    if let Some(w) = two_cycle(g) {
        return Some(w);
    }
    let rd = replacement_digraph(g);
    let n = g.order();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for v in 0..n {
        if rd.in_arcs(v).is_empty() || rd.out_arcs(v).is_empty() {
            continue;
        }
        let best_len = best.as_ref().map_or(n + 1, |b| b.0);
        if best_len <= 3 {
            break;
        }
        // cycles through v must be strictly shorter than best_len
        let limit = best_len - 2;
        let (parent, dist) = bfs(&rd, v, limit, None, None);
        for &ci in rd.in_arcs(v) {
            let close = rd.arcs()[ci];
            let w = close.tail;
            let cur = best.as_ref().map_or(n + 1, |b| b.0);
            let path = match dist[w] {
                usize::MAX => continue,
                d if d >= 2 => {
                    if d + 1 >= cur {
                        continue;
                    }
                    trace_path(&rd, &parent, v, w)
                }
                _ => {
                    // Without 2-cycles the unique length-1 route to w is the
                    // closing element itself.
                    if cur <= 3 {
                        continue;
                    }
                    let (p2, d2) = bfs(&rd, v, cur - 2, Some(close.origin), Some(w));
                    if d2[w] == usize::MAX {
                        continue;
                    }
                    trace_path(&rd, &p2, v, w)
                }
            };
            let mut cycle = path;
            cycle.push(ci);
            if cycle.len() < cur {
                best = Some((cycle.len(), cycle));
            }
        }
    }
    best.map(|(_, arcs)| CycleWitness {
        vertices: arcs.iter().map(|&ai| rd.arcs()[ai].tail).collect(),
        steps: arcs.iter().map(|&ai| rd.arcs()[ai].origin.kind()).collect(),
    })
}

/// Default node budget for [`mixed_girth_oracle`].
pub const ORACLE_DEFAULT_BUDGET: u64 = 50_000_000;

/// Shortest mixed cycle of length at most `max_len`, by exhaustive
/// enumeration of simple cycles. `Ok(None)` means no cycle of length
/// `<= max_len` exists.
pub fn mixed_girth_oracle(
    g: &MixedGraph,
    max_len: usize,
) -> Result<Option<CycleWitness>, BudgetExceeded> {
    mixed_girth_oracle_with_budget(g, max_len, ORACLE_DEFAULT_BUDGET)
}

struct Enumerator<'a> {
    moves: Vec<Vec<(usize, StepKind, usize)>>,
    start: usize,
    on_path: Vec<bool>,
    vertices: Vec<usize>,
    steps: Vec<(StepKind, usize)>,
    best: Option<CycleWitness>,
    cap: usize,
    nodes: u64,
    budget: u64,
    _g: &'a MixedGraph,
}

impl Enumerator<'_> {
    fn extend(&mut self, x: usize) -> Result<(), BudgetExceeded> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(BudgetExceeded {
                budget: self.budget,
            });
        }
        let taken = self.steps.len();
        for mi in 0..self.moves[x].len() {
            let (y, kind, id) = self.moves[x][mi];
            let len = taken + 1;
            if len > self.cap {
                break;
            }
            if y == self.start {
                // a 2-cycle must use two different elements
                if taken == 0 || (taken == 1 && self.steps[0] == (kind, id)) {
                    continue;
                }
                let mut steps: Vec<StepKind> = self.steps.iter().map(|s| s.0).collect();
                steps.push(kind);
                self.best = Some(CycleWitness {
                    vertices: self.vertices.clone(),
                    steps,
                });
                self.cap = len - 1;
                continue;
            }
            if y < self.start || self.on_path[y] || len + 1 > self.cap {
                continue;
            }
            self.on_path[y] = true;
            self.vertices.push(y);
            self.steps.push((kind, id));
            self.extend(y)?;
            self.steps.pop();
            self.vertices.pop();
            self.on_path[y] = false;
        }
        Ok(())
    }
}

/// [`mixed_girth_oracle`] with an explicit budget on search nodes.
pub fn mixed_girth_oracle_with_budget(
    g: &MixedGraph,
    max_len: usize,
    budget: u64,
) -> Result<Option<CycleWitness>, BudgetExceeded> {
    let n = g.order();
    let mut moves = vec![Vec::new(); n];
    for (i, e) in g.edges().iter().enumerate() {
        moves[e.u].push((e.v, StepKind::Edge, i));
        moves[e.v].push((e.u, StepKind::Edge, i));
    }
    for (i, a) in g.arcs().iter().enumerate() {
        moves[a.tail].push((a.head, StepKind::Arc, i));
    }
    for m in &mut moves {
        m.sort_unstable();
    }
    let mut en = Enumerator {
        moves,
        start: 0,
        on_path: vec![false; n],
        vertices: Vec::new(),
        steps: Vec::new(),
        best: None,
        cap: max_len,
        nodes: 0,
        budget,
        _g: g,
    };
    for s in 0..n {
        en.start = s;
        en.on_path[s] = true;
        en.vertices.push(s);
        en.extend(s)?;
        en.vertices.pop();
        en.on_path[s] = false;
    }
    Ok(en.best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn both(g: &MixedGraph) -> (Option<usize>, Option<usize>) {
        let a = mixed_girth(g);
        let b = mixed_girth_oracle(g, g.order().max(2)).unwrap();
        if let Some(w) = &a {
            w.validate(g).unwrap();
        }
        if let Some(w) = &b {
            w.validate(g).unwrap();
        }
        (a.map(|w| w.len()), b.map(|w| w.len()))
    }

    #[test]
    fn replacement_counts() {
        let g = MixedGraph::from_parts(2, [(0, 1)], []).unwrap();
        let rd = replacement_digraph(&g);
        assert_eq!(rd.arcs().len(), 2);
        assert!(rd.arcs().iter().all(|a| a.origin == Origin::Edge(0)));
        let h = MixedGraph::from_parts(2, [], [(0, 1)]).unwrap();
        let rd = replacement_digraph(&h);
        assert_eq!(
            rd.arcs(),
            &[LabeledArc {
                tail: 0,
                head: 1,
                origin: Origin::Arc(0)
            }]
        );
    }

    #[test]
    fn empty_graph_is_acyclic() {
        assert_eq!(both(&MixedGraph::new(5)), (None, None));
    }

    #[test]
    fn single_edge_is_not_a_cycle() {
        assert_eq!(
            both(&MixedGraph::from_parts(2, [(0, 1)], []).unwrap()),
            (None, None)
        );
    }

    #[test]
    fn edge_plus_arc_is_a_2_cycle() {
        let g = MixedGraph::from_parts(2, [(0, 1)], [(0, 1)]).unwrap();
        assert_eq!(both(&g), (Some(2), Some(2)));
        let w = mixed_girth(&g).unwrap();
        assert_eq!(w.steps, vec![StepKind::Arc, StepKind::Edge]);
    }

    #[test]
    fn parallel_edges_and_antiparallel_arcs() {
        let g = MixedGraph::from_parts(2, [(0, 1), (1, 0)], []).unwrap();
        assert_eq!(both(&g), (Some(2), Some(2)));
        let g = MixedGraph::from_parts(2, [], [(0, 1), (1, 0)]).unwrap();
        assert_eq!(both(&g), (Some(2), Some(2)));
        // parallel arcs alone are not a cycle
        let g = MixedGraph::from_parts(2, [], [(0, 1), (0, 1)]).unwrap();
        assert_eq!(both(&g), (None, None));
    }

    #[test]
    fn small_cycles() {
        let tri = MixedGraph::from_parts(3, [], [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(both(&tri), (Some(3), Some(3)));
        let c4 = MixedGraph::from_parts(4, [(0, 1), (1, 2), (2, 3), (3, 0)], []).unwrap();
        assert_eq!(both(&c4), (Some(4), Some(4)));
        let utri = MixedGraph::from_parts(3, [(0, 1), (1, 2), (2, 0)], []).unwrap();
        assert_eq!(both(&utri), (Some(3), Some(3)));
    }

    #[test]
    fn transitive_triangle_has_no_cycle() {
        let g = MixedGraph::from_parts(3, [], [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(both(&g), (None, None));
        // one edge makes it cyclic
        let g = MixedGraph::from_parts(3, [(0, 2)], [(0, 1), (1, 2)]).unwrap();
        assert_eq!(both(&g), (Some(3), Some(3)));
    }

    #[test]
    fn witness_starts_at_smallest_cycle_vertex() {
        let g = MixedGraph::from_parts(6, [(3, 4), (4, 5)], [(5, 3), (0, 1)]).unwrap();
        let w = mixed_girth(&g).unwrap();
        assert_eq!(w.vertices, vec![3, 4, 5]);
        assert_eq!(w.to_string(), "3 -- 4 -- 5 -> 3");
    }

    #[test]
    fn oracle_respects_max_len_and_budget() {
        let c5 = MixedGraph::from_parts(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)], []).unwrap();
        assert_eq!(mixed_girth_oracle(&c5, 4).unwrap(), None);
        assert_eq!(mixed_girth_oracle(&c5, 5).unwrap().unwrap().len(), 5);
        assert_eq!(
            mixed_girth_oracle_with_budget(&c5, 5, 3),
            Err(BudgetExceeded { budget: 3 })
        );
    }

    #[test]
    fn witness_validation_rejects_bad_certificates() {
        let g = MixedGraph::from_parts(3, [(0, 1)], [(1, 2), (2, 0)]).unwrap();
        let ok = CycleWitness {
            vertices: vec![0, 1, 2],
            steps: vec![StepKind::Edge, StepKind::Arc, StepKind::Arc],
        };
        assert!(ok.validate(&g).is_ok());
        let backwards = CycleWitness {
            vertices: vec![0, 2, 1],
            steps: vec![StepKind::Arc, StepKind::Arc, StepKind::Edge],
        };
        assert!(backwards.validate(&g).is_err());
        let retrace = CycleWitness {
            vertices: vec![0, 1],
            steps: vec![StepKind::Edge, StepKind::Edge],
        };
        assert!(retrace.validate(&g).is_err());
    }
}
