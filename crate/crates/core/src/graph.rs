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

//! The mixed graph data model.
//!
//! A mixed graph has vertices `0..n`, a multiset of undirected edges and a
//! multiset of directed arcs. Parallel edges, parallel or antiparallel arcs,
//! and an edge sharing its endpoints with an arc are all representable.
//! Loops are not.

use std::fmt;

use crate::error::GraphError;

/// An undirected edge, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        Edge {
            u: a.min(b),
            v: a.max(b),
        }
    }

    /// The endpoint opposite `x`. `x` must be an endpoint.
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A directed arc `tail -> head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
}

impl Arc {
    pub fn new(tail: usize, head: usize) -> Self {
        Arc { tail, head }
    }
}

/// Which kind of element a cycle step or search decision uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StepKind {
    Edge,
    Arc,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StepKind::Edge => f.write_str("edge"),
            StepKind::Arc => f.write_str("arc"),
        }
    }
}

/// A finite mixed multigraph on the vertices `0..n`.
///
/// Equality is multiset equality: two graphs are equal when they have the
/// same order and the same edges and arcs with the same multiplicities,
/// regardless of insertion order.
#[derive(Debug, Clone, Default)]
pub struct MixedGraph {
    n: usize,
    edges: Vec<Edge>,
    arcs: Vec<Arc>,
}

impl MixedGraph {
    /// An empty graph of order `n`.
    pub fn new(n: usize) -> Self {
        MixedGraph {
            n,
            edges: Vec::new(),
            arcs: Vec::new(),
        }
    }

    pub fn from_parts<E, A>(n: usize, edges: E, arcs: A) -> Result<Self, GraphError>
    where
        E: IntoIterator<Item = (usize, usize)>,
        A: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = MixedGraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        for (u, v) in arcs {
            g.add_arc(u, v)?;
        }
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: x,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_pair(u, v)?;
        self.edges.push(Edge::new(u, v));
        Ok(())
    }

    pub fn add_arc(&mut self, tail: usize, head: usize) -> Result<(), GraphError> {
        self.check_pair(tail, head)?;
        self.arcs.push(Arc::new(tail, head));
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.tail == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.head == v).count()
    }

    pub fn edge_degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.u == v || e.v == v).count()
    }

    /// `(out, in, edge)` degree triples for every vertex, computed in one pass.
    pub fn degree_table(&self) -> Vec<(usize, usize, usize)> {
        let mut t = vec![(0, 0, 0); self.n];
        for a in &self.arcs {
            t[a.tail].0 += 1;
            t[a.head].1 += 1;
        }
        for e in &self.edges {
            t[e.u].2 += 1;
            t[e.v].2 += 1;
        }
        t
    }

    pub fn edge_multiplicity(&self, u: usize, v: usize) -> usize {
        let e = Edge::new(u, v);
        self.edges.iter().filter(|&&x| x == e).count()
    }

    pub fn arc_multiplicity(&self, tail: usize, head: usize) -> usize {
        let a = Arc::new(tail, head);
        self.arcs.iter().filter(|&&x| x == a).count()
    }

    /// Edges sorted lexicographically.
    pub fn sorted_edges(&self) -> Vec<Edge> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    /// Arcs sorted lexicographically.
    pub fn sorted_arcs(&self) -> Vec<Arc> {
        let mut a = self.arcs.clone();
        a.sort_unstable();
        a
    }

    /// Describes the first way this graph fails to be simple, if any.
    ///
    /// Simple here means every unordered pair carries at most one element:
    /// no parallel edges, no parallel or antiparallel arcs, and no edge
    /// together with an arc on the same pair.
    pub fn simplicity_violation(&self) -> Option<String> {
        let mut seen = std::collections::HashMap::new();
        for e in &self.edges {
            if let Some(prev) = seen.insert((e.u, e.v), format!("edge {{{}, {}}}", e.u, e.v)) {
                return Some(format!(
                    "edge {{{}, {}}} shares its pair with {}",
                    e.u, e.v, prev
                ));
            }
        }
        for a in &self.arcs {
            let key = (a.tail.min(a.head), a.tail.max(a.head));
            if let Some(prev) = seen.insert(key, format!("arc ({}, {})", a.tail, a.head)) {
                return Some(format!(
                    "arc ({}, {}) shares its pair with {}",
                    a.tail, a.head, prev
                ));
            }
        }
        None
    }

    pub fn is_simple(&self) -> bool {
        self.simplicity_violation().is_none()
    }

    /// Applies the vertex map `v -> perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> MixedGraph {
        assert_eq!(
            perm.len(),
            self.n,
            "permutation length must equal the order"
        );
        MixedGraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|e| Edge::new(perm[e.u], perm[e.v]))
                .collect(),
            arcs: self
                .arcs
                .iter()
                .map(|a| Arc::new(perm[a.tail], perm[a.head]))
                .collect(),
        }
    }
}

impl PartialEq for MixedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.edges.len() == other.edges.len()
            && self.arcs.len() == other.arcs.len()
            && self.sorted_edges() == other.sorted_edges()
            && self.sorted_arcs() == other.sorted_arcs()
    }
}

impl Eq for MixedGraph {}
