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

//! Exhaustive search for `[z, r; g]`-mixed graphs of a given order.
//!
//! Graphs are simple (at most one element per vertex pair) and are built
//! one element at a time. The lowest vertex with unmet degree is completed
//! first: out-arcs, then in-arcs, then edges, each kind with increasing
//! partners. Untouched vertices are interchangeable, so only the smallest
//! one is ever tried as a new partner. An element is rejected if it closes
//! a mixed cycle shorter than `g`; complete graphs must have girth exactly `g`.

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bounds::CageParams;
use crate::error::SearchError;
use crate::girth::mixed_girth;
use crate::graph::MixedGraph;
use crate::iso::are_isomorphic_with_limit;

/// Default node budget per order.
pub const DEFAULT_BUDGET: u64 = 100_000_000;
/// Default largest order accepted.
pub const DEFAULT_CEILING: usize = 14;
/// Hard limit from the bitset representation.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    /// Node budget for a single order.
    pub budget: u64,
    pub ceiling: usize,
    /// 0 or 1 runs sequentially.
    pub threads: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: DEFAULT_BUDGET,
            ceiling: DEFAULT_CEILING,
            threads: 1,
        }
    }
}

/// Why an order was shown infeasible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Refutation {
    /// `n * r` is odd, so no `r`-regular edge set exists.
    Parity,
    /// Fewer than `2z + r + 1` vertices, or fewer than `g`.
    TooSmall,
    /// The canonical search space was exhausted.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Yes(MixedGraph),
    No(Refutation),
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExistsResult {
    pub feasibility: Feasibility,
    pub nodes: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub params: CageParams,
    pub min_order: Option<usize>,
    pub witness: Option<MixedGraph>,
    /// Orders proven infeasible, ascending.
    pub refuted_orders: Vec<usize>,
    pub budget_exhausted: bool,
    pub stats: SearchStats,
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Move {
    Arc(usize, usize),
    Edge(usize, usize),
}

enum Branch {
    Complete,
    Dead,
    Choices(Vec<Move>),
}

#[derive(Debug, Clone)]
struct State {
    n: usize,
    g: usize,
    out_nb: Vec<u64>,
    in_nb: Vec<u64>,
    edge_nb: Vec<u64>,
    out_res: Vec<usize>,
    in_res: Vec<usize>,
    edge_res: Vec<usize>,
    touched: usize,
}

impl State {
    fn new(p: CageParams, n: usize) -> Self {
        State {
            n,
            g: p.g,
            out_nb: vec![0; n],
            in_nb: vec![0; n],
            edge_nb: vec![0; n],
            out_res: vec![p.z; n],
            in_res: vec![p.z; n],
            edge_res: vec![p.r; n],
            touched: 0,
        }
    }

    fn used(&self, v: usize) -> u64 {
        self.out_nb[v] | self.in_nb[v] | self.edge_nb[v]
    }

    /// Is `to` reachable from `from` in at most `steps` mixed steps?
    fn reaches(&self, from: usize, to: usize, steps: usize) -> bool {
        let target = 1u64 << to;
        let mut seen = 1u64 << from;
        let mut frontier = seen;
        for _ in 0..steps {
            let mut next = 0;
            for x in bits(frontier) {
                next |= self.out_nb[x] | self.edge_nb[x];
            }
            next &= !seen;
            if next & target != 0 {
                return true;
            }
            if next == 0 {
                return false;
            }
            seen |= next;
            frontier = next;
        }
        false
    }

    fn closes_short_cycle(&self, m: Move) -> bool {
        let steps = self.g - 2;
        match m {
            Move::Arc(t, h) => self.reaches(h, t, steps),
            Move::Edge(a, b) => self.reaches(a, b, steps) || self.reaches(b, a, steps),
        }
    }

    #[allow(clippy::needless_range_loop)]
    fn branch(&self) -> Branch {
        let Some(v) =
            (0..self.n).find(|&v| self.out_res[v] + self.in_res[v] + self.edge_res[v] > 0)
        else {
            return Branch::Complete;
        };
        let (kind_nb, need, partner_res): (&[u64], usize, &[usize]) = if self.out_res[v] > 0 {
            (&self.out_nb, self.out_res[v], &self.in_res)
        } else if self.in_res[v] > 0 {
            (&self.in_nb, self.in_res[v], &self.out_res)
        } else {
            (&self.edge_nb, self.edge_res[v], &self.edge_res)
        };
        let touched = self.touched.max(v + 1);
        let after = match kind_nb[v] {
            0 => v,
            m => (63 - m.leading_zeros() as usize).max(v),
        };
        let used = self.used(v);
        let fresh_left = self.n - touched;
        let mut eligible = 0;
        let mut choices = Vec::new();
        for w in after + 1..self.n {
            if w >= touched {
                if w == touched {
                    eligible += fresh_left;
                } else {
                    break;
                }
            } else if used & (1 << w) != 0 || partner_res[w] == 0 {
                continue;
            } else {
                eligible += 1;
            }
            let m = if self.out_res[v] > 0 {
                Move::Arc(v, w)
            } else if self.in_res[v] > 0 {
                Move::Arc(w, v)
            } else {
                Move::Edge(v, w)
            };
            if !self.closes_short_cycle(m) {
                choices.push(m);
            }
        }
        if eligible < need || choices.is_empty() {
            return Branch::Dead;
        }
        Branch::Choices(choices)
    }

    fn apply(&mut self, m: Move) {
        match m {
            Move::Arc(t, h) => {
                self.out_nb[t] |= 1 << h;
                self.in_nb[h] |= 1 << t;
                self.out_res[t] -= 1;
                self.in_res[h] -= 1;
            }
            Move::Edge(a, b) => {
                self.edge_nb[a] |= 1 << b;
                self.edge_nb[b] |= 1 << a;
                self.edge_res[a] -= 1;
                self.edge_res[b] -= 1;
            }
        }
    }

    fn undo(&mut self, m: Move) {
        match m {
            Move::Arc(t, h) => {
                self.out_nb[t] &= !(1 << h);
                self.in_nb[h] &= !(1 << t);
                self.out_res[t] += 1;
                self.in_res[h] += 1;
            }
            Move::Edge(a, b) => {
                self.edge_nb[a] &= !(1 << b);
                self.edge_nb[b] &= !(1 << a);
                self.edge_res[a] += 1;
                self.edge_res[b] += 1;
            }
        }
    }

    fn touch(&mut self, m: Move) -> usize {
        let prev = self.touched;
        let (a, b) = match m {
            Move::Arc(t, h) => (t, h),
            Move::Edge(a, b) => (a, b),
        };
        self.touched = self.touched.max(a + 1).max(b + 1);
        prev
    }

    fn to_graph(&self) -> MixedGraph {
        let mut edges = Vec::new();
        let mut arcs = Vec::new();
        for v in 0..self.n {
            arcs.extend(bits(self.out_nb[v]).map(|w| (v, w)));
            edges.extend(bits(self.edge_nb[v]).filter(|&w| w > v).map(|w| (v, w)));
        }
        MixedGraph::from_parts(self.n, edges, arcs).expect("search state holds valid pairs")
    }
}

struct Walker<'a, F: FnMut(MixedGraph) -> bool> {
    g: usize,
    nodes: &'a AtomicU64,
    budget: u64,
    local: u64,
    out_of_budget: bool,
    /// Checked between nodes; a `true` return stops the walk.
    cancelled: &'a dyn Fn() -> bool,
    on_solution: F,
}

enum Flow {
    Continue,
    Stop,
}

impl<F: FnMut(MixedGraph) -> bool> Walker<'_, F> {
    fn count_node(&mut self) -> bool {
        self.local += 1;
        if self.local.is_multiple_of(1024) {
            let total = self.nodes.fetch_add(1024, Ordering::Relaxed) + 1024;
            if total > self.budget {
                self.out_of_budget = true;
                return false;
            }
            if (self.cancelled)() {
                return false;
            }
        }
        true
    }

    fn flush(&mut self) {
        self.nodes.fetch_add(self.local % 1024, Ordering::Relaxed);
        self.local -= self.local % 1024;
    }

    fn walk(&mut self, s: &mut State) -> Flow {
        if !self.count_node() {
            return Flow::Stop;
        }
        match s.branch() {
            Branch::Dead => Flow::Continue,
            Branch::Complete => {
                let graph = s.to_graph();
                if mixed_girth(&graph).map(|w| w.len()) == Some(self.g) && (self.on_solution)(graph)
                {
                    Flow::Stop
                } else {
                    Flow::Continue
                }
            }
            Branch::Choices(moves) => {
                for m in moves {
                    s.apply(m);
                    let prev = s.touch(m);
                    let flow = self.walk(s);
                    s.touched = prev;
                    s.undo(m);
                    if let Flow::Stop = flow {
                        return Flow::Stop;
                    }
                }
                Flow::Continue
            }
        }
    }
}

fn precheck(
    p: CageParams,
    n: usize,
    cfg: &SearchConfig,
) -> Result<Option<Refutation>, SearchError> {
    let ceiling = cfg.ceiling.min(MAX_ORDER);
    if n > ceiling {
        return Err(SearchError::OrderAboveCeiling { order: n, ceiling });
    }
    if (n * p.r) % 2 == 1 {
        return Ok(Some(Refutation::Parity));
    }
    if n < p.g || n < 2 * p.z + p.r + 1 {
        return Ok(Some(Refutation::TooSmall));
    }
    Ok(None)
}

/// Splits the search tree into independent subtrees, in DFS order.
fn frontier(root: State, want: usize, nodes: &AtomicU64) -> Vec<State> {
    let mut level = vec![root];
    for _ in 0..64 {
        if level.len() >= want {
            break;
        }
        let mut next = Vec::new();
        let mut grew = false;
        for s in level {
            nodes.fetch_add(1, Ordering::Relaxed);
            match s.branch() {
                Branch::Dead => grew = true,
                Branch::Complete => next.push(s),
                Branch::Choices(moves) => {
                    grew = true;
                    for m in moves {
                        let mut c = s.clone();
                        c.apply(m);
                        c.touch(m);
                        next.push(c);
                    }
                }
            }
        }
        level = next;
        if !grew {
            break;
        }
    }
    level
}

/// Decides whether a simple `[z, r; g]`-mixed graph of order `n` exists.
///
/// `Yes` carries the first witness in canonical search order; the same
/// witness is returned for any thread count. `No` is only returned after
/// the whole canonical search space has been exhausted.
pub fn exists_mixed_graph(
    params: CageParams,
    n: usize,
    cfg: &SearchConfig,
) -> Result<ExistsResult, SearchError> {
    if let Some(why) = precheck(params, n, cfg)? {
        return Ok(ExistsResult {
            feasibility: Feasibility::No(why),
            nodes: 0,
        });
    }
    let nodes = AtomicU64::new(0);
    let root = State::new(params, n);

    if cfg.threads <= 1 {
        let mut found = None;
        let never = || false;
        let mut w = Walker {
            g: params.g,
            nodes: &nodes,
            budget: cfg.budget,
            local: 0,
            out_of_budget: false,
            cancelled: &never,
            on_solution: |gr| {
                found = Some(gr);
                true
            },
        };
        let mut s = root;
        w.walk(&mut s);
        w.flush();
        let exhausted = w.out_of_budget;
        let feasibility = match (found, exhausted) {
            (Some(gr), _) => Feasibility::Yes(gr),
            (None, true) => Feasibility::Unknown,
            (None, false) => Feasibility::No(Refutation::Exhausted),
        };
        return Ok(ExistsResult {
            feasibility,
            nodes: nodes.load(Ordering::Relaxed),
        });
    }

    let subtrees = frontier(root, 16 * cfg.threads, &nodes);
    let first_hit = AtomicUsize::new(usize::MAX);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads)
        .build()
        .expect("thread pool");
    let results: Vec<(Option<MixedGraph>, bool)> = pool.install(|| {
        subtrees
            .into_par_iter()
            .enumerate()
            .map(|(i, mut s)| {
                if first_hit.load(Ordering::Relaxed) < i {
                    return (None, false);
                }
                let mut found = None;
                let cancel = || first_hit.load(Ordering::Relaxed) < i;
                let mut w = Walker {
                    g: params.g,
                    nodes: &nodes,
                    budget: cfg.budget,
                    local: 0,
                    out_of_budget: false,
                    cancelled: &cancel,
                    on_solution: |gr| {
                        found = Some(gr);
                        true
                    },
                };
                w.walk(&mut s);
                w.flush();
                let exhausted = w.out_of_budget;
                if found.is_some() {
                    first_hit.fetch_min(i, Ordering::Relaxed);
                }
                (found, exhausted)
            })
            .collect()
    });
    let hit = first_hit.load(Ordering::Relaxed);
    let feasibility = if hit != usize::MAX {
        // subtrees before the hit ran to completion unless the budget ran out
        if results[..hit].iter().any(|r| r.1) {
            Feasibility::Unknown
        } else {
            Feasibility::Yes(results[hit].0.clone().expect("hit subtree has a witness"))
        }
    } else if results.iter().any(|r| r.1) {
        Feasibility::Unknown
    } else {
        Feasibility::No(Refutation::Exhausted)
    };
    Ok(ExistsResult {
        feasibility,
        nodes: nodes.load(Ordering::Relaxed),
    })
}

/// Scans `n_start..=n_end` and stops at the first feasible order.
/// The budget in `cfg` applies to each order separately.
pub fn find_min_order(
    params: CageParams,
    n_start: usize,
    n_end: usize,
    cfg: &SearchConfig,
) -> Result<SearchOutcome, SearchError> {
    if n_start > n_end {
        return Err(SearchError::EmptyRange {
            start: n_start,
            end: n_end,
        });
    }
    let clock = Instant::now();
    let mut out = SearchOutcome {
        params,
        min_order: None,
        witness: None,
        refuted_orders: Vec::new(),
        budget_exhausted: false,
        stats: SearchStats::default(),
    };
    for n in n_start..=n_end {
        let res = exists_mixed_graph(params, n, cfg)?;
        out.stats.nodes += res.nodes;
        match res.feasibility {
            Feasibility::Yes(g) => {
                out.min_order = Some(n);
                out.witness = Some(g);
                break;
            }
            Feasibility::No(_) => {
                // a refutation above an undecided order does not bound the minimum
                if !out.budget_exhausted {
                    out.refuted_orders.push(n);
                }
            }
            Feasibility::Unknown => out.budget_exhausted = true,
        }
    }
    if out.budget_exhausted {
        out.min_order = None;
    }
    out.stats.elapsed = clock.elapsed();
    Ok(out)
}

/// Every witness of order `n`, reduced to pairwise non-isomorphic
/// representatives. The flag is false when the budget ran out first.
pub fn all_witnesses(
    params: CageParams,
    n: usize,
    cfg: &SearchConfig,
) -> Result<(Vec<MixedGraph>, bool), SearchError> {
    if precheck(params, n, cfg)?.is_some() {
        return Ok((Vec::new(), true));
    }
    let nodes = AtomicU64::new(0);
    let mut reps: Vec<MixedGraph> = Vec::new();
    let never = || false;
    let mut w = Walker {
        g: params.g,
        nodes: &nodes,
        budget: cfg.budget,
        local: 0,
        out_of_budget: false,
        cancelled: &never,
        on_solution: |gr: MixedGraph| {
            let known = reps.iter().any(|h| {
                are_isomorphic_with_limit(h, &gr, MAX_ORDER)
                    .expect("witness order within the isomorphism limit")
                    .is_some()
            });
            if !known {
                reps.push(gr);
            }
            false
        },
    };
    w.walk(&mut State::new(params, n));
    let complete = !w.out_of_budget;
    Ok((reps, complete))
}
