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

//! Mixed cages: mixed graphs that are `z`-regular by arcs, `r`-regular by
//! edges and have girth `g`, with the smallest possible order.
//!
//! The crate provides
//!
//! - [`MixedGraph`], a multigraph with undirected edges and directed arcs,
//!   and a small line-oriented text format ([`format`]);
//! - [`mixed_girth`], a BFS girth engine, and [`mixed_girth_oracle`], an
//!   independent cycle enumerator used to cross-check it;
//! - regularity checks and an exact isomorphism test for small graphs;
//! - closed-form lower and upper bounds on cage orders ([`bounds`]);
//! - generators for the known constructions ([`constructions`]);
//! - an exhaustive isomorph-reduced search for minimum orders ([`search`]);
//! - a table of reproducible claims ([`reproduce`]).
//!
//! ```
//! use mixcage::{check_regularity, constructions, mixed_girth};
//!
//! let h = constructions::h28_graph();
//! assert!(check_regularity(&h, 1, 3).is_regular);
//! assert_eq!(mixed_girth(&h).map(|w| w.len()), Some(5));
//! ```

pub mod bounds;
pub mod constructions;
pub mod error;
pub mod format;
pub mod girth;
pub mod graph;
pub mod iso;
pub mod regularity;
pub mod reproduce;
pub mod search;

pub use bounds::{bound_report, BoundReport, CageParams};
pub use error::{BoundsError, BudgetExceeded, GraphError, SearchError};
pub use format::{parse_graph, write_graph};
pub use girth::{mixed_girth, mixed_girth_oracle, replacement_digraph, CycleWitness};
pub use graph::{Arc, Edge, MixedGraph, StepKind};
pub use iso::are_isomorphic;
pub use regularity::{check_regularity, RegularityReport};
pub use search::{exists_mixed_graph, find_min_order, Feasibility, SearchConfig, SearchOutcome};
