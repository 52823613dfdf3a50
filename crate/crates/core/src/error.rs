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

use thiserror::Error;

/// Errors raised when building or reading a [`MixedGraph`](crate::MixedGraph).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0} is not allowed")]
    Loop(usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph is not simple: {0}")]
    NotSimple(String),
    #[error("graph order {order} exceeds the limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Errors from the closed-form bound calculators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundsError {
    #[error("undirected degree r = {0} is below 2; the Moore-type formula degenerates")]
    DegreeTooSmall(u64),
    #[error("girth g = {0} is below the minimum {1}")]
    GirthTooSmall(u64, u64),
    #[error("directed degree z must be at least 1")]
    ZeroDirectedDegree,
    #[error("z + r must be at least 1")]
    NoDegree,
    #[error("integer overflow evaluating the bound")]
    Overflow,
}

/// Raised by the brute-force girth oracle when its work budget runs out.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cycle enumeration exceeded its budget of {budget} nodes")]
pub struct BudgetExceeded {
    pub budget: u64,
}

/// Errors from the exhaustive search driver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {order} exceeds the search ceiling {ceiling}")]
    OrderAboveCeiling { order: usize, ceiling: usize },
    #[error("empty order range {start}..={end}")]
    EmptyRange { start: usize, end: usize },
    #[error(transparent)]
    Bounds(#[from] BoundsError),
}
