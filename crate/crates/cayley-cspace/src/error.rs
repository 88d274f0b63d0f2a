// Copyright 2026 the Cayley-Cspace Authors
// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced while building or validating graphs, constructions,
/// linkages, and configuration-space computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An edge appears more than once in an edge list.
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    /// An edge joins a vertex to itself.
    #[error("self loop at vertex {0}")]
    SelfLoop(usize),
    /// An edge endpoint is outside `0..vertex_count`.
    #[error("vertex {0} out of range (vertex count {1})")]
    VertexOutOfRange(usize, usize),
    /// A construction step references a vertex that does not exist yet,
    /// repeats a new vertex, or otherwise breaks the incremental invariants.
    #[error("invalid construction: {0}")]
    InvalidConstruction(String),
    /// A queried edge is not present in the graph.
    #[error("edge ({0}, {1}) not in graph")]
    EdgeNotInGraph(usize, usize),
    /// The operation requires a wellconstrained (minimally rigid) graph.
    #[error("graph is not wellconstrained")]
    NotWellconstrained,
    /// The graph with its base pair added is not buildable from that pair by
    /// degree-2 vertex additions, so it is not a valid linkage substrate.
    #[error("graph plus base pair is not buildable from the base pair")]
    NotHennebergFromF,
    /// An edge length is zero or negative.
    #[error("nonpositive length on edge ({0}, {1})")]
    NonpositiveLength(usize, usize),
    /// A construction step index is out of range.
    #[error("step index {0} out of range ({1} steps)")]
    StepOutOfRange(usize, usize),
    /// A collapsed rigid subsystem admits no planar realization, so the
    /// whole configuration space is empty.
    #[error("rigid subsystem unrealizable; configuration space is empty")]
    SubsystemUnrealizable,
    /// Two circle centers coincide, so their intersection is not unique.
    #[error("coincident circle centers")]
    CoincidentCenters,
    /// A construction step degenerated to coincident anchor points.
    #[error("degenerate step {0}: anchor points coincide")]
    DegenerateStep(usize),
    /// The orientation search space is larger than the configured cap.
    #[error("{0} orientation bits exceed cap {1}")]
    TooManyOrientations(usize, usize),
    /// The input graph is not a valid simple 1-dof substrate for the
    /// requested classification.
    #[error("not a simple 1-dof graph on the given base pair")]
    NotSimple1DofHenneberg,
    /// A classification precondition (triangle-free / 1-path) is violated.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    /// The host is not buildable from any base edge.
    #[error("graph is not buildable from any base edge")]
    NotHenneberg,
    /// No value of the input diagonal admits a planar quadrilateral.
    #[error("empty feasibility: no input diagonal length fits the sides")]
    EmptyFeasibility,
    /// Input file or schema problem, carrying a human-readable message.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
