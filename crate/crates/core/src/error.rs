//! Error types shared across the crate.
//!
//! Violations of input contracts, work-bound refusals, and internal
//! verification failures are kept apart so callers (the CLI in particular)
//! can map them to distinct exit codes.

use thiserror::Error;

use crate::hypergraph::Edge;

/// A broken hypergraph invariant, naming the offending edge.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("edge {edge:?} has {found} vertices, expected {expected}")]
    WrongArity {
        edge: Edge,
        expected: u32,
        found: usize,
    },
    #[error("edge {edge:?} repeats vertex {vertex}")]
    RepeatedVertex { edge: Edge, vertex: u32 },
    #[error("edge {edge:?} contains vertex {vertex} outside 1..={n}")]
    OutOfRange { edge: Edge, vertex: u32, n: u32 },
}

/// A malformed ordered vertex partition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("vertex {vertex} appears in more than one class")]
    NotDisjoint { vertex: u32 },
    #[error("vertex {vertex} is missing from every class")]
    Missing { vertex: u32 },
    #[error("vertex {vertex} is outside 1..={n}")]
    OutOfRange { vertex: u32, n: u32 },
    #[error("expected {expected} classes, found {found}")]
    WrongClassCount { expected: u32, found: usize },
}

/// An edge-coloring that breaks the coloring contract for its graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("edge {edge:?} has no color assigned")]
    NotTotal { edge: Edge },
    #[error("edge {edge:?} is colored with its own vertex {color}")]
    ColorInsideEdge { edge: Edge, color: u32 },
    #[error("edge {edge:?} has color {color} outside 1..={n}")]
    ColorOutOfRange { edge: Edge, color: u32, n: u32 },
    #[error("color assigned to edge {edge:?} which is not in the graph")]
    UnknownEdge { edge: Edge },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleError {
    #[error("loose cycles need uniformity >= 3, got {r}")]
    UniformityTooSmall { r: u32 },
    #[error("loose cycles need length >= 3, got {ell}")]
    LengthTooSmall { ell: u32 },
    #[error(
        "instance too large for exhaustive cycle counting: support {support} (max {max_support}), \
         {edges} edges (max {max_edges}); raise the size guard to proceed"
    )]
    SizeGuard {
        support: usize,
        edges: usize,
        max_support: usize,
        max_edges: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("uniformity must be >= 2, got {r}")]
    UniformityTooSmall { r: u32 },
    #[error(
        "block size out of range: need 1 <= s <= (1 - 1/r) * n, i.e. s*r <= (r-1)*n; \
         got s={s}, r={r}, n={n}"
    )]
    BlockSizeOutOfRange { s: u32, r: u32, n: u32 },
    #[error(
        "no partition family captured every required {r}-set after {rounds} rounds \
         of {family_size} partitions each"
    )]
    CaptureFailed {
        rounds: usize,
        family_size: usize,
        r: u32,
    },
    #[error("decomposition invariant breached: {what}")]
    InvariantBreach { what: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("work estimate {estimate:.3e} exceeds the bound {bound:.3e}; raise the work bound to proceed")]
    WorkBound { estimate: f64, bound: f64 },
    #[error("{what}")]
    BadParams { what: String },
    #[error(transparent)]
    Graph(#[from] Violation),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {what}")]
    Malformed { line: usize, what: String },
    #[error("line {line}: expected {expected} fields, found {found}")]
    FieldCount {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Graph(#[from] Violation),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

/// Coarse failure class, used by the CLI to pick an exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    /// Inputs violate a stated precondition.
    Precondition,
    /// The request is valid but exceeds a configured work or size guard.
    WorkBound,
    /// An internal invariant check failed after the work was done.
    Verification,
}

/// Any error produced by this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] Violation),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Cycle(#[from] CycleError),
    #[error(transparent)]
    Decompose(#[from] DecomposeError),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Format(#[from] FormatError),
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::Graph(_) | Error::Partition(_) | Error::Coloring(_) | Error::Format(_) => {
                ErrorCategory::Precondition
            }
            Error::Cycle(e) => match e {
                CycleError::SizeGuard { .. } => ErrorCategory::WorkBound,
                _ => ErrorCategory::Precondition,
            },
            Error::Decompose(e) => match e {
                DecomposeError::CaptureFailed { .. } | DecomposeError::InvariantBreach { .. } => {
                    ErrorCategory::Verification
                }
                _ => ErrorCategory::Precondition,
            },
            Error::Count(e) => match e {
                CountError::WorkBound { .. } => ErrorCategory::WorkBound,
                _ => ErrorCategory::Precondition,
            },
        }
    }
}
