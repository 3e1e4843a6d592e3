//! Exact combinatorics of transposition factorizations and edge-labeled graphs.
//!
//! A factorization is an ordered sequence of transpositions in the symmetric
//! group on `[n] = {1..n}`; its graph has an edge labeled `i` joining the two
//! points moved by the `i`-th factor.  The crate computes the duality between
//! such objects that arises from their greedy trail structure, together with
//! everything needed to verify it at desk scale:
//!
//! * exact permutation arithmetic under left-to-right composition ([`perm`]),
//! * the factorization/graph dictionary and canonical forms ([`egraph`]),
//! * greedy trails, trail double covers, and the dual computed several
//!   independent ways ([`trails`]),
//! * the right action of braid and loop-braid words on factorizations,
//!   half-twist words, and cabling ([`braid`]),
//! * medial digraphs, perfect chain decompositions, and selector duality
//!   ([`medial`]),
//! * rotation systems, face tracing, feedback-arc-set peggability tests, and
//!   complete-graph monodromy realization ([`surface`]),
//! * the tree bijections with their structural statistics and the self-dual
//!   tree enumerations ([`trees`]).
//!
//! Enumerations and the verification suites run in parallel with rayon by
//! default; build with `--no-default-features` for a fully sequential crate.

pub mod braid;
pub mod egraph;
mod exec;
pub mod io;
pub mod medial;
pub mod perm;
pub mod surface;
pub mod trails;
pub mod trees;
pub mod verify;

pub use egraph::{EdgeLabeledGraph, Factorization, LabelingMode};
pub use perm::{Permutation, Transposition};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degree mismatch: expected ground set [{expected}], found [{found}]")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("graph without vertex labels cannot be read back as a factorization")]
    NeedsVertexLabels,
    #[error("word is on {word} strands but the factorization has {factors} factors")]
    StrandMismatch { word: usize, factors: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("medial digraph has a directed cycle")]
    CyclicMedial,
    #[error("selector domain does not match the internal vertices of the digraph")]
    SelectorDomain,
    #[error("operation requires identity monodromy, found {0}")]
    NotIdentityMonodromy(String),
    #[error("vertex {vertex} is an endpoint of edge {edge}")]
    VertexIncidentToEdge { vertex: usize, edge: usize },
    #[error("no edge labeling of the complete graph has this cycle type: {0}")]
    InfeasibleType(String),
    #[error("size {given} exceeds the guard {guard} for exact enumeration")]
    SizeGuard { given: usize, guard: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal invariant violated: {0}")]
    Defect(String),
}

pub type Result<T> = std::result::Result<T, Error>;
