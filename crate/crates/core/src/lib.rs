//! Reconfiguration of regular induced subgraphs.
//!
//! A vertex set `U` of a graph `G` is a *d-regular set* when every vertex of
//! `G[U]` has exactly `d` neighbours inside `U`. Two d-regular sets of equal
//! size are adjacent under Token Jumping (TJ) when they differ by a single
//! exchange, and under Token Sliding (TS) when additionally the exchanged
//! vertices are adjacent in `G`.
//!
//! The crate provides:
//!
//! * [`graph`]: the immutable graph type, induced subgraphs, regularity
//!   predicates, small-graph isomorphism and class recognition;
//! * [`engine`]: move semantics, sequence validation, an exact BFS solver,
//!   an independent brute-force oracle and the polynomial fast paths;
//! * [`reductions`]: the true-twin blow-up, the shortest-path layering
//!   reduction (bipartite and clique-layer modes) and the pendant reduction,
//!   each with sequence lift and projection;
//! * [`sketch`]: ordering width, exact bandwidth, t-sketches and ordering lifts;
//! * [`io`]: file formats, DOT export and the command-line front end.

pub mod engine;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod reductions;
pub mod sketch;

pub use engine::{
    adjacent_under, enumerate_d_regular_sets, fast_path, neighbors, oracle_reachable, solve, validate_sequence,
    Decision, Instance, Limits, ReconfigSequence, Rule, SequenceVerdict, Solver, Violation,
};
pub use error::{Error, Result};
pub use graph::{are_isomorphic, recognize, ClassReport, Graph, VertexSet};
