//! Exact interval completion on small graphs.
//!
//! Interval models are represented combinatorially as permutations of
//! begin/end events. On top of that the crate provides canonical models,
//! modular decomposition with the module reduction rule, two exact solvers
//! and a set of checkers for structural properties of minimal completions
//! and of the dynamic-programming states built from canonical models.
//!
//! Everything here works on graphs with at most 64 vertices and is meant
//! for exhaustive sweeps over small instances.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod completion;
pub mod dp;
pub mod error;
pub mod graph;
pub mod model;
pub mod modular;
pub mod recognition;
pub mod set;
pub mod solver;
pub mod verify;

pub use error::Error;
pub use graph::{augment, components, count_low_deficiency_components, neighborhood_classes, Graph, Special, VertexId};
pub use model::{validate_model, Event, EventKind, IntervalModel, ModelViolation};
pub use set::{EventSet, VertexSet, MAX_VERTICES};
pub use completion::{classify_vertices, Completion, VertexClass};
pub use solver::{solve_branching, solve_oracle, SolveResult, SolveStatus};
