//! Worlds, terraces and states, the ⊴ order on state completions, and the
//! gluing recurrence that rebuilds a canonical model from the states that
//! appear in it.
//!
//! The family of states is read off the reference model rather than
//! enumerated: every cheap vertex contributes a flat terrace and (unless it
//! is the root) a nested one, and every ordered pair of terraces that forms
//! a state is kept.

mod arrange;
mod family;
mod structures;
mod table;

pub use arrange::{best_completion, completion_of, StateCompletion};
pub use family::{pivot, pivot_substates, states_from_model, terrace_from_model, terraces_from_model, world_from_model};
pub use structures::{state_events, Area, Nested, State, Terrace, World};
pub use table::{default_cap, dp_check, dp_reconstruct, fill_table, read_model, DpReport, DpStats, DpTable};
