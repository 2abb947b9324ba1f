//! Graphs represented by words through pattern matching.
//!
//! A word `w` u-represents a labeled graph `G` when, for every pair of
//! vertices `x`, `y`, the restriction of `w` to `{x, y}` has no u-match
//! exactly when `xy` is an edge.

pub mod error;
pub mod atlas;
pub mod cli;
pub mod construct;
pub mod graphs;
pub mod recognize;
pub mod represent;
pub mod words;

pub use error::{Error, Result};
pub use graphs::LabeledGraph;
pub use words::{Pattern, Word};
