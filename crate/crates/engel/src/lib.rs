//! A toolkit for computing with Engel graphs of finite groups.
//!
//! The directed Engel graph of a finite group puts an edge from x to y
//! whenever some iterated commutator [x, y, y, ..., y] collapses to the
//! identity. This crate provides exact group arithmetic over several
//! element backends, the structural subgroups the graph's vertex sets
//! depend on (hypercenter, Fitting subgroup, Sylow subgroups), the Engel
//! trace evaluator, and connectivity algorithms tuned for graphs that
//! are vertex-transitive under conjugation.

pub mod catalog;
pub mod config;
pub mod element;
pub mod engel;
pub mod error;
pub mod field;
pub mod graph;
pub mod group;
pub mod structure;

pub use catalog::{Family, GroupSpecExpr};
pub use config::Config;
pub use element::GroupElement;
pub use engel::{edge, eng, engel_word, GraphMode};
pub use error::{Error, Result};
pub use graph::{ball, DirectedDiameter, EngelGraph};
pub use group::{Group, Subgroup};
