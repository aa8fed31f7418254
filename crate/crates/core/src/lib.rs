//! Exact computation of mutual-visibility, total mutual-visibility and
//! general-position numbers of small graphs, together with their lower
//! (minimum maximal) variants.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`] holds the graph type, the edge-list format and the metric and
//!   structural primitives (distances, intervals, bridges, cliques, ...).
//! * [`visibility`] implements the set predicates and maximality testing.
//! * [`solvers`] runs the exact searches and the seeded greedy procedure.
//! * [`families`] generates every graph family the verification harness uses.
//! * [`theorems`] contains the binary-matrix bridge for `K_m □ K_n` and the
//!   closed-form verification suite.

pub mod error;
pub mod families;
pub mod graph;
mod mask;
pub mod rng;
pub mod solvers;
pub mod theorems;
pub mod vertex_set;
pub mod visibility;

pub use error::{Error, Result};
pub use families::{FamilySpec, GadgetMap, Role};
pub use graph::{DistanceMatrix, EdgeList, Graph, TwinKind, UNREACHABLE};
pub use solvers::{GreedyProfile, SolverConfig, SolverOutcome, Variant};
pub use theorems::{BinaryMatrix, CheckReport, CheckStatus, Expected, Suite, SuiteConfig};
pub use vertex_set::VertexSet;
pub use visibility::{InvariantKind, VisibilityContext};
