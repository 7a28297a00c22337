//! Generators and exact certifiers for Hamiltonian chordal graphs that fail
//! to be cycle extendible.
//!
//! The crate builds every graph family of the construction (base graph, pasted
//! cliques, the u_1u_3 chord variant, the connectivity blow-up, the
//! subdivided variant, the X-clique variant and the dense family), and pairs
//! them with exact checkers: chordal and strongly chordal recognition, a
//! subset dynamic program deciding which vertex sets carry a cycle, heavy-cycle
//! search, vertex connectivity, induced paths, and subtree intersection models.

pub mod constructions;
pub mod cycles;
mod error;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod recognition;
pub mod search;
pub mod structure;
pub mod tree_model;

pub use error::{Error, Result};
pub use graph::{contract_parts, identify_parts, join, paste_clique, Cycle, LabeledGraph, Part, Role, VertexSet};
