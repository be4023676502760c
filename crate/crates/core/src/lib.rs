//! Degree-based topological indices of simple graphs, computed exactly where
//! the values are rational, together with line graphs, exhaustive generation
//! of small connected graphs, and a registry of bounds on the symmetric
//! division deg (SDD) index that can be checked graph by graph.
//!
//! ```
//! use sddlab_core::{indices, named::NamedGraph};
//!
//! let star = NamedGraph::Star(5).build().unwrap();
//! assert_eq!(indices::sdd(&star).to_string(), "17");
//! ```

pub mod error;
pub mod rational;
pub mod scalar;

// Graphs, fixtures and exchange formats
pub mod edgelist;
pub mod graph;
pub mod graph6;
pub mod named;

pub mod indices;
pub mod line_graph;

// Isomorphism classes and exhaustive search
pub mod canon;
pub mod enumerate;
pub mod search;

// Bound registry, sweeps and reports
pub mod bounds;
pub mod report;

pub use error::{Error, Result};
pub use graph::Graph;
pub use rational::ExactRational;
pub use scalar::Scalar;
