//! Unavoidable induced subgraphs for vertex-parameter counts.
//!
//! Graphs are small, immutable and stored as bit rows. On top of that sit
//! the local vertex parameters (degree, local independence number, local
//! component number, sharp degree), the named pattern families, an induced
//! subgraph matcher, Ramsey-type bound arithmetic, witness extraction and an
//! exhaustive verification harness.

pub mod bitset;
pub mod bounds;
pub mod canon;
pub mod detect;
pub mod enumerate;
pub mod error;
pub mod extract;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod par;
pub mod params;
pub mod patterns;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::Graph;
pub use par::Exec;
pub use params::{LocalProfile, PropertyKind};
pub use patterns::{FamilyKind, FamilySpec, Pattern, TheoremId};
