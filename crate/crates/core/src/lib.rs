//! Finite simplicial complexes and their barycentric subdivisions.
//!
//! A complex is determined up to isomorphism by its barycentric subdivision,
//! equivalently by its comparability graph (the graph of strict inclusions
//! between nonempty faces). This crate provides the combinatorial operators
//! around that fact and turns it into an algorithm:
//!
//! - [`complex`]: complexes as facet antichains, faces, minimal non-faces,
//!   skeletons, components, Euler characteristic, canonical forms and
//!   isomorphism witnesses;
//! - [`derived`]: barycentric subdivision, Alexander dual, complement complex,
//!   Stanley–Reisner and facet ideal generator supports;
//! - [`graphs`]: clique and independence complexes, comparability graphs and
//!   transitive orientations;
//! - [`reconstruct`]: rebuilding a complex from its comparability graph or
//!   subdivision;
//! - [`verify`]: exhaustive checks over every complex on a few vertices.
//!
//! ```
//! use bary::{graphs::LabeledGraph, reconstruct, SimplicialComplex};
//!
//! let report = reconstruct::reconstruct_from_comparability_graph(&LabeledGraph::cycle(6));
//! assert_eq!(report.complex(), Some(&SimplicialComplex::simplex_boundary(3).unwrap()));
//! ```

pub mod canon;
pub mod complex;
pub mod derived;
mod error;
pub mod exec;
pub mod graphs;
pub mod io;
pub mod reconstruct;
pub mod sample;
pub mod verify;
mod vertex_set;

pub use complex::{are_isomorphic, CanonicalForm, Component, SimplicialComplex, VertexBijection};
pub use error::{Error, FacePosetViolation, Result};
pub use exec::Execution;
pub use vertex_set::{VertexSet, MAX_VERTICES};
