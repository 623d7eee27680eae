//! Matching covered graph toolkit.
//!
//! Small exact algorithms for matching theory: perfect matching
//! enumeration, brick and brace recognition, tight cut decomposition with
//! the brick count `b(G)`, and per-edge classification into removable,
//! `b`-invariant and solitary edges. Also included are a graph6 codec, a
//! canonical labeling for small graphs and an isomorph-free generator.
//!
//! Every routine here is exact. Inputs past the documented size bounds are
//! refused with [`Error::Capacity`] rather than approximated.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_debug_implementations, rust_2018_idioms)]

extern crate alloc;

pub mod bitset;
pub mod canon;
pub mod catalog;
pub mod classify;
mod error;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod tight_cut;

pub use bitset::{EdgeSet, VertexSet};
pub use canon::{canonical_form, canonical_labeling, is_isomorphic, CanonicalForm};
pub use catalog::{catalog, CatalogEntry, CATALOG_NAMES};
pub use classify::{classify_all, EdgeClass, EdgeClassReport};
pub use error::{Error, GraphError, Graph6Error};
pub use graph::Graph;
pub use matching::{Matching, MatchingSet};
pub use tight_cut::{decompose, Cut, DecompositionResult, Piece};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// Largest vertex count for which matching routines run.
pub const MAX_MATCHING_VERTICES: usize = 32;

/// Largest edge count (with multiplicity) for which matching routines run.
pub const MAX_MATCHING_EDGES: usize = EdgeSet::CAPACITY;

/// Largest vertex count for the exhaustive tight cut search.
pub const MAX_TIGHT_CUT_VERTICES: usize = 20;

pub type Result<T, E = Error> = core::result::Result<T, E>;
