//! Kernelization toolkit for editing a graph into a trivially perfect graph
//! (no induced C4 or P4) with at most `k` edge modifications, together with
//! the deletion-only and completion-only variants.
//!
//! The crate provides recognition and universal clique decompositions,
//! critical cliques and strong modules, maximum (anti-)matchings and
//! r-packings, combs, the five reduction rules with an exhaustive reduction
//! driver, an exact bounded-search-tree solver, and seeded instance
//! generators.

pub mod comb;
pub mod decomposition;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod kernel;
pub mod matching;
pub mod recognition;
pub mod solver;

pub use error::{Error, Result};
pub use kernel::{Instance, Mode};
pub use graph::{EditKind, EditSet, Graph, GraphBuilder, Pair, VertexSet};
