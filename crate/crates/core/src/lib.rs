//! Invariants of free-by-cyclic groups computed from train-track graph maps.
// Matrix code reads more clearly with explicit indices.
#![allow(clippy::needless_range_loop)]

pub mod analysis;
pub mod cones;
pub mod det;
pub mod dsl;
pub mod error;
pub mod graph;
pub mod homology;
pub mod invariants;
pub mod laurent;
pub mod matrices;
pub mod oracle;
pub mod orientation;
pub mod roots;
pub mod snf;
pub mod stretch;
pub mod train_track;
pub mod upoly;

pub use analysis::Analysis;
pub use error::{Error, Result};
pub use graph::{Edge, EdgePath, Graph, GraphMap, IntMatrix, Sign, Step};
pub use laurent::{AbelianGroup, CohomClass, GroupElement, LaurentPoly, LaurentPoly1V};
pub use upoly::IntPoly;
