//! Integer-partition graphs `G_n` and their large-scale morphology.
//!
//! Vertices of `G_n` are the partitions of `n`; two partitions are adjacent
//! when one becomes the other by moving a single Ferrers-diagram cell to a
//! different (possibly new) row and re-sorting. On top of the graph this
//! crate computes degree and local simplex dimension, the boundary
//! framework, the self-conjugate axis with axial distances, central regions
//! and the spine, plus small-range tables, exports and an SVG atlas.

pub mod analysis;
pub mod atlas;
pub mod error;
pub mod graph;
pub mod local_invariants;
pub mod morphology;
pub mod partitions;
pub mod reporting;

pub use analysis::{Analysis, AnalysisOptions, NRange};
pub use error::{Error, Result};
pub use graph::PartitionGraph;
pub use local_invariants::LocalInvariants;
pub use morphology::{AxialDistance, EdgeDirection, MorphologyReport};
pub use partitions::Partition;
