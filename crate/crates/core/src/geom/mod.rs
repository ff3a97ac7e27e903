//! Exact geometric kernel and the polyhedral embedding validator.

mod embedding;
mod point;
mod predicates;
mod scalar;
mod validate;

use thiserror::Error;

use crate::map::MapError;

pub use embedding::Embedding;
pub use point::{squared_distance, PointN};
pub use predicates::{
    convex_polygon_overlap, face_planar_convex, orient3d, orient3d_value, orient3d_with,
    polygon_pair_relation, triangle_pair_relation, Overlap, PairRelation,
};
pub use scalar::{rat, ratio, Rat, Scalar, Tolerance};
pub use validate::{validate_polyhedron, PairCounts, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("degenerate face")]
    DegenerateFace,
    #[error("{positions} positions given for {vertices} vertices")]
    PositionCount { positions: usize, vertices: usize },
    #[error("vertices {0} and {1} share a position")]
    DuplicatePosition(usize, usize),
    #[error(transparent)]
    Map(#[from] MapError),
}
