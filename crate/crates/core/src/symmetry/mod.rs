//! Finite point groups of O(3) and geometric symmetries of embeddings.

mod geometric;
mod group;
mod matrix;
mod reducible;

use thiserror::Error;

pub use geometric::{
    congruences, geometric_symmetry_group, is_chiral, is_vertex_transitive, mirror_bisector_check,
    preserves_centered_gram, transitive_on_vertices, GeomSymmetry, MirrorReport,
};
pub use group::{icosahedral_rotation_group, GroupElement, Isometry, Perm, PointGroup};
pub use matrix::{
    cyclic_shift, full_octahedral_group, octahedral_rotation_group, orbit, orbit_f64, pyritohedral_group,
    quarter_turn_z, tetrahedral_rotation_group, Mat3,
};
pub use reducible::{reducible_group, DihedralElement, ReducibleFamily};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex positions do not span space affinely")]
    DegenerateSpan,
    #[error("expected dimension 3, got {0}")]
    DimensionMismatch(usize),
}
