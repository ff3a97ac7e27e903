//! Builders for the concrete polyhedra and realizations.

mod cross;
mod flips;
mod grunbaum;
mod solids;
mod toroidal;

use thiserror::Error;

use crate::geom::GeomError;
use crate::map::MapError;

pub use cross::crosspolytope_realization;
pub use flips::{
    flip_many, grunbaum_relative, pachner_flip, relative_search, single_flip_table, FlipCandidate,
    RelativeSearch,
};
pub use grunbaum::{
    grunbaum, grunbaum_mirror, grunbaum_model, grunbaum_with_seed, overlapping_variant, seed_triangles,
    GrunbaumModel, SeedTriangle, Shell,
};
pub use solids::{cube, cuboctahedron, octahedron, square_pyramid, tetrahedron};
pub use toroidal::{
    antiprism, prism, toroidal_antiprismatic, toroidal_prism_variant, TorusParams,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("construction failed: {0}")]
    ConstructionFailure(String),
    #[error("edge {0} cannot be flipped")]
    NotFlippable(usize),
    #[error("no qualifying flip orbit found")]
    SearchExhausted,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("embedding self-intersects: {0} violating face pairs")]
    GeometricallyInvalid(usize),
    #[error("edge {u}-{v} joins antipodal vertices")]
    AntipodalEdge { u: usize, v: usize },
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Geom(GeomError),
}

impl From<GeomError> for ConstructionError {
    fn from(e: GeomError) -> Self {
        match e {
            GeomError::Map(m) => ConstructionError::Map(m),
            other => ConstructionError::Geom(other),
        }
    }
}
