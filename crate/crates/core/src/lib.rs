//! Regular maps, polyhedral embeddings, and exact symmetry checks.

pub mod cli;
pub mod constructions;
pub mod geom;
pub mod io;
pub mod map;
pub mod report;
pub mod symmetry;

pub use geom::{Embedding, PointN, Rat};
pub use map::{CombMap, MapAutomorphism, MapError, SchlafliType};
