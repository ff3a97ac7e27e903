use super::point::PointN;
use super::scalar::{Scalar, Tolerance};
use super::GeomError;
use crate::map::CombMap;

/// A map together with a position for every vertex.
#[derive(Debug, Clone)]
pub struct Embedding<S> {
    map: CombMap,
    positions: Vec<PointN<S>>,
    tol: Tolerance,
}

impl<S: Scalar> Embedding<S> {
    pub fn new(map: CombMap, positions: Vec<PointN<S>>) -> Result<Self, GeomError> {
        Self::with_tolerance(map, positions, Tolerance::DEFAULT)
    }

    pub fn with_tolerance(map: CombMap, positions: Vec<PointN<S>>, tol: Tolerance) -> Result<Self, GeomError> {
        if positions.len() != map.vertex_count() {
            return Err(GeomError::PositionCount {
                positions: positions.len(),
                vertices: map.vertex_count(),
            });
        }
        let dim = positions.first().map_or(0, PointN::dim);
        if let Some(p) = positions.iter().find(|p| p.dim() != dim) {
            return Err(GeomError::DimensionMismatch {
                left: dim,
                right: p.dim(),
            });
        }
        for i in 0..positions.len() {
            for j in i + 1..positions.len() {
                if positions[i].approx_eq(&positions[j], tol) {
                    return Err(GeomError::DuplicatePosition(i, j));
                }
            }
        }
        Ok(Embedding { map, positions, tol })
    }

    pub fn from_faces(faces: &[Vec<usize>], positions: Vec<PointN<S>>) -> Result<Self, GeomError> {
        Self::new(CombMap::from_face_list(faces)?, positions)
    }

    pub fn map(&self) -> &CombMap {
        &self.map
    }

    pub fn positions(&self) -> &[PointN<S>] {
        &self.positions
    }

    pub fn position(&self, v: usize) -> &PointN<S> {
        &self.positions[v]
    }

    pub fn dim(&self) -> usize {
        self.positions.first().map_or(0, PointN::dim)
    }

    pub fn tolerance(&self) -> Tolerance {
        self.tol
    }

    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.map.face_cycles()
    }

    pub fn face_points(&self, face: &[usize]) -> Vec<PointN<S>> {
        face.iter().map(|&v| self.positions[v].clone()).collect()
    }

    /// Applies `f` to every position, keeping the map.
    pub fn map_positions(&self, f: impl Fn(&PointN<S>) -> PointN<S>) -> Result<Self, GeomError> {
        Self::with_tolerance(self.map.clone(), self.positions.iter().map(f).collect(), self.tol)
    }

    /// Replaces the face list, keeping vertex positions.
    pub fn with_faces(&self, faces: &[Vec<usize>]) -> Result<Self, GeomError> {
        Self::with_tolerance(CombMap::from_face_list(faces)?, self.positions.clone(), self.tol)
    }
}
