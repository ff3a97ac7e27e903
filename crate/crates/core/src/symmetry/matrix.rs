//! Exact orthogonal matrices and the Platonic point groups they generate.

use std::collections::HashSet;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::group::{GroupElement, Isometry, PointGroup};
use crate::geom::{rat, PointN, Rat, Scalar, Tolerance};

/// A 3×3 rational matrix acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat3(pub [[Rat; 3]; 3]);

impl Serialize for Mat3 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .0
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect())
            .collect();
        rows.serialize(s)
    }
}

impl Mat3 {
    pub fn from_ints(m: [[i64; 3]; 3]) -> Self {
        Mat3(m.map(|r| r.map(rat)))
    }

    pub fn identity() -> Self {
        Self::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    pub fn scaled(&self, s: i64) -> Self {
        Mat3(self.0.clone().map(|r| r.map(|x| x * rat(s))))
    }

    pub fn mul(&self, other: &Mat3) -> Mat3 {
        let mut out: [[Rat; 3]; 3] = Default::default();
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..3).fold(<Rat as Zero>::zero(), |acc, k| acc + &self.0[i][k] * &other.0[k][j]);
            }
        }
        Mat3(out)
    }

    pub fn transpose(&self) -> Mat3 {
        let m = &self.0;
        Mat3([0, 1, 2].map(|i| [0, 1, 2].map(|j| m[j][i].clone())))
    }

    pub fn det(&self) -> Rat {
        let m = &self.0;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    pub fn trace(&self) -> Rat {
        &self.0[0][0] + &self.0[1][1] + &self.0[2][2]
    }

    pub fn is_orthogonal(&self) -> bool {
        self.transpose().mul(self) == Mat3::identity()
    }

    pub fn apply(&self, p: &PointN<Rat>) -> PointN<Rat> {
        PointN::new(
            (0..3)
                .map(|i| (0..3).fold(<Rat as Zero>::zero(), |acc, k| acc + &self.0[i][k] * &p.coords[k]))
                .collect(),
        )
    }
}

impl GroupElement for Mat3 {
    fn compose(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn inverse(&self) -> Self {
        // Orthogonal by construction.
        self.transpose()
    }

    fn is_identity(&self) -> bool {
        *self == Mat3::identity()
    }
}

impl Isometry for Mat3 {
    fn det_sign(&self) -> i32 {
        self.det().sign(Tolerance::DEFAULT)
    }

    fn to_f64_matrix(&self) -> [[f64; 3]; 3] {
        self.0.clone().map(|r| r.map(|x| x.to_f64()))
    }

    fn is_central_inversion(&self) -> bool {
        *self == Mat3::identity().scaled(-1)
    }

    fn is_plane_reflection(&self) -> bool {
        // Eigenvalues (1, 1, -1).
        self.det_sign() < 0 && self.mul(self).is_identity() && self.trace().is_one()
    }
}

/// 90° rotation about the z-axis: (x, y, z) ↦ (−y, x, z).
pub fn quarter_turn_z() -> Mat3 {
    Mat3::from_ints([[0, -1, 0], [1, 0, 0], [0, 0, 1]])
}

/// 120° rotation about (1,1,1): (x, y, z) ↦ (y, z, x).
pub fn cyclic_shift() -> Mat3 {
    Mat3::from_ints([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
}

fn sorted(mut g: PointGroup<Mat3>) -> PointGroup<Mat3> {
    g.elements.sort();
    let id = g.elements.iter().position(GroupElement::is_identity).unwrap_or(0);
    g.elements.swap(0, id);
    g
}

/// The 24 rotations of the cube, generated by the coordinate-axis quarter
/// turns and the diagonal three-fold turns.
pub fn octahedral_rotation_group() -> PointGroup<Mat3> {
    sorted(PointGroup::generate(
        "O",
        Mat3::identity(),
        &[quarter_turn_z(), cyclic_shift()],
    ))
}

pub fn full_octahedral_group() -> PointGroup<Mat3> {
    sorted(PointGroup::generate(
        "Oh",
        Mat3::identity(),
        &[quarter_turn_z(), cyclic_shift(), Mat3::identity().scaled(-1)],
    ))
}

pub fn tetrahedral_rotation_group() -> PointGroup<Mat3> {
    let half_turn_x = Mat3::from_ints([[1, 0, 0], [0, -1, 0], [0, 0, -1]]);
    sorted(PointGroup::generate("T", Mat3::identity(), &[half_turn_x, cyclic_shift()]))
}

/// Tetrahedral rotations together with their products with the central inversion.
pub fn pyritohedral_group() -> PointGroup<Mat3> {
    let t = tetrahedral_rotation_group();
    let mut elements = t.elements.clone();
    elements.extend(t.elements.iter().map(|m| m.scaled(-1)));
    sorted(PointGroup {
        name: "Th".into(),
        elements,
    })
}

/// Deduplicated orbit of a rational point, in order of discovery.
pub fn orbit(g: &PointGroup<Mat3>, p: &PointN<Rat>) -> Vec<PointN<Rat>> {
    let mut seen = HashSet::new();
    g.elements
        .iter()
        .map(|m| m.apply(p))
        .filter(|q| seen.insert(q.clone()))
        .collect()
}

/// Floating-point orbit for groups without rational matrices.
pub fn orbit_f64<E: Isometry>(g: &PointGroup<E>, p: [f64; 3], tol: Tolerance) -> Vec<[f64; 3]> {
    let mut out: Vec<[f64; 3]> = Vec::new();
    for e in &g.elements {
        let m = e.to_f64_matrix();
        let q = [0, 1, 2].map(|i| (0..3).map(|k| m[i][k] * p[k]).sum::<f64>());
        if !out.iter().any(|r| (0..3).all(|i| (r[i] - q[i]).abs() <= tol.0)) {
            out.push(q);
        }
    }
    out
}
