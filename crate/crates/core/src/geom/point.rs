use std::fmt;

use super::scalar::{rat, Rat, Scalar, Tolerance};
use super::GeomError;

/// A point (or vector) with a fixed number of coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointN<S> {
    pub coords: Vec<S>,
}

impl<S: fmt::Debug> fmt::Debug for PointN<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coords).finish()
    }
}

impl<S: Scalar> PointN<S> {
    pub fn new(coords: Vec<S>) -> Self {
        PointN { coords }
    }

    pub fn zero(dim: usize) -> Self {
        PointN {
            coords: vec![S::zero(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn sub(&self, other: &Self) -> Self {
        PointN::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        PointN::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }

    pub fn scale(&self, s: &S) -> Self {
        PointN::new(self.coords.iter().map(|a| a.clone() * s.clone()).collect())
    }

    pub fn dot(&self, other: &Self) -> S {
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    /// Cross product; both operands must be three-dimensional.
    pub fn cross(&self, other: &Self) -> Self {
        let (a, b) = (&self.coords, &other.coords);
        PointN::new(vec![
            a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
            a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
            a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
        ])
    }

    pub fn is_zero(&self, tol: Tolerance) -> bool {
        self.coords.iter().all(|c| c.sign(tol) == 0)
    }

    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        self.dim() == other.dim() && self.coords.iter().zip(&other.coords).all(|(a, b)| a.cmp_sign(b, tol) == 0)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(Scalar::to_f64).collect()
    }
}

impl PointN<Rat> {
    pub fn from_ints(v: &[i64]) -> Self {
        PointN::new(v.iter().map(|&x| rat(x)).collect())
    }

    /// The `i`-th unit basis vector in `dim` dimensions.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut p = PointN::zero(dim);
        p.coords[i] = rat(1);
        p
    }
}

/// Exact `Σ (a_i - b_i)^2`.
pub fn squared_distance<S: Scalar>(a: &PointN<S>, b: &PointN<S>) -> Result<S, GeomError> {
    if a.dim() != b.dim() {
        return Err(GeomError::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let d = a.sub(b);
    Ok(d.dot(&d))
}
