use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational. Always normalized (positive denominator,
/// coprime parts).
pub type Rat = BigRational;

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Zero threshold for the floating-point tier. Ignored by exact scalars.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance(pub f64);

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance(1e-9);
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::DEFAULT
    }
}

/// Ordered field used by the predicates. `sign` is exact for [`Rat`] and
/// thresholded for `f64`.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    const EXACT: bool;

    fn zero() -> Self;
    fn from_i64(v: i64) -> Self;
    fn sign(&self, tol: Tolerance) -> i32;
    fn to_f64(&self) -> f64;

    fn abs(&self) -> Self {
        if self.sign(Tolerance(0.0)) < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Sign of `self - other`.
    fn cmp_sign(&self, other: &Self, tol: Tolerance) -> i32 {
        (self.clone() - other.clone()).sign(tol)
    }
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }

    fn from_i64(v: i64) -> Self {
        rat(v)
    }

    fn sign(&self, _tol: Tolerance) -> i32 {
        if self.is_zero() {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn sign(&self, tol: Tolerance) -> i32 {
        if f64::abs(*self) <= tol.0 {
            0
        } else if *self > 0.0 {
            1
        } else {
            -1
        }
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}
