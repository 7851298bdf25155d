//! Number types the epsilon table can run over.
//!
//! Every shipped driver works in `f64`. The table algebra only needs field
//! operations plus a modulus, so `Complex64` is supported as well.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

/// Field element usable as a Padé table entry.
pub trait Scalar:
    Copy
    + PartialEq
    + Debug
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    /// Absolute value (modulus for complex numbers).
    fn modulus(self) -> f64;
    fn is_finite(self) -> bool;

    fn recip(self) -> Self {
        Self::one() / self
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }

    fn one() -> Self {
        1.0
    }

    fn modulus(self) -> f64 {
        self.abs()
    }

    fn is_finite(self) -> bool {
        f64::is_finite(self)
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }

    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }

    fn modulus(self) -> f64 {
        self.norm()
    }

    fn is_finite(self) -> bool {
        Complex64::is_finite(self)
    }
}

/// Relative width below which a difference counts as an exact zero.
pub const CONVERGENCE_ULPS: f64 = 4.0;

/// True when `diff` is indistinguishable from zero next to `center`.
///
/// Uses the conventional unit roundoff `f64::EPSILON`.
pub fn is_negligible<T: Scalar>(diff: T, center: T) -> bool {
    diff == T::zero() || diff.modulus() < CONVERGENCE_ULPS * f64::EPSILON * center.modulus()
}
