//! Scalar abstraction for the deterministic optics core.

use num_traits::{Float, FromPrimitive};
use std::fmt;

/// Floating-point scalar the dispersion / phase-matching math is generic
/// over: `f32` or `f64`.
pub trait Scalar: Float + FromPrimitive + fmt::Debug + fmt::Display + 'static {
    /// Lossy conversion from `f64`, used for literal constants.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 constant")
    }
    fn to_f64_lossy(self) -> f64;
}

impl Scalar for f32 {
    fn to_f64_lossy(self) -> f64 {
        self as f64
    }
}

impl Scalar for f64 {
    fn to_f64_lossy(self) -> f64 {
        self
    }
}
