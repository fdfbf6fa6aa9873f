//! Scalar abstraction for the numeric core.

use std::fmt::{Debug, Display};

/// Floating-point scalar the tensor and tape machinery is generic over.
///
/// `f64` is the type the model stack runs on (see the crate-root aliases);
/// `f32` satisfies the same contracts at lower precision.
pub trait Scalar:
    num_traits::Float + num_traits::FromPrimitive + num_traits::NumAssign + Debug + Display + 'static
{
    /// Lossless-enough conversion for constants baked into formulas.
    fn from_f64(v: f64) -> Self {
        <Self as num_traits::FromPrimitive>::from_f64(v).expect("finite f64 constant")
    }

    fn to_f64(self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self).expect("scalar convertible to f64")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
