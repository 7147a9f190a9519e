//! Floating-point scalar abstraction.
//!
//! Every numerical kernel in this crate is generic over [`Real`], which is
//! satisfied by `f32` and `f64`. Accuracy-sensitive paths (special functions,
//! the Mittag-Leffler evaluator) do their internal arithmetic in `f64` and
//! cast at the boundary, so `f32` instantiations lose nothing beyond their
//! own representation.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Converts an `f64` constant into the working scalar type.
#[inline]
pub fn cast<F: Real>(x: f64) -> F {
    F::from_f64(x).expect("f64 constant must be representable in the scalar type")
}

/// Converts a `usize` (sample counts, indices) into the working scalar type.
#[inline]
pub fn cast_usize<F: Real>(n: usize) -> F {
    F::from_usize(n).expect("usize must be representable in the scalar type")
}
