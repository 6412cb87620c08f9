use std::fmt::{Debug, Display};
use std::iter::Sum;

use ndarray::{LinalgScalar, ScalarOperand};
use num_traits::{Float, FromPrimitive, NumAssign};

/// Floating-point scalar the whole crate is generic over.
///
/// Everything numeric is written against this trait so the same code
/// instantiates at `f32` and `f64`; concrete aliases live at the crate root.
pub trait Scalar:
    Float
    + NumAssign
    + FromPrimitive
    + Sum
    + for<'a> Sum<&'a Self>
    + LinalgScalar
    + ScalarOperand
    + Default
    + Display
    + Debug
    + Send
    + Sync
    + 'static
{
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Lift an `f64` constant into the working scalar type.
#[inline]
pub(crate) fn fp<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("f64 constant representable in scalar type")
}
