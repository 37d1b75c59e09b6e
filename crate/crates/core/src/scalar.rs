//! Scalar abstraction for the floating-point kernels.
//!
//! Every numeric routine in this crate (eigensolver, energies, the
//! constrained minimizer) is generic over [`Real`], so the same code runs
//! in `f32` or `f64`. The crate root exposes `f64` aliases for the common
//! case; exact-integer work goes through `num_bigint::BigInt` instead.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FromPrimitive + ToPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FromPrimitive + ToPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
}

/// Converts an `f64` constant into the working scalar type.
///
/// Panics only if `T` cannot represent any approximation of `x`, which
/// cannot happen for the finite constants used in this crate.
#[inline]
pub fn real<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("finite f64 constant must convert")
}

/// Converts a `usize` (vertex counts, dimensions) into the working scalar.
#[inline]
pub fn real_usize<T: Real>(x: usize) -> T {
    T::from_usize(x).expect("usize must convert to scalar")
}
