//! Floating-point scalar abstraction for the spectral path.
//!
//! Spectral computations are generic over [`Real`], implemented for `f32`
//! and `f64`; the exact quotient-matrix path uses arbitrary-precision
//! integers instead (see [`crate::Coeff`]).

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + NumAssign + FromPrimitive + Sum + Debug + Display + Default + 'static
{
    /// Lossy conversion to `f64` for reporting.
    fn to_f64_lossy(self) -> f64;
}

impl Real for f32 {
    fn to_f64_lossy(self) -> f64 {
        self as f64
    }
}

impl Real for f64 {
    fn to_f64_lossy(self) -> f64 {
        self
    }
}
