//! Scalar abstraction for the numeric kernels.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the solvers are generic over (`f32` or `f64`).
///
/// Everything in this crate is written against this trait; the crate root
/// exports `f64` type aliases for the common case.
pub trait Real: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    /// Converts an `f64` literal into the scalar type.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("literal not representable in scalar type")
    }

    /// Converts a small integer index into the scalar type.
    fn of(n: usize) -> Self {
        Self::from_usize(n).expect("index not representable in scalar type")
    }
}

impl<T> Real for T where T: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {}
