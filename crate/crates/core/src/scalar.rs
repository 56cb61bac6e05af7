//! Scalar abstraction for the numerical core.
//!
//! Every module in this crate is generic over [`Real`], so the same code
//! instantiates at `f32` and `f64`. The documented accuracy contracts
//! (e.g. the 1e-12 kernel tolerances) hold for `f64`; `f32` gives the
//! same algorithms at reduced precision.

use std::fmt;

/// Floating-point scalar usable by the solver: `f32` or `f64`.
pub trait Real:
    num_traits::Float
    + num_traits::FloatConst
    + num_traits::FromPrimitive
    + num_traits::ToPrimitive
    + fmt::Debug
    + fmt::Display
    + fmt::LowerExp
    + Send
    + Sync
    + 'static
{
}

impl<T> Real for T where
    T: num_traits::Float
        + num_traits::FloatConst
        + num_traits::FromPrimitive
        + num_traits::ToPrimitive
        + fmt::Debug
        + fmt::Display
        + fmt::LowerExp
        + Send
        + Sync
        + 'static
{
}

/// Converts an `f64` constant into the working scalar type.
#[inline]
pub(crate) fn cast<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("f64 constant must be representable")
}

/// Linearly spaced grid with both endpoints included.
pub fn linspace<T: Real>(start: T, end: T, n: usize) -> Vec<T> {
    assert!(n >= 2, "linspace needs at least two points");
    let step = (end - start) / T::from_usize(n - 1).unwrap();
    (0..n)
        .map(|i| {
            if i == n - 1 {
                end
            } else {
                start + T::from_usize(i).unwrap() * step
            }
        })
        .collect()
}
