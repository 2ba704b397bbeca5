use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FloatConst};
use rustfft::FftNum;

/// Floating point type the numerical core runs on.
///
/// Implemented for `f32` and `f64`. Tolerances quoted throughout the crate
/// assume `f64`.
pub trait Scalar:
    Float + FloatConst + FftNum + Display + LowerExp + Debug + Default + Send + Sync + 'static
{
    #[inline]
    fn lit(x: f64) -> Self {
        <Self as num_traits::NumCast>::from(x).expect("finite literal")
    }

    #[inline]
    fn from_count(n: usize) -> Self {
        <Self as num_traits::NumCast>::from(n).expect("representable size")
    }

    #[inline]
    fn two() -> Self {
        Self::one() + Self::one()
    }

    /// `3^{-1/2}`
    #[inline]
    fn inv_sqrt3() -> Self {
        Self::lit(3.0).powf(Self::lit(-0.5))
    }

    #[inline]
    fn to_f64(self) -> f64 {
        <Self as num_traits::ToPrimitive>::to_f64(&self).unwrap_or(f64::NAN)
    }
}

impl<T> Scalar for T where
    T: Float + FloatConst + FftNum + Display + LowerExp + Debug + Default + Send + Sync + 'static
{
}
