//! Seeded random test polynomials.

use num_complex::Complex;
use rand::Rng;
use rand_distr::{Distribution, Normal};

use crate::circle::TaylorCoeffs;

/// Degree-`d` polynomial with i.i.d. standard complex Gaussian coefficients
/// (real and imaginary parts each of variance 1/2).
pub fn gaussian_polynomial<R: Rng + ?Sized>(rng: &mut R, degree: usize) -> TaylorCoeffs<f64> {
    let normal = Normal::new(0.0, std::f64::consts::FRAC_1_SQRT_2).expect("positive sigma");
    TaylorCoeffs::new(
        (0..=degree)
            .map(|_| Complex::new(normal.sample(rng), normal.sample(rng)))
            .collect(),
    )
}

/// `f·e^{−i Arg f(0)}`, so that `f(0) = |f(0)| ≥ 0`.
pub fn with_nonnegative_constant(f: &TaylorCoeffs<f64>) -> TaylorCoeffs<f64> {
    let a0 = f.constant_term();
    if a0.norm() == 0.0 {
        return f.clone();
    }
    f.scale(a0.conj() / a0.norm())
}
