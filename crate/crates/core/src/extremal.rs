//! The extremal family `f = C·((1 + λI)/(1 − λI))²` and the bound curve
//! `√((1+x)² − 4x²)` that caps `‖Bf‖₁/‖f‖₁` in terms of `x = f(0)/‖f‖₁`.
//!
//! At `λ = 1/√3` every member attains `‖Bf‖₁ = (2/√3)‖f‖₁`, whatever the inner
//! function `I` is, as long as `I(0) = 0`.

use num_complex::Complex;

use crate::circle::{AnalyticFn, BoundaryGrid};
use crate::error::{Error, Result};
use crate::inner_outer::{sqrt_principal, BlaschkeSpec};
use crate::norms::PExponent;
use crate::scalar::Scalar;
use crate::shift::{ratio_of_grid, RatioReport};

#[derive(Clone, Debug, PartialEq)]
pub struct ExtremalSpec<T: Scalar> {
    lambda: T,
    inner: BlaschkeSpec<T>,
    c: Complex<T>,
}

impl<T: Scalar> ExtremalSpec<T> {
    pub fn new(lambda: T, inner: BlaschkeSpec<T>, c: Complex<T>) -> Result<Self> {
        if !(lambda > T::zero() && lambda < T::one()) {
            return Err(Error::Lambda(lambda.to_f64()));
        }
        if !inner.vanishes_at_origin() {
            return Err(Error::InnerNotVanishing);
        }
        if c.norm() == T::zero() {
            return Err(Error::ZeroConstant);
        }
        Ok(Self { lambda, inner, c })
    }

    /// `λ = 1/√3`, `C = 1`.
    pub fn sharp(inner: BlaschkeSpec<T>) -> Result<Self> {
        Self::new(T::inv_sqrt3(), inner, Complex::new(T::one(), T::zero()))
    }

    /// `((√3 + z)/(√3 − z))²`.
    pub fn canonical() -> Self {
        Self::sharp(BlaschkeSpec::monomial(1)).expect("valid parameters")
    }

    pub fn lambda(&self) -> T {
        self.lambda
    }

    pub fn inner(&self) -> &BlaschkeSpec<T> {
        &self.inner
    }

    pub fn constant(&self) -> Complex<T> {
        self.c
    }

    pub fn with_constant(&self, c: Complex<T>) -> Result<Self> {
        Self::new(self.lambda, self.inner.clone(), c)
    }

    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        let one = Complex::new(T::one(), T::zero());
        let li = self.inner.eval(z) * self.lambda;
        let q = (one + li) / (one - li);
        self.c * q * q
    }
}

impl<T: Scalar> AnalyticFn<T> for ExtremalSpec<T> {
    fn eval(&self, z: Complex<T>) -> Complex<T> {
        ExtremalSpec::eval(self, z)
    }
}

/// `f(0)/‖f‖₁ = (1 − λ²)/(1 + 3λ²)` along the family. Expects `0 < λ < 1`.
pub fn x_of_lambda<T: Scalar>(lambda: T) -> T {
    let l2 = lambda * lambda;
    (T::one() - l2) / (T::one() + T::lit(3.0) * l2)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundCurvePoint<T: Scalar> {
    pub x: T,
    pub value: T,
}

/// `(x, √((1+x)² − 4x²))` for `x ∈ [0, 1]`.
pub fn bound_curve<T: Scalar>(x: T) -> Result<BoundCurvePoint<T>> {
    if !(x >= T::zero() && x <= T::one()) {
        return Err(Error::OutOfUnitInterval(x.to_f64()));
    }
    let four = T::lit(4.0);
    let one_plus = T::one() + x;
    // (1+x)² − 4x² = (1 + 3x)(1 − x), which stays ≥ 0 without cancellation at x = 1
    let radicand = (T::one() + T::lit(3.0) * x) * (T::one() - x);
    debug_assert!((radicand - (one_plus * one_plus - four * x * x)).abs() <= T::lit(1e-12));
    Ok(BoundCurvePoint {
        x,
        value: radicand.max(T::zero()).sqrt(),
    })
}

/// The maximizer of the bound curve: `d/dx[(1+x)² − 4x²] = 2 − 6x` vanishes at `x = 1/3`.
pub fn argmax_bound_curve<T: Scalar>() -> BoundCurvePoint<T> {
    BoundCurvePoint {
        x: T::one() / T::lit(3.0),
        value: T::two() * T::inv_sqrt3(),
    }
}

/// Samples the family member on `n` nodes and reports its `H^1` ratio.
pub fn verify_extremal<T: Scalar>(spec: &ExtremalSpec<T>, n: usize) -> Result<RatioReport<T>> {
    let g = BoundaryGrid::sample(spec, n)?;
    ratio_of_grid(&g, PExponent::one())
}

/// `max_k ||f^{1/2}(ζ_k) − a| − λ|f^{1/2}(ζ_k) + a||` with `a = √|f(0)|`, after
/// rotating `f` so that `f(0) > 0`. Vanishes along the family: the boundary
/// condition under which Cauchy–Schwarz is an equality.
pub fn cs_equality_deviation<T: Scalar>(spec: &ExtremalSpec<T>, n: usize) -> Result<T> {
    let phase = spec.c.conj() / spec.c.norm();
    let g = BoundaryGrid::sample(spec, n)?.scale(phase);
    let a = Complex::new(spec.c.norm().sqrt(), T::zero());
    Ok(sqrt_principal(&g)
        .samples()
        .iter()
        .map(|&s| ((s - a).norm() - spec.lambda * (s + a).norm()).abs())
        .fold(T::zero(), T::max))
}
