//! Numerical laboratory for the backward shift operator `Bf(z) = (f(z) - f(0)) / z`
//! on the Hardy spaces `H^p` of the unit disc.
//!
//! Functions are represented either by Taylor coefficients or by samples on a
//! uniform grid of the unit circle. All circle integrals use the periodic
//! trapezoid rule against the normalized measure `dθ/2π`.
//!
//! The numerical core is generic over the floating point type (see [`Scalar`]);
//! the aliases at the crate root fix it to `f64`, which is what the optimizer and
//! the command line use.

pub mod circle;
pub mod error;
pub mod extremal;
pub mod inner_outer;
pub mod norms;
pub mod optimizer;
pub mod random;
pub mod scalar;
pub mod shift;

pub use circle::{AnalyticFn, BoundaryGrid, DiscPoint, GridTransform, TaylorCoeffs};
pub use error::{Error, Result};
pub use extremal::{
    argmax_bound_curve, bound_curve, cs_equality_deviation, verify_extremal, x_of_lambda,
    BoundCurvePoint, ExtremalSpec,
};
pub use inner_outer::{
    inner_modulus_check, inner_part, lemma_gap, outer_part, sqrt_principal, BlaschkeSpec,
    InnerModulusCheck, OuterFactor, SqrtGrid,
};
pub use norms::{mean_value, norm_p, reference_bound, BoundKind, PExponent};
pub use optimizer::{
    degree_ladder, extremal_truncation, lambda_sweep, maximize_ratio, maximize_ratio_from, p_sweep,
    LambdaRow, PSweepRow, SearchConfig, SearchResult,
};
pub use scalar::Scalar;
pub use shift::{
    backward_shift_coeffs, backward_shift_grid, forward_shift_coeffs, forward_shift_grid, ratio,
    ratio_of_grid, DiscAutomorphism, RatioReport,
};

/// Complex number over the default scalar.
pub type C64 = num_complex::Complex<f64>;

pub type Coeffs = TaylorCoeffs<f64>;
pub type Grid = BoundaryGrid<f64>;
pub type Point = DiscPoint<f64>;
pub type Exponent = PExponent<f64>;
pub type Report = RatioReport<f64>;
pub type Blaschke = BlaschkeSpec<f64>;
pub type Extremal = ExtremalSpec<f64>;
pub type Automorphism = DiscAutomorphism<f64>;

/// `1/√3`, the extremal parameter.
pub const LAMBDA_EXTREMAL: f64 = 0.577_350_269_189_625_7;

/// `2/√3`, the norm of the backward shift on `H^1`.
pub const SHARP_H1: f64 = 1.154_700_538_379_251_5;
