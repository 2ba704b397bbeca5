//! Backward and forward shifts, disc automorphisms, and the ratio `‖Bf‖_p / ‖f‖_p`.

use num_complex::Complex;

use crate::circle::{unit_root, AnalyticFn, BoundaryGrid, TaylorCoeffs};
use crate::error::{Error, Result};
use crate::norms::{mean_value, norm_p, PExponent};
use crate::scalar::Scalar;

/// `(a_0, a_1, …, a_d) ↦ (a_1, …, a_d)`; constants map to the zero polynomial.
pub fn backward_shift_coeffs<T: Scalar>(f: &TaylorCoeffs<T>) -> TaylorCoeffs<T> {
    TaylorCoeffs::new(f.coeffs()[1..].to_vec())
}

/// Multiplication by `z`.
pub fn forward_shift_coeffs<T: Scalar>(f: &TaylorCoeffs<T>) -> TaylorCoeffs<T> {
    let mut coeffs = Vec::with_capacity(f.degree() + 2);
    coeffs.push(Complex::new(T::zero(), T::zero()));
    coeffs.extend_from_slice(f.coeffs());
    TaylorCoeffs::new(coeffs)
}

/// `samples[k] ← (samples[k] − f0)·e^{−2πik/N}`, with `f0` supplied by the caller.
pub fn backward_shift_grid<T: Scalar>(g: &BoundaryGrid<T>, f0: Complex<T>) -> BoundaryGrid<T> {
    let n = g.len();
    let samples = g
        .samples()
        .iter()
        .enumerate()
        .map(|(k, &s)| (s - f0) * unit_root::<T>(k, n).conj())
        .collect();
    BoundaryGrid::from_samples(samples).expect("same size as input")
}

pub fn forward_shift_grid<T: Scalar>(g: &BoundaryGrid<T>) -> BoundaryGrid<T> {
    let n = g.len();
    let samples = g
        .samples()
        .iter()
        .enumerate()
        .map(|(k, &s)| s * unit_root::<T>(k, n))
        .collect();
    BoundaryGrid::from_samples(samples).expect("same size as input")
}

/// The automorphism `φ_w(z) = (w − z)/(1 − w̄ z)` exchanging `0` and `w`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiscAutomorphism<T: Scalar> {
    w: Complex<T>,
}

impl<T: Scalar> DiscAutomorphism<T> {
    pub fn new(w: Complex<T>) -> Result<Self> {
        if w.norm() < T::one() {
            Ok(Self { w })
        } else {
            Err(Error::OutsideDisc(format!("{w}")))
        }
    }

    pub fn w(&self) -> Complex<T> {
        self.w
    }
}

impl<T: Scalar> AnalyticFn<T> for DiscAutomorphism<T> {
    fn eval(&self, z: Complex<T>) -> Complex<T> {
        (self.w - z) / (Complex::new(T::one(), T::zero()) - self.w.conj() * z)
    }
}

/// Norms and derived quantities for one function on one grid.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RatioReport<T: Scalar> {
    pub p: PExponent<T>,
    pub norm_f: T,
    pub norm_bf: T,
    pub f0: Complex<T>,
    /// `‖Bf‖_p / ‖f‖_p`
    pub ratio: T,
    /// `|f(0)| / ‖f‖_p`
    pub x: T,
    pub n: usize,
}

/// Assembles the report for an already-sampled function. `f(0)` is the grid mean.
pub fn ratio_of_grid<T: Scalar>(g: &BoundaryGrid<T>, p: PExponent<T>) -> Result<RatioReport<T>> {
    let norm_f = norm_p(g, p);
    if norm_f <= T::zero() {
        return Err(Error::ZeroFunction);
    }
    let f0 = mean_value(g);
    let norm_bf = norm_p(&backward_shift_grid(g, f0), p);
    Ok(RatioReport {
        p,
        norm_f,
        norm_bf,
        f0,
        ratio: norm_bf / norm_f,
        x: f0.norm() / norm_f,
        n: g.len(),
    })
}

pub fn ratio<T: Scalar, F: AnalyticFn<T> + ?Sized>(
    f: &F,
    p: PExponent<T>,
    n: usize,
) -> Result<RatioReport<T>> {
    ratio_of_grid(&BoundaryGrid::sample(f, n)?, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    #[test]
    fn backward_shift_coeff_examples() {
        let f = TaylorCoeffs::from_real(&[7.0]);
        assert_eq!(backward_shift_coeffs(&f), TaylorCoeffs::from_real(&[0.0]));
        let f = TaylorCoeffs::from_real(&[1.0, 2.0, 3.0]);
        assert_eq!(
            backward_shift_coeffs(&f),
            TaylorCoeffs::from_real(&[2.0, 3.0])
        );
        let f = TaylorCoeffs::from_real(&[5.0, 4.0, 3.0, 2.0]);
        let b2 = backward_shift_coeffs(&backward_shift_coeffs(&f));
        assert_eq!(b2, TaylorCoeffs::from_real(&[3.0, 2.0]));
    }

    #[test]
    fn forward_then_backward_is_identity() {
        let f = TaylorCoeffs::new(vec![c(1.0, 2.0), c(-0.5, 0.0), c(0.0, 3.0)]);
        assert_eq!(backward_shift_coeffs(&forward_shift_coeffs(&f)), f);
        let g = f.to_grid(16).unwrap();
        let back = backward_shift_grid(&forward_shift_grid(&g), c(0.0, 0.0));
        for (a, b) in back.samples().iter().zip(g.samples()) {
            assert!((a - b).norm() < 1e-14);
        }
    }

    #[test]
    fn backward_shift_grid_examples() {
        let k = c(2.0, -1.0);
        let g = TaylorCoeffs::new(vec![k]).to_grid(8).unwrap();
        let b = backward_shift_grid(&g, k);
        assert!(b.samples().iter().all(|s| s.norm() < 1e-15));

        let g = TaylorCoeffs::<f64>::monomial(1).to_grid(8).unwrap();
        let b = backward_shift_grid(&g, c(0.0, 0.0));
        assert!(b.samples().iter().all(|s| (s - c(1.0, 0.0)).norm() < 1e-15));

        let s3 = 3f64.sqrt();
        let f = |z: C| {
            let q = (z + s3) / (-z + s3);
            q * q
        };
        let g = BoundaryGrid::sample(&f, 4096).unwrap();
        let b = backward_shift_grid(&g, c(1.0, 0.0));
        let n1 = norm_p(&b, PExponent::one());
        assert!((n1 - 2.0 * s3).abs() <= 1e-8, "{n1}");
    }

    #[test]
    fn automorphism_examples() {
        let phi0 = DiscAutomorphism::new(c(0.0, 0.0)).unwrap();
        assert_eq!(phi0.eval(c(0.3, 0.2)), c(-0.3, -0.2));
        let phi = DiscAutomorphism::new(c(0.3, 0.0)).unwrap();
        assert!((phi.eval(c(0.0, 0.0)) - c(0.3, 0.0)).norm() < 1e-16);
        assert!(phi.eval(c(0.3, 0.0)).norm() < 1e-16);
        assert!(DiscAutomorphism::new(c(0.6, 0.8)).is_err());
        assert!(DiscAutomorphism::new(c(1.5, 0.0)).is_err());
    }

    #[test]
    fn automorphism_sup_norm_law() {
        for w in [0.1, 0.5, 0.9] {
            let phi = DiscAutomorphism::new(c(w, 0.0)).unwrap();
            let r = ratio(&phi, PExponent::Infinity, 1 << 16).unwrap();
            // ‖φ_w‖_∞ = 1
            assert!(
                (r.norm_bf - (1.0 + w)).abs() <= 1e-4,
                "w={w}: {}",
                r.norm_bf
            );
            assert!((r.norm_f - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn ratio_examples() {
        let z = TaylorCoeffs::<f64>::monomial(1);
        let r = ratio(&z, PExponent::one(), 256).unwrap();
        assert!((r.ratio - 1.0).abs() < 1e-14);
        assert!(r.x.abs() < 1e-15);

        let s3 = 3f64.sqrt();
        let f = |z: C| {
            let q = (z + s3) / (-z + s3);
            q * q
        };
        let r = ratio(&f, PExponent::one(), 4096).unwrap();
        assert!((r.ratio - 1.1547005383792515).abs() <= 1e-8);
        assert!((r.x - 1.0 / 3.0).abs() <= 1e-8);

        let f = TaylorCoeffs::from_real(&[1.0, 1.0]);
        let r = ratio(&f, PExponent::two(), 64).unwrap();
        assert!((r.ratio - 0.5f64.sqrt()).abs() <= 1e-10);
    }

    #[test]
    fn zero_function_is_rejected() {
        let f = TaylorCoeffs::<f64>::zero();
        assert_eq!(ratio(&f, PExponent::one(), 16), Err(Error::ZeroFunction));
    }
}
