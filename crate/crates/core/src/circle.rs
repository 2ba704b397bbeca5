//! Coefficient and boundary-sample representations of analytic functions.

use std::fmt;
use std::sync::Arc;

use num_complex::Complex;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Anything that can be evaluated on the closed unit disc.
pub trait AnalyticFn<T: Scalar> {
    fn eval(&self, z: Complex<T>) -> Complex<T>;
}

impl<T: Scalar, F> AnalyticFn<T> for F
where
    F: Fn(Complex<T>) -> Complex<T>,
{
    fn eval(&self, z: Complex<T>) -> Complex<T> {
        self(z)
    }
}

/// `e^{2πik/n}`, exact at the quarter points.
pub fn unit_root<T: Scalar>(k: usize, n: usize) -> Complex<T> {
    let k = k % n;
    if (4 * k).is_multiple_of(n) {
        return match 4 * k / n {
            0 => Complex::new(T::one(), T::zero()),
            1 => Complex::new(T::zero(), T::one()),
            2 => Complex::new(-T::one(), T::zero()),
            _ => Complex::new(T::zero(), -T::one()),
        };
    }
    let theta = T::two() * T::PI() * T::from_count(k) / T::from_count(n);
    Complex::new(theta.cos(), theta.sin())
}

fn check_grid_size(n: usize) -> Result<()> {
    if n < 4 || !n.is_power_of_two() {
        return Err(Error::GridSize(n));
    }
    Ok(())
}

/// A point of the closed unit disc.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiscPoint<T: Scalar>(Complex<T>);

impl<T: Scalar> DiscPoint<T> {
    /// Point of the open disc, `|z| < 1`.
    pub fn interior(z: Complex<T>) -> Result<Self> {
        if z.norm() < T::one() {
            Ok(Self(z))
        } else {
            Err(Error::OutsideDisc(format!("{z}")))
        }
    }

    /// Point of the closed disc, `|z| ≤ 1`, for boundary-value operations.
    pub fn closed(z: Complex<T>) -> Result<Self> {
        // allow rounding on nodes computed as (cos, sin)
        if z.norm() <= T::one() + T::epsilon() * T::lit(4.0) {
            Ok(Self(z))
        } else {
            Err(Error::OutsideDisc(format!("{z}")))
        }
    }

    pub fn z(&self) -> Complex<T> {
        self.0
    }
}

/// Dense Taylor coefficients `(a_0, …, a_d)` in increasing degree.
#[derive(Clone, Debug, PartialEq)]
pub struct TaylorCoeffs<T: Scalar> {
    coeffs: Vec<Complex<T>>,
}

impl<T: Scalar> TaylorCoeffs<T> {
    /// An empty vector is read as the zero polynomial.
    pub fn new(mut coeffs: Vec<Complex<T>>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Complex::new(T::zero(), T::zero()));
        }
        Self { coeffs }
    }

    pub fn from_real(coeffs: &[T]) -> Self {
        Self::new(coeffs.iter().map(|&a| Complex::new(a, T::zero())).collect())
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![Complex::new(T::zero(), T::zero()); k + 1];
        coeffs[k] = Complex::new(T::one(), T::zero());
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    pub fn into_vec(self) -> Vec<Complex<T>> {
        self.coeffs
    }

    /// `a_0 = f(0)`.
    pub fn constant_term(&self) -> Complex<T> {
        self.coeffs[0]
    }

    /// Drops trailing exact zeros, keeping at least the constant term.
    pub fn trim(&self) -> Self {
        let zero = Complex::new(T::zero(), T::zero());
        let keep = self
            .coeffs
            .iter()
            .rposition(|&a| a != zero)
            .map_or(1, |i| i + 1);
        Self::new(self.coeffs[..keep].to_vec())
    }

    /// Zero-pads up to degree `d`; never truncates.
    pub fn padded(&self, d: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < d + 1 {
            coeffs.resize(d + 1, Complex::new(T::zero(), T::zero()));
        }
        Self { coeffs }
    }

    pub fn truncated(&self, d: usize) -> Self {
        Self::new(self.coeffs.iter().take(d + 1).copied().collect())
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        Self::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let d = self.degree().max(other.degree());
        let (a, b) = (self.padded(d), other.padded(d));
        Self::new(
            a.coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| x + y)
                .collect(),
        )
    }

    /// `f(e^{iα} z)`.
    pub fn rotate(&self, alpha: T) -> Self {
        let step = Complex::from_polar(T::one(), alpha);
        let mut w = Complex::new(T::one(), T::zero());
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| {
                let out = a * w;
                w = w * step;
                out
            })
            .collect();
        Self::new(coeffs)
    }

    /// Horner evaluation. Exact `a_0` at `z = 0`.
    pub fn evaluate(&self, z: Complex<T>) -> Complex<T> {
        let mut rev = self.coeffs.iter().rev();
        let mut acc = *rev.next().expect("nonempty");
        for &a in rev {
            acc = acc * z + a;
        }
        acc
    }

    pub fn to_grid(&self, n: usize) -> Result<BoundaryGrid<T>> {
        GridTransform::new(n)?.to_grid(self)
    }
}

impl<T: Scalar> AnalyticFn<T> for TaylorCoeffs<T> {
    fn eval(&self, z: Complex<T>) -> Complex<T> {
        self.evaluate(z)
    }
}

impl<T: Scalar> fmt::Display for TaylorCoeffs<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Values on the nodes `e^{2πik/N}`, `k = 0..N`, with `N ≥ 4` a power of two.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryGrid<T: Scalar> {
    samples: Vec<Complex<T>>,
}

impl<T: Scalar> BoundaryGrid<T> {
    pub fn from_samples(samples: Vec<Complex<T>>) -> Result<Self> {
        check_grid_size(samples.len())?;
        Ok(Self { samples })
    }

    /// Samples `f` pointwise on `n` nodes.
    pub fn sample<F: AnalyticFn<T> + ?Sized>(f: &F, n: usize) -> Result<Self> {
        check_grid_size(n)?;
        Ok(Self {
            samples: (0..n).map(|k| f.eval(unit_root(k, n))).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn samples(&self) -> &[Complex<T>] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<Complex<T>> {
        self.samples
    }

    pub fn node(&self, k: usize) -> Complex<T> {
        unit_root(k, self.len())
    }

    pub fn scale(&self, c: Complex<T>) -> Self {
        Self {
            samples: self.samples.iter().map(|&s| s * c).collect(),
        }
    }

    /// First `d + 1` discrete Fourier coefficients.
    pub fn to_coeffs(&self, d: usize) -> Result<TaylorCoeffs<T>> {
        GridTransform::new(self.len())?.to_coeffs(self, d)
    }
}

/// Planned forward and inverse transforms for one grid size.
///
/// Reusable across calls; the optimizer keeps one per search.
#[derive(Clone)]
pub struct GridTransform<T: Scalar> {
    n: usize,
    forward: Arc<dyn Fft<T>>,
    inverse: Arc<dyn Fft<T>>,
}

impl<T: Scalar> fmt::Debug for GridTransform<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GridTransform").field("n", &self.n).finish()
    }
}

impl<T: Scalar> GridTransform<T> {
    pub fn new(n: usize) -> Result<Self> {
        check_grid_size(n)?;
        let mut planner = FftPlanner::new();
        Ok(Self {
            n,
            forward: planner.plan_fft_forward(n),
            inverse: planner.plan_fft_inverse(n),
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `samples[k] = Σ_j a_j e^{2πijk/N}` via the unnormalized inverse transform.
    pub fn to_grid(&self, f: &TaylorCoeffs<T>) -> Result<BoundaryGrid<T>> {
        if self.n <= f.degree() {
            return Err(Error::Aliasing {
                n: self.n,
                degree: f.degree(),
            });
        }
        let mut buf = f.coeffs.clone();
        buf.resize(self.n, Complex::new(T::zero(), T::zero()));
        self.inverse.process(&mut buf);
        Ok(BoundaryGrid { samples: buf })
    }

    pub fn to_coeffs(&self, g: &BoundaryGrid<T>, d: usize) -> Result<TaylorCoeffs<T>> {
        if g.len() != self.n {
            return Err(Error::GridSize(g.len()));
        }
        if d >= self.n {
            return Err(Error::Aliasing {
                n: self.n,
                degree: d,
            });
        }
        let mut buf = g.samples.clone();
        self.forward.process(&mut buf);
        let scale = T::one() / T::from_count(self.n);
        buf.truncate(d + 1);
        Ok(TaylorCoeffs::new(
            buf.into_iter().map(|c| c * scale).collect(),
        ))
    }
}
