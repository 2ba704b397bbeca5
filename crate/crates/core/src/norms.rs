//! `H^p` norms by periodic trapezoid quadrature, and the reference constants
//! known for the backward shift.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;

use crate::circle::BoundaryGrid;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Exponent `p ∈ [1, ∞]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PExponent<T: Scalar> {
    Finite(T),
    Infinity,
}

impl<T: Scalar> PExponent<T> {
    pub fn finite(p: T) -> Result<Self> {
        if p.is_finite() && p >= T::one() {
            Ok(Self::Finite(p))
        } else if p.is_infinite() && p > T::zero() {
            Ok(Self::Infinity)
        } else {
            Err(Error::Exponent(p.to_f64()))
        }
    }

    pub fn one() -> Self {
        Self::Finite(T::one())
    }

    pub fn two() -> Self {
        Self::Finite(T::two())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Self::Finite(p) if *p == T::one())
    }

    pub fn is_two(&self) -> bool {
        matches!(self, Self::Finite(p) if *p == T::two())
    }

    /// `p` as a float, `+∞` for the sup norm.
    pub fn value(&self) -> T {
        match *self {
            Self::Finite(p) => p,
            Self::Infinity => T::infinity(),
        }
    }
}

impl<T: Scalar> fmt::Display for PExponent<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(p) => write!(f, "{p}"),
            Self::Infinity => write!(f, "inf"),
        }
    }
}

impl<T: Scalar> FromStr for PExponent<T> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "infinity" | "∞" | "Inf" => Ok(Self::Infinity),
            other => {
                let p: f64 = other.parse().map_err(|_| Error::Exponent(f64::NAN))?;
                Self::finite(T::lit(p))
            }
        }
    }
}

/// `(N⁻¹ Σ |g_k|^p)^{1/p}`, or `max |g_k|` at `p = ∞`.
pub fn norm_p<T: Scalar>(g: &BoundaryGrid<T>, p: PExponent<T>) -> T {
    let samples = g.samples();
    let n = T::from_count(samples.len());
    match p {
        PExponent::Infinity => samples.iter().map(|s| s.norm()).fold(T::zero(), T::max),
        PExponent::Finite(p) if p == T::one() => {
            samples
                .iter()
                .map(|s| s.norm())
                .fold(T::zero(), |a, b| a + b)
                / n
        }
        PExponent::Finite(p) if p == T::two() => (samples
            .iter()
            .map(|s| s.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            / n)
            .sqrt(),
        PExponent::Finite(p) => {
            let peak = samples.iter().map(|s| s.norm()).fold(T::zero(), T::max);
            if peak == T::zero() {
                return T::zero();
            }
            let mean = samples
                .iter()
                .map(|s| (s.norm() / peak).powf(p))
                .fold(T::zero(), |a, b| a + b)
                / n;
            peak * mean.powf(T::one() / p)
        }
    }
}

/// `N⁻¹ Σ g_k`: the zeroth Fourier coefficient, `f(0)` for sampled analytic `f`.
pub fn mean_value<T: Scalar>(g: &BoundaryGrid<T>) -> Complex<T> {
    let sum = g
        .samples()
        .iter()
        .fold(Complex::new(T::zero(), T::zero()), |a, &b| a + b);
    sum / T::from_count(g.len())
}

/// Named bounds on `‖B‖_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundKind {
    /// `|f(0)| ≤ ‖f‖_p` plus the triangle inequality: 2 for every `p`.
    Trivial,
    /// `2^{|1 − 2/p|}`.
    RieszThorin,
    /// 1.7047 on `H^1`.
    FergusonH1,
    /// `2/√3` on `H^1`.
    SharpH1,
    /// 1 on `H^2`.
    H2,
    /// 2 on `H^∞`.
    HInf,
}

impl BoundKind {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Trivial => "trivial",
            Self::RieszThorin => "riesz_thorin",
            Self::FergusonH1 => "ferguson_h1",
            Self::SharpH1 => "sharp_h1",
            Self::H2 => "h2",
            Self::HInf => "h_inf",
        }
    }
}

pub fn reference_bound<T: Scalar>(p: PExponent<T>, kind: BoundKind) -> Result<T> {
    let mismatch = || Error::BoundMismatch {
        kind: kind.name(),
        p: p.to_string(),
    };
    match kind {
        BoundKind::Trivial => Ok(T::two()),
        BoundKind::RieszThorin => Ok(match p {
            PExponent::Infinity => T::two(),
            PExponent::Finite(p) => T::two().powf((T::one() - T::two() / p).abs()),
        }),
        BoundKind::FergusonH1 if p.is_one() => Ok(T::lit(1.7047)),
        BoundKind::SharpH1 if p.is_one() => Ok(T::two() * T::inv_sqrt3()),
        BoundKind::H2 if p.is_two() => Ok(T::one()),
        BoundKind::HInf if p == PExponent::Infinity => Ok(T::two()),
        _ => Err(mismatch()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::TaylorCoeffs;

    type C = Complex<f64>;

    fn all_p() -> Vec<PExponent<f64>> {
        vec![
            PExponent::one(),
            PExponent::Finite(1.5),
            PExponent::two(),
            PExponent::Finite(3.0),
            PExponent::Finite(7.25),
            PExponent::Infinity,
        ]
    }

    #[test]
    fn exponent_validation() {
        assert!(PExponent::finite(0.5).is_err());
        assert!(PExponent::finite(f64::NAN).is_err());
        assert_eq!(PExponent::finite(f64::INFINITY), Ok(PExponent::Infinity));
        assert_eq!("inf".parse::<PExponent<f64>>(), Ok(PExponent::Infinity));
        assert_eq!("1.5".parse::<PExponent<f64>>(), Ok(PExponent::Finite(1.5)));
        assert!("0.9".parse::<PExponent<f64>>().is_err());
    }

    #[test]
    fn constant_and_monomial_norms() {
        let one = TaylorCoeffs::from_real(&[1.0]).to_grid(64).unwrap();
        for p in all_p() {
            assert!((norm_p(&one, p) - 1.0).abs() < 1e-15);
        }
        let z5 = TaylorCoeffs::<f64>::monomial(5).to_grid(64).unwrap();
        assert!((norm_p(&z5, PExponent::two()) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn extremal_one_norm_is_three() {
        let s3 = 3f64.sqrt();
        let f = |z: C| {
            let q = (z + s3) / (-z + s3);
            q * q
        };
        let g = BoundaryGrid::sample(&f, 4096).unwrap();
        assert!((norm_p(&g, PExponent::one()) - 3.0).abs() <= 1e-8);
    }

    #[test]
    fn mean_value_examples() {
        let c = C::new(0.4, -2.0);
        let g = TaylorCoeffs::new(vec![c]).to_grid(16).unwrap();
        assert!((mean_value(&g) - c).norm() < 1e-15);
        for n in [4, 8, 1024] {
            let g = TaylorCoeffs::<f64>::monomial(1).to_grid(n).unwrap();
            assert!(mean_value(&g).norm() <= 1e-15);
        }
        let g = TaylorCoeffs::from_real(&[1.0, -1.0]).to_grid(32).unwrap();
        assert!((mean_value(&g) - C::new(1.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn reference_bounds() {
        let one = PExponent::<f64>::one();
        assert_eq!(
            reference_bound(one, BoundKind::SharpH1).unwrap(),
            1.1547005383792515
        );
        assert_eq!(reference_bound(one, BoundKind::FergusonH1).unwrap(), 1.7047);
        let rt4: f64 = reference_bound(PExponent::Finite(4.0), BoundKind::RieszThorin).unwrap();
        assert!((rt4 - std::f64::consts::SQRT_2).abs() < 1e-14);
        assert_eq!(
            reference_bound(PExponent::two(), BoundKind::RieszThorin),
            Ok(1.0)
        );
        assert_eq!(
            reference_bound(PExponent::<f64>::Infinity, BoundKind::HInf),
            Ok(2.0)
        );
        assert!(reference_bound(PExponent::<f64>::two(), BoundKind::SharpH1).is_err());
        assert!(reference_bound(one, BoundKind::H2).is_err());
        assert!(reference_bound(one, BoundKind::HInf).is_err());
        assert!(reference_bound(PExponent::Finite(3.0), BoundKind::FergusonH1).is_err());
    }

    #[test]
    fn bound_ordering_at_one() {
        let one = PExponent::<f64>::one();
        let sharp = reference_bound(one, BoundKind::SharpH1).unwrap();
        let ferguson = reference_bound(one, BoundKind::FergusonH1).unwrap();
        let trivial = reference_bound(one, BoundKind::Trivial).unwrap();
        let rt = reference_bound(one, BoundKind::RieszThorin).unwrap();
        assert!(sharp < ferguson && ferguson < trivial);
        assert!(sharp < rt);
        assert_eq!(rt, 2.0);
    }
}
