//! Finite Blaschke products, principal square roots of boundary values, and the
//! inner–outer factorization `f = I·F` with `F` given by the Herglotz integral of
//! `log|f|`.

use num_complex::Complex;

use crate::circle::{unit_root, AnalyticFn, BoundaryGrid, DiscPoint, GridTransform, TaylorCoeffs};
use crate::error::{Error, Result};
use crate::norms::mean_value;
use crate::scalar::Scalar;

/// `I(z) = z^m · Π ((|α|/α)·(α − z)/(1 − ᾱz))^{mult}`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlaschkeSpec<T: Scalar> {
    origin_multiplicity: u32,
    zeros: Vec<(Complex<T>, u32)>,
}

impl<T: Scalar> BlaschkeSpec<T> {
    pub fn new(origin_multiplicity: u32, zeros: Vec<(Complex<T>, u32)>) -> Result<Self> {
        for &(alpha, mult) in &zeros {
            let r = alpha.norm();
            if !(r > T::zero() && r < T::one()) {
                return Err(Error::BlaschkeZero(format!("{alpha}")));
            }
            if mult == 0 {
                return Err(Error::Multiplicity);
            }
        }
        Ok(Self {
            origin_multiplicity,
            zeros,
        })
    }

    /// `z^m`.
    pub fn monomial(m: u32) -> Self {
        Self {
            origin_multiplicity: m,
            zeros: Vec::new(),
        }
    }

    pub fn origin_multiplicity(&self) -> u32 {
        self.origin_multiplicity
    }

    pub fn zeros(&self) -> &[(Complex<T>, u32)] {
        &self.zeros
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.origin_multiplicity >= 1
    }

    pub fn eval(&self, z: Complex<T>) -> Complex<T> {
        let one = Complex::new(T::one(), T::zero());
        let mut acc = z.powu(self.origin_multiplicity);
        for &(alpha, mult) in &self.zeros {
            let unit = Complex::new(alpha.norm(), T::zero()) / alpha;
            let factor = unit * (alpha - z) / (one - alpha.conj() * z);
            acc = acc * factor.powu(mult);
        }
        acc
    }
}

impl<T: Scalar> AnalyticFn<T> for BlaschkeSpec<T> {
    fn eval(&self, z: Complex<T>) -> Complex<T> {
        BlaschkeSpec::eval(self, z)
    }
}

/// Boundary samples of `f^{1/2} = √|f| e^{i Arg f / 2}`, `Arg ∈ (−π, π]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SqrtGrid<T: Scalar> {
    samples: Vec<Complex<T>>,
}

impl<T: Scalar> SqrtGrid<T> {
    pub fn samples(&self) -> &[Complex<T>] {
        &self.samples
    }

    pub fn into_grid(self) -> BoundaryGrid<T> {
        BoundaryGrid::from_samples(self.samples).expect("built from a valid grid")
    }
}

fn principal_sqrt<T: Scalar>(w: Complex<T>) -> Complex<T> {
    if w.re == T::zero() && w.im == T::zero() {
        return Complex::new(T::zero(), T::zero());
    }
    let mut arg = w.im.atan2(w.re);
    // atan2(-0, x<0) = -π; the principal value is π
    if arg <= -T::PI() {
        arg = T::PI();
    }
    Complex::from_polar(w.norm().sqrt(), arg / T::two())
}

pub fn sqrt_principal<T: Scalar>(g: &BoundaryGrid<T>) -> SqrtGrid<T> {
    SqrtGrid {
        samples: g.samples().iter().map(|&s| principal_sqrt(s)).collect(),
    }
}

/// `Re ∫ f^{1/2} dθ/2π − √f(0)`; nonnegative for every `f ∈ H^1` with `f(0) ≥ 0`,
/// zero exactly when `f^{1/2}` is analytic.
///
/// `f0` must be the mean of the function the grid was sampled from.
pub fn lemma_gap<T: Scalar>(g: &BoundaryGrid<T>, f0: T) -> Result<T> {
    if f0.is_nan() || f0 < T::zero() {
        return Err(Error::NegativeMean(f0.to_f64()));
    }
    let root = sqrt_principal(g).into_grid();
    Ok(mean_value(&root).re - f0.sqrt())
}

/// Herglotz data of `log|f|` on one grid, plus the reconstructed Taylor
/// coefficients of `f`.
#[derive(Clone, Debug)]
pub struct OuterFactor<T: Scalar> {
    n: usize,
    log_modulus: Vec<T>,
    f_coeffs: TaylorCoeffs<T>,
    transform: GridTransform<T>,
}

impl<T: Scalar> OuterFactor<T> {
    pub fn new(g: &BoundaryGrid<T>) -> Result<Self> {
        let mut log_modulus = Vec::with_capacity(g.len());
        for (k, s) in g.samples().iter().enumerate() {
            let m = s.norm();
            if m == T::zero() {
                return Err(Error::BoundaryZero(k));
            }
            log_modulus.push(m.ln());
        }
        let transform = GridTransform::new(g.len())?;
        let f_coeffs = transform.to_coeffs(g, g.len() - 1)?;
        Ok(Self {
            n: g.len(),
            log_modulus,
            f_coeffs,
            transform,
        })
    }

    /// `1 − 10·(2π/N)`: the largest radius the trapezoid rule resolves.
    pub fn max_radius(&self) -> T {
        T::one() - T::lit(10.0) * T::two() * T::PI() / T::from_count(self.n)
    }

    fn check_radius(&self, z: Complex<T>) -> Result<()> {
        let max_radius = self.max_radius();
        if z.norm() > max_radius {
            return Err(Error::TooCloseToBoundary {
                z: format!("{z}"),
                max_radius: max_radius.to_f64(),
            });
        }
        Ok(())
    }

    /// `F(z) = exp(N⁻¹ Σ_k (ζ_k + z)/(ζ_k − z) log|f(ζ_k)|)`.
    pub fn outer(&self, z: DiscPoint<T>) -> Result<Complex<T>> {
        let z = z.z();
        self.check_radius(z)?;
        let sum = self.log_modulus.iter().enumerate().fold(
            Complex::new(T::zero(), T::zero()),
            |acc, (k, &u)| {
                let zeta = unit_root::<T>(k, self.n);
                acc + (zeta + z) / (zeta - z) * u
            },
        );
        Ok((sum / T::from_count(self.n)).exp())
    }

    /// `f(z)` from the discrete Fourier coefficients of the grid.
    pub fn function(&self, z: Complex<T>) -> Complex<T> {
        self.f_coeffs.evaluate(z)
    }

    /// `I(z) = f(z)/F(z)`.
    pub fn inner(&self, z: DiscPoint<T>) -> Result<Complex<T>> {
        let outer = self.outer(z)?;
        if outer.norm() < T::lit(1e-12) {
            return Err(Error::DegenerateOuter(format!("{}", z.z())));
        }
        Ok(self.function(z.z()) / outer)
    }

    /// `(f(rζ_k), F(rζ_k))` for every node, by transforms.
    ///
    /// Algebraically identical to the pointwise trapezoid sums: the discrete
    /// Herglotz sum at `z` equals `û_0 + 2(1 − z^N)⁻¹ Σ_{j=1}^{N} z^j û_{j mod N}`
    /// where `û` are the discrete Fourier coefficients of `log|f|`.
    pub fn on_circle(&self, radius: T) -> Result<Vec<(Complex<T>, Complex<T>)>> {
        self.check_radius(Complex::new(radius, T::zero()))?;
        let n = self.n;
        let zero = Complex::new(T::zero(), T::zero());

        let mut f_buf: Vec<Complex<T>> = Vec::with_capacity(n);
        let mut rj = T::one();
        for &a in self.f_coeffs.coeffs() {
            f_buf.push(a * rj);
            rj = rj * radius;
        }
        let f_grid = BoundaryGrid::from_samples(f_buf)?;
        let f_vals = self
            .transform
            .to_grid(&TaylorCoeffs::new(f_grid.into_samples()))?;

        let u = BoundaryGrid::from_samples(
            self.log_modulus
                .iter()
                .map(|&v| Complex::new(v, T::zero()))
                .collect(),
        )?;
        let u_hat = self.transform.to_coeffs(&u, n - 1)?.into_vec();
        let r_n = radius.powi(n as i32);
        let scale = T::two() / (T::one() - r_n);
        let mut h = vec![zero; n];
        let mut rj = radius;
        for j in 1..n {
            h[j] = u_hat[j] * rj * scale;
            rj = rj * radius;
        }
        // the j = N term lands on ζ^N = 1
        h[0] = u_hat[0] + u_hat[0] * r_n * scale;
        let log_outer = self.transform.to_grid(&TaylorCoeffs::new(h))?;

        Ok(f_vals
            .samples()
            .iter()
            .zip(log_outer.samples())
            .map(|(&f, &l)| (f, l.exp()))
            .collect())
    }
}

/// Outer part `F(z)` of the sampled function.
pub fn outer_part<T: Scalar>(g: &BoundaryGrid<T>, z: DiscPoint<T>) -> Result<Complex<T>> {
    OuterFactor::new(g)?.outer(z)
}

/// Inner part `f(z)/F(z)` at each point.
pub fn inner_part<T: Scalar>(
    g: &BoundaryGrid<T>,
    points: &[DiscPoint<T>],
) -> Result<Vec<Complex<T>>> {
    let factor = OuterFactor::new(g)?;
    points.iter().map(|&z| factor.inner(z)).collect()
}

/// Deviation of `|I|` from 1 near the boundary.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InnerModulusCheck<T: Scalar> {
    pub radius: T,
    /// `max_k ||I(rζ_k)| − 1|`. At least `1 − r` whenever `I(0) = 0`.
    pub at_radius: T,
    /// `max_k |M_k − 1|` with `M_k` the linear radial extrapolation to `|ζ| = 1`
    /// from radii `r` and `2r − 1`.
    pub boundary: T,
}

/// Radial check that the inner part has unimodular boundary values.
pub fn inner_modulus_check<T: Scalar>(
    g: &BoundaryGrid<T>,
    radius: T,
) -> Result<InnerModulusCheck<T>> {
    let factor = OuterFactor::new(g)?;
    let inner_moduli = |r: T| -> Result<Vec<T>> {
        Ok(factor
            .on_circle(r)?
            .into_iter()
            .map(|(f, outer)| (f / outer).norm())
            .collect())
    };
    let outer_ring = inner_moduli(radius)?;
    let inner_ring = inner_moduli(T::two() * radius - T::one())?;
    let at_radius = outer_ring
        .iter()
        .map(|m| (*m - T::one()).abs())
        .fold(T::zero(), T::max);
    let boundary = outer_ring
        .iter()
        .zip(&inner_ring)
        .map(|(&a, &b)| (T::two() * a - b - T::one()).abs())
        .fold(T::zero(), T::max);
    Ok(InnerModulusCheck {
        radius,
        at_radius,
        boundary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    fn pt(re: f64, im: f64) -> DiscPoint<f64> {
        DiscPoint::interior(c(re, im)).unwrap()
    }

    #[test]
    fn blaschke_examples() {
        let z = BlaschkeSpec::<f64>::monomial(1);
        assert_eq!(z.eval(c(0.3, -0.2)), c(0.3, -0.2));
        let b = BlaschkeSpec::new(1, vec![(c(0.5, 0.0), 1)]).unwrap();
        assert_eq!(b.eval(c(0.0, 0.0)), c(0.0, 0.0));
        let b = BlaschkeSpec::new(0, vec![(c(0.3, 0.4), 2), (c(-0.7, 0.1), 1)]).unwrap();
        for k in 0..64 {
            let v = b.eval(unit_root(k, 64));
            assert!((v.norm() - 1.0).abs() <= 1e-13);
        }
        // each factor is positive at the origin
        let at0 = b.eval(c(0.0, 0.0));
        assert!(at0.im.abs() < 1e-16 && at0.re > 0.0);
    }

    #[test]
    fn blaschke_validation() {
        assert!(BlaschkeSpec::new(0, vec![(c(0.0, 0.0), 1)]).is_err());
        assert!(BlaschkeSpec::new(0, vec![(c(1.0, 0.0), 1)]).is_err());
        assert_eq!(
            BlaschkeSpec::new(0, vec![(c(0.5, 0.0), 0)]),
            Err(Error::Multiplicity)
        );
    }

    #[test]
    fn sqrt_examples() {
        let g = TaylorCoeffs::from_real(&[4.0]).to_grid(8).unwrap();
        assert!(sqrt_principal(&g)
            .samples()
            .iter()
            .all(|s| (s - c(2.0, 0.0)).norm() < 1e-15));

        let g = TaylorCoeffs::<f64>::monomial(1).to_grid(8).unwrap();
        let r = sqrt_principal(&g);
        let want = C::from_polar(1.0, std::f64::consts::FRAC_PI_4);
        assert!((r.samples()[2] - want).norm() < 1e-15);
        // Arg = π maps to +i, never −i
        assert!((r.samples()[4] - c(0.0, 1.0)).norm() < 1e-15);

        let f = TaylorCoeffs::from_real(&[1.0, -2.0, 1.0]);
        let g = f.to_grid(64).unwrap();
        let r = sqrt_principal(&g);
        for (k, s) in r.samples().iter().enumerate() {
            let want = c(1.0, 0.0) - g.node(k);
            assert!((s - want).norm() <= 1e-12, "k={k}: {s} vs {want}");
        }
    }

    #[test]
    fn negative_real_axis_gets_nonnegative_real_part() {
        let g =
            BoundaryGrid::from_samples(vec![c(-4.0, 0.0), c(-4.0, -0.0), c(0.0, 0.0), c(1.0, 0.0)])
                .unwrap();
        let r = sqrt_principal(&g);
        assert_eq!(
            r.samples()[0],
            C::from_polar(2.0, std::f64::consts::FRAC_PI_2)
        );
        assert_eq!(r.samples()[1], r.samples()[0]);
        assert_eq!(r.samples()[2], c(0.0, 0.0));
        assert!(r.samples().iter().all(|s| s.re >= 0.0));
    }

    #[test]
    fn lemma_gap_examples() {
        let g = TaylorCoeffs::from_real(&[1.0, -2.0, 1.0])
            .to_grid(4096)
            .unwrap();
        assert!(lemma_gap(&g, 1.0_f64).unwrap().abs() <= 1e-10);

        let g = TaylorCoeffs::<f64>::monomial(1).to_grid(4096).unwrap();
        let gap = lemma_gap(&g, 0.0).unwrap();
        assert!((gap - 2.0 / std::f64::consts::PI).abs() <= 1e-6, "{gap}");

        let g = TaylorCoeffs::from_real(&[2.5]).to_grid(16).unwrap();
        assert!(lemma_gap(&g, 2.5_f64).unwrap().abs() < 1e-15);

        assert_eq!(lemma_gap(&g, -1.0), Err(Error::NegativeMean(-1.0)));
    }

    #[test]
    fn outer_part_examples() {
        let g = TaylorCoeffs::<f64>::monomial(1).to_grid(256).unwrap();
        assert!((outer_part(&g, pt(0.0, 0.0)).unwrap() - c(1.0, 0.0)).norm() < 1e-14);

        let g = TaylorCoeffs::from_real(&[2.0]).to_grid(256).unwrap();
        assert!((outer_part(&g, pt(0.3, 0.0)).unwrap() - c(2.0, 0.0)).norm() <= 1e-10);

        let g = TaylorCoeffs::from_real(&[0.0, 2.0, -1.0])
            .to_grid(4096)
            .unwrap();
        assert!((outer_part(&g, pt(0.0, 0.0)).unwrap() - c(2.0, 0.0)).norm() <= 1e-8);
    }

    #[test]
    fn outer_part_rejections() {
        let g = TaylorCoeffs::from_real(&[1.0, -1.0]).to_grid(64).unwrap();
        assert_eq!(outer_part(&g, pt(0.0, 0.0)), Err(Error::BoundaryZero(0)));

        let g = TaylorCoeffs::from_real(&[2.0, -1.0]).to_grid(64).unwrap();
        assert!(matches!(
            outer_part(&g, pt(0.2, 0.0)),
            Err(Error::TooCloseToBoundary { .. })
        ));
        let g = TaylorCoeffs::from_real(&[2.0, -1.0]).to_grid(1024).unwrap();
        assert!(outer_part(&g, pt(0.9, 0.0)).is_ok());
        assert!(outer_part(&g, pt(0.95, 0.0)).is_err());
    }

    #[test]
    fn inner_part_examples() {
        let g = TaylorCoeffs::from_real(&[0.0, 2.0, -1.0])
            .to_grid(4096)
            .unwrap();
        let i = inner_part(&g, &[pt(0.5, 0.0)]).unwrap();
        assert!((i[0] - c(0.5, 0.0)).norm() <= 1e-6);

        let g = TaylorCoeffs::from_real(&[2.0, -1.0]).to_grid(4096).unwrap();
        let i = inner_part(&g, &[pt(0.4, 0.0)]).unwrap();
        assert!((i[0] - c(1.0, 0.0)).norm() <= 1e-6);

        let g = TaylorCoeffs::<f64>::monomial(2).to_grid(4096).unwrap();
        let i = inner_part(&g, &[pt(0.3, 0.0)]).unwrap();
        assert!((i[0] - c(0.09, 0.0)).norm() <= 1e-8);
    }

    #[test]
    fn circle_route_matches_pointwise_sums() {
        let f = |z: C| (c(2.0, 0.0) - z) * (c(3.0, 0.0) + z) * z;
        let g = BoundaryGrid::sample(&f, 1024).unwrap();
        let factor = OuterFactor::new(&g).unwrap();
        let r = 0.9;
        let ring = factor.on_circle(r).unwrap();
        for k in (0..1024).step_by(37) {
            let z = g.node(k) * r;
            let outer = factor.outer(DiscPoint::interior(z).unwrap()).unwrap();
            assert!((ring[k].1 - outer).norm() <= 1e-12 * outer.norm());
            assert!((ring[k].0 - factor.function(z)).norm() <= 1e-12 * outer.norm());
        }
    }

    #[test]
    fn inner_modulus_check_for_z_times_outer() {
        let f = TaylorCoeffs::from_real(&[0.0, 2.0, -1.0]);
        let g = f.to_grid(1 << 16).unwrap();
        let check = inner_modulus_check(&g, 0.999_f64).unwrap();
        // |I(0.999ζ)| = 0.999 for I = z
        assert!((check.at_radius - 1e-3).abs() <= 1e-9);
        assert!(check.boundary <= 1e-4);
    }
}
