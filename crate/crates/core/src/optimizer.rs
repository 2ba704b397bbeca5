//! Downhill-simplex search over Taylor coefficients for large `‖Bf‖_p / ‖f‖_p`.
//!
//! The search runs on `f64` with `a_0 = 1`. The `2d` real parameters are the
//! real and imaginary parts of `a_1, …, a_d`.

use num_complex::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;

use crate::circle::{GridTransform, TaylorCoeffs};
use crate::error::{Error, Result};
use crate::extremal::{verify_extremal, x_of_lambda, ExtremalSpec};
use crate::inner_outer::BlaschkeSpec;
use crate::norms::{reference_bound, BoundKind, PExponent};
use crate::shift::{ratio_of_grid, RatioReport};

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;
const INITIAL_STEP: f64 = 0.1;
const PERTURBATION_SIGMA: f64 = 0.25;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchConfig {
    pub degree: usize,
    pub p: PExponent<f64>,
    pub n: usize,
    pub restarts: usize,
    pub max_iters: usize,
    /// Stop once every vertex is within `tol` of the best one.
    pub tol: f64,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            degree: 8,
            p: PExponent::one(),
            n: 4096,
            restarts: 16,
            max_iters: 2000,
            tol: 1e-10,
            seed: 0,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.degree == 0 {
            return Err(Error::Config("degree must be at least 1".into()));
        }
        if self.n <= self.degree {
            return Err(Error::Aliasing {
                n: self.n,
                degree: self.degree,
            });
        }
        if self.n < 4 || !self.n.is_power_of_two() {
            return Err(Error::GridSize(self.n));
        }
        if self.restarts == 0 || self.max_iters == 0 {
            return Err(Error::Config(
                "restarts and max_iters must be positive".into(),
            ));
        }
        if self.tol.is_nan() || self.tol <= 0.0 {
            return Err(Error::Config("tol must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub best: RatioReport<f64>,
    pub coeffs: TaylorCoeffs<f64>,
    /// Simplex iterations summed over every restart.
    pub iterations: usize,
    /// Whether the winning restart met the diameter tolerance.
    pub converged: bool,
    /// Index of the winning start (warm starts first).
    pub restart: usize,
    /// `(global iteration, running best ratio)` at every improvement.
    pub history: Vec<(usize, f64)>,
}

/// Degree-`d` truncation of `((√3 + z)/(√3 − z))² = 1 + Σ 4k 3^{−k/2} z^k`.
pub fn extremal_truncation(degree: usize) -> TaylorCoeffs<f64> {
    let lambda = 3f64.powf(-0.5);
    let coeffs = (0..=degree)
        .map(|k| {
            if k == 0 {
                Complex::new(1.0, 0.0)
            } else {
                Complex::new(4.0 * k as f64 * lambda.powi(k as i32), 0.0)
            }
        })
        .collect();
    TaylorCoeffs::new(coeffs)
}

fn to_params(f: &TaylorCoeffs<f64>, degree: usize) -> Vec<f64> {
    let a0 = f.constant_term();
    let scale = if a0.norm() > 0.0 {
        a0.inv()
    } else {
        Complex::new(1.0, 0.0)
    };
    let f = f.padded(degree).truncated(degree).scale(scale);
    f.coeffs()[1..].iter().flat_map(|a| [a.re, a.im]).collect()
}

fn from_params(x: &[f64]) -> TaylorCoeffs<f64> {
    let mut coeffs = Vec::with_capacity(x.len() / 2 + 1);
    coeffs.push(Complex::new(1.0, 0.0));
    coeffs.extend(x.chunks_exact(2).map(|c| Complex::new(c[0], c[1])));
    TaylorCoeffs::new(coeffs)
}

struct Objective {
    transform: GridTransform<f64>,
    p: PExponent<f64>,
}

impl Objective {
    fn report(&self, x: &[f64]) -> Result<RatioReport<f64>> {
        ratio_of_grid(&self.transform.to_grid(&from_params(x))?, self.p)
    }

    /// Minimized quantity: `−ratio`, with non-finite values pushed to `+∞`.
    fn cost(&self, x: &[f64]) -> Result<f64> {
        let r = self.report(x)?.ratio;
        Ok(if r.is_finite() { -r } else { f64::INFINITY })
    }
}

struct RestartOutcome {
    x: Vec<f64>,
    iterations: usize,
    converged: bool,
    trace: Vec<(usize, f64)>,
}

fn nelder_mead(
    objective: &Objective,
    x0: Vec<f64>,
    max_iters: usize,
    tol: f64,
) -> Result<RestartOutcome> {
    let dim = x0.len();
    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
    let c0 = objective.cost(&x0)?;
    simplex.push((x0.clone(), c0));
    for i in 0..dim {
        let mut x = x0.clone();
        x[i] += INITIAL_STEP;
        let c = objective.cost(&x)?;
        simplex.push((x, c));
    }
    let sort = |s: &mut Vec<(Vec<f64>, f64)>| s.sort_by(|a, b| a.1.total_cmp(&b.1));
    sort(&mut simplex);

    let mut trace = vec![(0, -simplex[0].1)];
    let mut best_cost = simplex[0].1;
    let mut converged = false;
    let mut iterations = 0;

    let lerp = |from: &[f64], to: &[f64], t: f64| -> Vec<f64> {
        from.iter().zip(to).map(|(a, b)| a + t * (b - a)).collect()
    };

    while iterations < max_iters {
        let diameter = simplex[1..]
            .iter()
            .map(|(x, _)| {
                x.iter()
                    .zip(&simplex[0].0)
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0, f64::max);
        if diameter < tol {
            converged = true;
            break;
        }
        iterations += 1;

        let worst = dim;
        let mut centroid = vec![0.0; dim];
        for (x, _) in &simplex[..worst] {
            for (c, v) in centroid.iter_mut().zip(x) {
                *c += v;
            }
        }
        for c in &mut centroid {
            *c /= dim as f64;
        }
        let (xw, fw) = simplex[worst].clone();
        let fb = simplex[0].1;
        let fs = simplex[worst - 1].1;

        let xr = lerp(&centroid, &xw, -REFLECT);
        let fr = objective.cost(&xr)?;

        let mut shrink = false;
        if fr < fb {
            let xe = lerp(&centroid, &xr, EXPAND);
            let fe = objective.cost(&xe)?;
            simplex[worst] = if fe < fr { (xe, fe) } else { (xr, fr) };
        } else if fr < fs {
            simplex[worst] = (xr, fr);
        } else if fr < fw {
            let xc = lerp(&centroid, &xr, CONTRACT);
            let fc = objective.cost(&xc)?;
            if fc <= fr {
                simplex[worst] = (xc, fc);
            } else {
                shrink = true;
            }
        } else {
            let xc = lerp(&centroid, &xw, CONTRACT);
            let fc = objective.cost(&xc)?;
            if fc < fw {
                simplex[worst] = (xc, fc);
            } else {
                shrink = true;
            }
        }
        if shrink {
            let xb = simplex[0].0.clone();
            for vertex in simplex.iter_mut().skip(1) {
                let x = lerp(&xb, &vertex.0, SHRINK);
                let c = objective.cost(&x)?;
                *vertex = (x, c);
            }
        }
        sort(&mut simplex);
        if simplex[0].1 < best_cost {
            best_cost = simplex[0].1;
            trace.push((iterations, -best_cost));
        }
    }

    Ok(RestartOutcome {
        x: simplex.swap_remove(0).0,
        iterations,
        converged,
        trace,
    })
}

fn restart_start(cfg: &SearchConfig, index: usize) -> Vec<f64> {
    let mut x = to_params(&extremal_truncation(cfg.degree), cfg.degree);
    if index > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(index as u64);
        let noise = Normal::new(0.0, PERTURBATION_SIGMA).expect("positive sigma");
        for v in &mut x {
            *v += noise.sample(&mut rng);
        }
    }
    x
}

pub fn maximize_ratio(cfg: &SearchConfig) -> Result<SearchResult> {
    maximize_ratio_from(cfg, &[])
}

/// As [`maximize_ratio`], with extra starting points run ahead of the standard
/// restarts. Starts are rescaled to `a_0 = 1` and zero-padded or truncated to
/// the configured degree.
pub fn maximize_ratio_from(
    cfg: &SearchConfig,
    warm_starts: &[TaylorCoeffs<f64>],
) -> Result<SearchResult> {
    cfg.validate()?;
    let objective = Objective {
        transform: GridTransform::new(cfg.n)?,
        p: cfg.p,
    };
    let starts: Vec<Vec<f64>> = warm_starts
        .iter()
        .map(|f| to_params(f, cfg.degree))
        .chain((0..cfg.restarts).map(|i| restart_start(cfg, i)))
        .collect();

    let outcomes = starts
        .into_par_iter()
        .map(|x0| nelder_mead(&objective, x0, cfg.max_iters, cfg.tol))
        .collect::<Result<Vec<_>>>()?;

    let mut history: Vec<(usize, f64)> = Vec::new();
    let mut winner = 0;
    let mut offset = 0;
    for (index, outcome) in outcomes.iter().enumerate() {
        for &(iter, value) in &outcome.trace {
            if history.last().is_none_or(|&(_, best)| value > best) {
                history.push((offset + iter, value));
                winner = index;
            }
        }
        offset += outcome.iterations;
    }

    let win = &outcomes[winner];
    let coeffs = from_params(&win.x);
    let best = objective.report(&win.x)?;
    debug_assert_eq!(Some(best.ratio), history.last().map(|h| h.1));
    Ok(SearchResult {
        best,
        coeffs,
        iterations: offset,
        converged: win.converged,
        restart: winner,
        history,
    })
}

/// Searches each degree in turn, warm-starting from the previous best.
pub fn degree_ladder(degrees: &[usize], template: &SearchConfig) -> Result<Vec<SearchResult>> {
    let mut results: Vec<SearchResult> = Vec::with_capacity(degrees.len());
    for &degree in degrees {
        let cfg = SearchConfig {
            degree,
            ..*template
        };
        let warm: Vec<TaylorCoeffs<f64>> = results
            .last()
            .map(|r| r.coeffs.clone())
            .into_iter()
            .collect();
        results.push(maximize_ratio_from(&cfg, &warm)?);
    }
    Ok(results)
}

#[derive(Clone, Debug, PartialEq)]
pub struct PSweepRow {
    pub p: PExponent<f64>,
    pub result: SearchResult,
    pub riesz_thorin: f64,
}

pub fn p_sweep(p_values: &[PExponent<f64>], template: &SearchConfig) -> Result<Vec<PSweepRow>> {
    p_values
        .iter()
        .map(|&p| {
            let result = maximize_ratio(&SearchConfig { p, ..*template })?;
            Ok(PSweepRow {
                p,
                result,
                riesz_thorin: reference_bound(p, BoundKind::RieszThorin)?,
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LambdaRow {
    pub lambda: f64,
    pub measured_x: f64,
    pub formula_x: f64,
    pub ratio: f64,
}

pub fn lambda_sweep(
    lambdas: &[f64],
    inner: &BlaschkeSpec<f64>,
    n: usize,
) -> Result<Vec<LambdaRow>> {
    lambdas
        .iter()
        .map(|&lambda| {
            let spec = ExtremalSpec::new(lambda, inner.clone(), Complex::new(1.0, 0.0))?;
            let report = verify_extremal(&spec, n)?;
            Ok(LambdaRow {
                lambda,
                measured_x: report.x,
                formula_x: x_of_lambda(lambda),
                ratio: report.ratio,
            })
        })
        .collect()
}
