use std::fs::File;
use std::io::Write;
use std::path::Path;

use backshift_core::optimizer::{lambda_sweep, maximize_ratio, p_sweep};
use backshift_core::random::{gaussian_polynomial, with_nonnegative_constant};
use backshift_core::{
    bound_curve, inner_modulus_check, lemma_gap, mean_value, reference_bound, verify_extremal,
    BoundKind, BoundaryGrid, DiscPoint, Exponent, ExtremalSpec, Grid, OuterFactor, PExponent,
    Report, SearchConfig, SearchResult, SHARP_H1,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::args::{
    FactorArgs, LemmaArgs, OptimizeArgs, SearchFlags, SweepArgs, SweepMode, VerifyArgs,
};
use crate::config::Settings;
use crate::error::{CliError, CliResult};
use crate::fnspec::{parse, parse_complex, parse_inner, parse_real};
use crate::manifest::{manifest_path, RunManifest};

/// Slack below zero tolerated in the square-root inequality.
pub const LEMMA_SLACK: f64 = 1e-8;
/// Slack above `2/√3` tolerated for any ratio reported at `p = 1`.
pub const SOUNDNESS_SLACK: f64 = 1e-6;
/// Allowed `||I| − 1|` on the factorization check circle.
pub const INNER_MODULUS_TOL: f64 = 1e-4;
pub const CHECK_RADIUS: f64 = 0.999;
/// Smallest grid resolving `CHECK_RADIUS` (ten grid spacings from the circle).
pub const CHECK_GRID: usize = 1 << 16;
pub const X_TOL: f64 = 1e-7;
pub const H2_TOL: f64 = 1e-8;

/// Seventeen significant digits, locale independent.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_complex(z: backshift_core::C64) -> String {
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{}{sign}{}i", fmt17(z.re + 0.0), fmt17(z.im.abs()))
}

fn csv_writer<'a>(
    out: Option<&Path>,
    stdout: &'a mut dyn Write,
) -> CliResult<csv::Writer<Box<dyn Write + 'a>>> {
    let sink: Box<dyn Write + 'a> = match out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(stdout),
    };
    Ok(csv::WriterBuilder::new().from_writer(sink))
}

#[derive(Serialize)]
struct ReportJson {
    p: String,
    n: usize,
    norm_f: f64,
    norm_bf: f64,
    f0: [f64; 2],
    ratio: f64,
    x: f64,
}

impl From<&Report> for ReportJson {
    fn from(r: &Report) -> Self {
        Self {
            p: r.p.to_string(),
            n: r.n,
            norm_f: r.norm_f,
            norm_bf: r.norm_bf,
            f0: [r.f0.re, r.f0.im],
            ratio: r.ratio,
            x: r.x,
        }
    }
}

pub fn verify_constant(
    args: &VerifyArgs,
    settings: &Settings,
    stdout: &mut dyn Write,
) -> CliResult<()> {
    let inner_src = args.inner.clone().unwrap_or_else(|| "z".to_string());
    let n = args.n.unwrap_or(settings.n);
    let tol = args.tol.unwrap_or(settings.tol);
    let inner = parse_inner(&inner_src)?;
    let spec = ExtremalSpec::sharp(inner)?;
    let report = verify_extremal(&spec, n)?;
    let delta = (report.ratio - SHARP_H1).abs();
    let pass = delta <= tol;

    writeln!(stdout, "inner   {inner_src}")?;
    writeln!(stdout, "n       {n}")?;
    writeln!(stdout, "ratio   {}", fmt17(report.ratio))?;
    writeln!(stdout, "target  {}", fmt17(SHARP_H1))?;
    writeln!(stdout, "delta   {}", fmt17(delta))?;
    writeln!(stdout, "x       {}", fmt17(report.x))?;
    writeln!(stdout, "tol     {}", fmt17(tol))?;
    writeln!(stdout, "status  {}", if pass { "PASS" } else { "FAIL" })?;

    if let Some(path) = &args.out {
        #[derive(Serialize)]
        struct Out {
            inner: String,
            report: ReportJson,
            target: f64,
            delta: f64,
            tol: f64,
            pass: bool,
        }
        let body = Out {
            inner: inner_src.clone(),
            report: (&report).into(),
            target: SHARP_H1,
            delta,
            tol,
            pass,
        };
        std::fs::write(path, serde_json::to_string_pretty(&body)? + "\n")?;
        RunManifest::new("verify-constant", n, None)
            .param("inner", &inner_src)
            .param("n", n)
            .param("tol", fmt17(tol))
            .write(&manifest_path(path))?;
    }

    if pass {
        Ok(())
    } else {
        Err(CliError::Check(format!(
            "|ratio − 2/√3| = {delta:e} exceeds {tol:e}"
        )))
    }
}

/// One row of `lemma-check` output.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LemmaRow {
    pub trial: usize,
    pub f0: f64,
    pub gap: f64,
}

/// Rotates the grid so its mean is real and nonnegative, then measures the gap.
pub fn lemma_row(trial: usize, grid: &Grid) -> CliResult<LemmaRow> {
    let mean = mean_value(grid);
    let grid = if mean.norm() > 0.0 {
        grid.scale(mean.conj() / mean.norm())
    } else {
        grid.clone()
    };
    let f0 = mean.norm();
    Ok(LemmaRow {
        trial,
        f0,
        gap: lemma_gap(&grid, f0)?,
    })
}

pub fn lemma_check(
    args: &LemmaArgs,
    settings: &Settings,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> CliResult<()> {
    let trials = args.trials.unwrap_or(settings.trials);
    let degree = args.degree.unwrap_or(settings.lemma_degree);
    let seed = args.seed.unwrap_or(settings.seed);
    let n = args.n.unwrap_or(settings.n);
    if trials == 0 || degree == 0 {
        return Err(CliError::Usage(
            "--trials and --degree must be positive".into(),
        ));
    }
    let injected = args
        .inject
        .iter()
        .map(|src| parse(src))
        .collect::<Result<Vec<_>, _>>()?;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(trials + injected.len());
    for trial in 0..trials {
        let f = with_nonnegative_constant(&gaussian_polynomial(&mut rng, degree));
        rows.push(lemma_row(trial, &f.to_grid(n)?)?);
    }
    for (k, f) in injected.iter().enumerate() {
        rows.push(lemma_row(trials + k, &BoundaryGrid::sample(f, n)?)?);
    }

    {
        let mut w = csv_writer(args.out.as_deref(), stdout)?;
        w.write_record(["trial", "f0", "gap"])?;
        for r in &rows {
            w.write_record([r.trial.to_string(), fmt17(r.f0), fmt17(r.gap)])?;
        }
        w.flush()?;
    }
    if let Some(path) = &args.out {
        RunManifest::new("lemma-check", n, Some(seed))
            .param("trials", trials)
            .param("degree", degree)
            .param("seed", seed)
            .param("n", n)
            .param("inject", args.inject.join(" | "))
            .write(&manifest_path(path))?;
    }

    let violations: Vec<&LemmaRow> = rows
        .iter()
        .filter(|r| r.gap.is_nan() || r.gap < -LEMMA_SLACK)
        .collect();
    let min_gap = rows.iter().map(|r| r.gap).fold(f64::INFINITY, f64::min);
    writeln!(
        stderr,
        "rows {} min_gap {} violations {}",
        rows.len(),
        fmt17(min_gap),
        violations.len()
    )?;
    if violations.is_empty() {
        Ok(())
    } else {
        Err(CliError::Check(format!(
            "{} trial(s) with gap below −{LEMMA_SLACK:e}, first at trial {}",
            violations.len(),
            violations[0].trial
        )))
    }
}

fn parse_exponent(src: &str) -> CliResult<Exponent> {
    src.parse::<Exponent>()
        .map_err(|_| CliError::Usage(format!("invalid exponent '{src}': need p ≥ 1 or inf")))
}

fn search_config(p: Exponent, flags: &SearchFlags, settings: &Settings) -> CliResult<SearchConfig> {
    let cfg = SearchConfig {
        degree: flags.degree.unwrap_or(settings.degree),
        p,
        n: flags.n.unwrap_or(settings.n),
        restarts: flags.restarts.unwrap_or(settings.restarts),
        max_iters: flags.iters.unwrap_or(settings.iters),
        tol: flags.tol.unwrap_or(settings.simplex_tol),
        seed: flags.seed.unwrap_or(settings.seed),
    };
    cfg.validate()?;
    Ok(cfg)
}

#[derive(Serialize)]
struct SearchJson {
    p: String,
    degree: usize,
    n: usize,
    restarts: usize,
    max_iters: usize,
    tol: f64,
    seed: u64,
    best: ReportJson,
    coeffs: Vec<[f64; 2]>,
    iterations: usize,
    converged: bool,
    restart: usize,
    history: Vec<(usize, f64)>,
}

fn search_json(cfg: &SearchConfig, r: &SearchResult) -> SearchJson {
    SearchJson {
        p: cfg.p.to_string(),
        degree: cfg.degree,
        n: cfg.n,
        restarts: cfg.restarts,
        max_iters: cfg.max_iters,
        tol: cfg.tol,
        seed: cfg.seed,
        best: (&r.best).into(),
        coeffs: r.coeffs.coeffs().iter().map(|c| [c.re, c.im]).collect(),
        iterations: r.iterations,
        converged: r.converged,
        restart: r.restart,
        history: r.history.clone(),
    }
}

/// Bounds on `‖B‖_p` that apply at this exponent.
pub fn applicable_bounds(p: Exponent) -> Vec<(BoundKind, f64)> {
    [
        BoundKind::SharpH1,
        BoundKind::FergusonH1,
        BoundKind::H2,
        BoundKind::HInf,
        BoundKind::RieszThorin,
        BoundKind::Trivial,
    ]
    .into_iter()
    .filter_map(|k| reference_bound(p, k).ok().map(|v| (k, v)))
    .collect()
}

pub fn optimize(args: &OptimizeArgs, settings: &Settings, stdout: &mut dyn Write) -> CliResult<()> {
    let p = parse_exponent(args.p.as_deref().unwrap_or("1"))?;
    let cfg = search_config(p, &args.search, settings)?;
    let result = maximize_ratio(&cfg)?;

    writeln!(stdout, "p           {}", cfg.p)?;
    writeln!(stdout, "degree      {}", cfg.degree)?;
    writeln!(stdout, "best_ratio  {}", fmt17(result.best.ratio))?;
    writeln!(stdout, "x           {}", fmt17(result.best.x))?;
    writeln!(stdout, "converged   {}", result.converged)?;
    writeln!(stdout, "iterations  {}", result.iterations)?;
    for (kind, value) in applicable_bounds(cfg.p) {
        writeln!(stdout, "bound       {} {}", kind.name(), fmt17(value))?;
    }

    if let Some(dir) = &args.out {
        std::fs::create_dir_all(dir)?;
        let json = serde_json::to_string_pretty(&search_json(&cfg, &result))? + "\n";
        std::fs::write(dir.join("result.json"), json)?;
        let mut w = csv::Writer::from_path(dir.join("history.csv"))?;
        w.write_record(["iteration", "ratio"])?;
        for (iter, value) in &result.history {
            w.write_record([iter.to_string(), fmt17(*value)])?;
        }
        w.flush()?;
        RunManifest::new("optimize", cfg.n, Some(cfg.seed))
            .param("p", cfg.p)
            .param("degree", cfg.degree)
            .param("n", cfg.n)
            .param("restarts", cfg.restarts)
            .param("iters", cfg.max_iters)
            .param("seed", cfg.seed)
            .param("tol", fmt17(cfg.tol))
            .write(&dir.join("manifest.json"))?;
    }

    if cfg.p.is_one() && result.best.ratio > SHARP_H1 + SOUNDNESS_SLACK {
        return Err(CliError::Check(format!(
            "ratio {} exceeds 2/√3 at p = 1",
            fmt17(result.best.ratio)
        )));
    }
    Ok(())
}

fn split_values(values: &str) -> impl Iterator<Item = &str> {
    values.split(',').map(str::trim).filter(|s| !s.is_empty())
}

pub fn sweep(args: &SweepArgs, settings: &Settings, stdout: &mut dyn Write) -> CliResult<()> {
    let n = args.search.n.unwrap_or(settings.n);
    let mut failures = Vec::new();
    let manifest;
    {
        let mut w = csv_writer(args.out.as_deref(), stdout)?;
        match args.mode {
            SweepMode::Lambda => {
                let lambdas = split_values(&args.values)
                    .map(parse_real)
                    .collect::<Result<Vec<_>, _>>()?;
                if lambdas.is_empty() {
                    return Err(CliError::Usage("--values is empty".into()));
                }
                if let Some(bad) = lambdas.iter().find(|l| !(**l > 0.0 && **l < 1.0)) {
                    return Err(CliError::Usage(format!("lambda {bad} is outside (0, 1)")));
                }
                let inner_src = args.inner.clone().unwrap_or_else(|| "z".to_string());
                let inner = parse_inner(&inner_src)?;
                let rows = lambda_sweep(&lambdas, &inner, n)?;
                w.write_record(["lambda", "measured_x", "formula_x", "ratio"])?;
                for row in &rows {
                    w.write_record([
                        fmt17(row.lambda),
                        fmt17(row.measured_x),
                        fmt17(row.formula_x),
                        fmt17(row.ratio),
                    ])?;
                    let cap = bound_curve(row.formula_x)?.value;
                    if (row.measured_x - row.formula_x).abs() > X_TOL {
                        failures.push(format!(
                            "lambda {}: x off by more than {X_TOL:e}",
                            row.lambda
                        ));
                    }
                    if row.ratio > cap + SOUNDNESS_SLACK || row.ratio > SHARP_H1 + SOUNDNESS_SLACK {
                        failures.push(format!(
                            "lambda {}: ratio above the bound curve",
                            row.lambda
                        ));
                    }
                }
                manifest = RunManifest::new("sweep", n, None)
                    .param("mode", "lambda")
                    .param("inner", inner_src);
            }
            SweepMode::P => {
                let ps = split_values(&args.values)
                    .map(parse_exponent)
                    .collect::<CliResult<Vec<_>>>()?;
                if ps.is_empty() {
                    return Err(CliError::Usage("--values is empty".into()));
                }
                let template = search_config(PExponent::one(), &args.search, settings)?;
                let rows = p_sweep(&ps, &template)?;
                w.write_record(["p", "best_ratio", "riesz_thorin"])?;
                for row in &rows {
                    let ratio = row.result.best.ratio;
                    w.write_record([row.p.to_string(), fmt17(ratio), fmt17(row.riesz_thorin)])?;
                    if ratio > row.riesz_thorin + SOUNDNESS_SLACK {
                        failures.push(format!("p {}: ratio above Riesz–Thorin bound", row.p));
                    }
                    if ratio < 1.0 - H2_TOL {
                        failures.push(format!("p {}: ratio below the feasible value 1", row.p));
                    }
                    if row.p.is_one() && ratio > SHARP_H1 + SOUNDNESS_SLACK {
                        failures.push("p 1: ratio above 2/√3".to_string());
                    }
                    if row.p.is_two() && ratio > 1.0 + H2_TOL {
                        failures.push("p 2: ratio above 1".to_string());
                    }
                }
                manifest = RunManifest::new("sweep", template.n, Some(template.seed))
                    .param("mode", "p")
                    .param("degree", template.degree)
                    .param("restarts", template.restarts)
                    .param("iters", template.max_iters)
                    .param("seed", template.seed)
                    .param("tol", fmt17(template.tol));
            }
        }
        w.flush()?;
    }
    if let Some(path) = &args.out {
        manifest
            .param("values", &args.values)
            .param("n", n)
            .write(&manifest_path(path))?;
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Check(failures.join("; ")))
    }
}

pub fn factor(args: &FactorArgs, settings: &Settings, stdout: &mut dyn Write) -> CliResult<()> {
    let f = parse(&args.function)?;
    let n = args.n.unwrap_or(settings.n);
    let points = split_values(args.points.as_deref().unwrap_or("0"))
        .map(|s| {
            let z = parse_complex(s)?;
            Ok(DiscPoint::interior(z)?)
        })
        .collect::<CliResult<Vec<_>>>()?;

    let factor = OuterFactor::new(&BoundaryGrid::sample(&f, n)?)?;
    writeln!(stdout, "fn      {}", args.function)?;
    writeln!(stdout, "n       {n}")?;
    for z in &points {
        let outer = factor.outer(*z)?;
        let inner = factor.inner(*z)?;
        writeln!(stdout, "z       {}", fmt_complex(z.z()))?;
        writeln!(stdout, "  F     {}", fmt_complex(outer))?;
        writeln!(stdout, "  I     {}", fmt_complex(inner))?;
    }

    let check_n = n.max(CHECK_GRID);
    let check = inner_modulus_check(&BoundaryGrid::sample(&f, check_n)?, CHECK_RADIUS)?;
    writeln!(stdout, "check_n           {check_n}")?;
    writeln!(stdout, "radius            {}", check.radius)?;
    writeln!(stdout, "max_dev_at_radius {}", fmt17(check.at_radius))?;
    writeln!(stdout, "max_dev_boundary  {}", fmt17(check.boundary))?;
    if check.boundary > INNER_MODULUS_TOL {
        return Err(CliError::Check(format!(
            "|I| deviates from 1 by {:e} on the boundary",
            check.boundary
        )));
    }
    Ok(())
}
