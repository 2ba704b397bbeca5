use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "backshift",
    version,
    about = "Numerical checks and searches for the backward shift on Hardy spaces"
)]
pub struct Cli {
    /// TOML file overriding built-in defaults (also read from $BACKSHIFT_CONFIG).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that ((√3+I)/(√3−I))² attains ‖Bf‖₁/‖f‖₁ = 2/√3.
    VerifyConstant(VerifyArgs),
    /// Check Re ∫ f^{1/2} ≥ √f(0) on random polynomials.
    LemmaCheck(LemmaArgs),
    /// Search coefficient space for large ‖Bf‖_p/‖f‖_p.
    Optimize(OptimizeArgs),
    /// Sweep the extremal parameter λ or the exponent p.
    Sweep(SweepArgs),
    /// Inner–outer factorization of a function given in text form.
    Factor(FactorArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct VerifyArgs {
    /// Inner function with I(0) = 0: z, z^k or blaschke(m; a1,m1; ...).
    #[arg(long)]
    pub inner: Option<String>,
    /// Grid size (power of two).
    #[arg(long)]
    pub n: Option<usize>,
    /// Allowed |ratio − 2/√3|.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Write the report as JSON here, with a manifest alongside.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct LemmaArgs {
    #[arg(long)]
    pub trials: Option<usize>,
    /// Degree of the random polynomials.
    #[arg(long)]
    pub degree: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Extra function to test after the random trials (repeatable).
    #[arg(long, allow_hyphen_values = true)]
    pub inject: Vec<String>,
    /// CSV destination; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Search settings shared by `optimize` and `sweep --mode p`.
#[derive(Debug, Clone, Default, Args)]
pub struct SearchFlags {
    /// Polynomial degree searched over.
    #[arg(long)]
    pub degree: Option<usize>,
    /// Grid size (power of two).
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub restarts: Option<usize>,
    /// Simplex iterations per restart.
    #[arg(long)]
    pub iters: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Simplex diameter at which a restart stops.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Default, Args)]
pub struct OptimizeArgs {
    /// Exponent p ≥ 1, or "inf".
    #[arg(long)]
    pub p: Option<String>,
    #[command(flatten)]
    pub search: SearchFlags,
    /// Directory for result.json, history.csv and manifest.json.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepMode {
    Lambda,
    P,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub mode: SweepMode,
    /// Comma separated λ values (or "ext") or exponents (or "inf").
    #[arg(long, allow_hyphen_values = true)]
    pub values: String,
    /// CSV destination; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Lambda mode: inner function of the family.
    #[arg(long)]
    pub inner: Option<String>,
    /// Lambda mode uses only --n; p mode uses all search flags.
    #[command(flatten)]
    pub search: SearchFlags,
}

#[derive(Debug, Clone, Args)]
pub struct FactorArgs {
    /// Function to factor, e.g. "z*(2-z)".
    #[arg(long = "fn", allow_hyphen_values = true)]
    pub function: String,
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma separated interior points, e.g. "0.2,0.5i,-0.3".
    #[arg(long, allow_hyphen_values = true)]
    pub points: Option<String>,
}
