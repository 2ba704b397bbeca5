//! Defaults for every subcommand, optionally overridden by a TOML file.
//! Command-line flags take precedence over both.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{CliError, CliResult};

/// Environment variable naming a config file when `--config` is absent.
pub const CONFIG_ENV: &str = "BACKSHIFT_CONFIG";

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Settings {
    /// Grid size for norm computations.
    pub n: usize,
    /// Tolerance of `verify-constant`.
    pub tol: f64,
    pub restarts: usize,
    pub iters: usize,
    pub seed: u64,
    /// Search degree for `optimize` and `sweep --mode p`.
    pub degree: usize,
    /// Simplex diameter at which a restart stops.
    pub simplex_tol: f64,
    pub trials: usize,
    pub lemma_degree: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Self {
            n: 4096,
            tol: 1e-8,
            restarts: 16,
            iters: 2000,
            seed: 0,
            degree: 8,
            simplex_tol: 1e-10,
            trials: 1000,
            lemma_degree: 10,
        }
    }
}

impl Settings {
    pub fn from_toml(text: &str) -> CliResult<Self> {
        toml::from_str(text).map_err(|e| CliError::Usage(format!("config: {e}")))
    }

    pub fn from_file(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("config {}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    /// `--config`, else `$BACKSHIFT_CONFIG`, else built-in defaults.
    pub fn resolve(flag: Option<&Path>) -> CliResult<Self> {
        let path = flag
            .map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CONFIG_ENV).map(PathBuf::from));
        match path {
            Some(p) => Self::from_file(&p),
            None => Ok(Self::default()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_file_keeps_other_defaults() {
        let s = Settings::from_toml("n = 1024\nseed = 9\n").unwrap();
        assert_eq!(s.n, 1024);
        assert_eq!(s.seed, 9);
        assert_eq!(s.tol, 1e-8);
        assert_eq!(s.restarts, 16);
    }

    #[test]
    fn unknown_keys_are_rejected() {
        assert!(matches!(
            Settings::from_toml("grid = 3"),
            Err(CliError::Usage(_))
        ));
    }
}
