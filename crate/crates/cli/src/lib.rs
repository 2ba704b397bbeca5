//! Command-line front end for `backshift-core`: argument parsing, the function
//! spec mini-language, config defaults, run manifests and the subcommands.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod fnspec;
pub mod manifest;

use std::io::Write;

use args::{Cli, Command};
use config::Settings;
use error::CliResult;

/// Runs one parsed invocation against the given streams.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<()> {
    let settings = Settings::resolve(cli.config.as_deref())?;
    match &cli.command {
        Command::VerifyConstant(a) => commands::verify_constant(a, &settings, stdout),
        Command::LemmaCheck(a) => commands::lemma_check(a, &settings, stdout, stderr),
        Command::Optimize(a) => commands::optimize(a, &settings, stdout),
        Command::Sweep(a) => commands::sweep(a, &settings, stdout),
        Command::Factor(a) => commands::factor(a, &settings, stdout),
    }
}
