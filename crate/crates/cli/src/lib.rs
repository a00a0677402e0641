//! Command-line front end for the `ellrot` library.

pub mod args;
pub mod commands;
pub mod config;
pub mod docs;
pub mod error;
pub mod numbers;

use std::fs;

pub use config::JobConfig;
pub use error::CliError;

/// Parses, runs and writes one invocation; returns the process exit code.
pub fn main_with(cli: args::Cli) -> i32 {
    match execute(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.name());
            e.exit_code()
        }
    }
}

fn execute(cli: args::Cli) -> Result<(), CliError> {
    let cfg = JobConfig::from_cli(cli)?;
    let output = commands::run(&cfg)?;
    match &cfg.out {
        Some(path) => fs::write(path, output).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            print!("{output}");
            Ok(())
        }
    }
}
