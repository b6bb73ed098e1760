//! Command-line front end: parses a [`RunConfig`], runs one experiment and
//! writes its table as CSV or JSON Lines.
//!
//! Output depends only on the configuration. The thread count changes wall
//! time and nothing else.

pub mod commands;
pub mod config;
pub mod pool;
pub mod table;

use std::io::Write;

use anyhow::Context;

pub use config::{Cli, Command, Kind, RunConfig};
pub use table::Format;

/// What a run produced.
pub struct Report {
    pub text: String,
    pub undecided: usize,
}

/// Runs the configured experiment and returns the rendered table.
pub fn execute(cfg: &RunConfig) -> anyhow::Result<Report> {
    let pool = pool::Pool::new(cfg.threads)?;
    let out = match cfg.command {
        Command::Construct => commands::construct(cfg)?,
        Command::Verify => commands::verify(cfg, &pool)?,
        Command::Cube => commands::cube(cfg, &pool)?,
        Command::Simul => commands::simul(cfg, &pool)?,
        Command::Algsearch => commands::algsearch(cfg, &pool)?,
    };
    Ok(Report {
        text: out.table.render(cfg.format),
        undecided: out.undecided,
    })
}

/// Runs the experiment and writes the table to `--out` or standard output.
pub fn run(cfg: &RunConfig) -> anyhow::Result<Report> {
    let report = execute(cfg)?;
    match &cfg.out {
        Some(path) => std::fs::write(path, &report.text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(report.text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(report)
}
