use std::process::ExitCode;

use clap::Parser;
use fibcf::{Cli, RunConfig};

const USAGE: u8 = 1;
const UNDECIDED: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // --help and --version are not errors.
            return if e.use_stderr() {
                ExitCode::from(USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let cfg = match RunConfig::try_from(cli) {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(USAGE);
        }
    };
    match fibcf::run(&cfg) {
        Ok(report) if report.undecided > 0 => {
            eprintln!("{} row(s) undecided at the resource limit", report.undecided);
            ExitCode::from(UNDECIDED)
        }
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<fibcf_core::Error>() {
                Some(fibcf_core::Error::Undecidable { .. } | fibcf_core::Error::UndecidedRow { .. }) => {
                    ExitCode::from(UNDECIDED)
                }
                _ => ExitCode::from(USAGE),
            }
        }
    }
}
