//! Command-line flags and their validation.

use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use fibcf_core::construct::MAX_TRIPLE_INDEX;
use fibcf_core::dioph::{MAX_ALGEBRAIC_HEIGHT, MAX_RATIONAL_HEIGHT, MAX_SIMUL_BOUND};
use fibcf_core::verify::{MAX_CUBE_INDEX, MAX_TABLE_INDEX};
use fibcf_core::{Params, Rational};

use crate::table::Format;

/// Largest `--i-max` for `construct`; bigger triples are impractical to print.
pub const MAX_CONSTRUCT_INDEX: usize = 30;

const _: () = assert!(MAX_CONSTRUCT_INDEX <= MAX_TRIPLE_INDEX);

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Approximation triples x_i with their determinants.
    Construct,
    /// Growth and error table with fitted constants.
    Verify,
    /// Distance of X_i ξ³ to the nearest integer against X_i^-δ.
    Cube,
    /// Best simultaneous approximation of ξ and ξ² for each --X.
    Simul,
    /// Best approximations of bounded height --H.
    Algsearch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Rational,
    Quadratic,
    Cubic,
    All,
}

/// Experiments on the continued fractions ξ_{a,b} = [0; a, b, a, a, b, …].
#[derive(Debug, Parser)]
#[command(name = "fibcf", version)]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    #[arg(long)]
    pub a: u64,
    #[arg(long)]
    pub b: u64,
    #[arg(long = "i-max")]
    pub i_max: Option<usize>,
    /// Bound on the denominator; repeat for several rows.
    #[arg(long = "X")]
    pub x: Vec<u64>,
    /// Height bound.
    #[arg(long = "H")]
    pub h: Option<u64>,
    /// Exponent of the cube threshold, a decimal or fraction in (0, 1).
    #[arg(long)]
    pub delta: Option<String>,
    /// Target relative precision of every enclosure, in decimal digits.
    #[arg(long, default_value_t = 200, value_parser = clap::value_parser!(u32).range(1..=10_000))]
    pub precision_digits: u32,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=1024))]
    pub threads: u32,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Which families `algsearch` covers.
    #[arg(long, value_enum, default_value_t = Kind::All)]
    pub kind: Kind,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub params: Params,
    pub i_max: usize,
    pub x_list: Vec<u64>,
    pub h: u64,
    pub delta: Rational,
    pub precision_digits: u32,
    pub format: Format,
    pub threads: usize,
    pub out: Option<PathBuf>,
    pub kind: Kind,
}

impl RunConfig {
    /// Working precision in bits matching `precision_digits`.
    pub fn bits(&self) -> u64 {
        (u64::from(self.precision_digits) * 3322).div_ceil(1000)
    }
}

fn need<T>(v: Option<T>, flag: &str, command: Command) -> Result<T, String> {
    v.ok_or_else(|| format!("{command:?} requires {flag}").to_lowercase())
}

fn in_range(what: &str, v: u64, lo: u64, hi: u64) -> Result<u64, String> {
    if (lo..=hi).contains(&v) {
        Ok(v)
    } else {
        Err(format!("{what} = {v} must lie in [{lo}, {hi}]"))
    }
}

impl TryFrom<Cli> for RunConfig {
    type Error = String;

    fn try_from(cli: Cli) -> Result<Self, String> {
        let params = Params::new(cli.a, cli.b).map_err(|e| e.to_string())?;
        let cmd = cli.command;
        let mut cfg = RunConfig {
            command: cmd,
            params,
            i_max: 0,
            x_list: Vec::new(),
            h: 0,
            delta: Rational::zero(),
            precision_digits: cli.precision_digits,
            format: cli.format,
            threads: cli.threads as usize,
            out: cli.out,
            kind: cli.kind,
        };
        match cmd {
            Command::Construct | Command::Verify | Command::Cube => {
                let (lo, hi) = match cmd {
                    Command::Construct => (1, MAX_CONSTRUCT_INDEX),
                    Command::Verify => (2, MAX_TABLE_INDEX),
                    _ => (2, MAX_CUBE_INDEX),
                };
                let i = need(cli.i_max, "--i-max", cmd)?;
                cfg.i_max = in_range("--i-max", i as u64, lo as u64, hi as u64)? as usize;
            }
            Command::Simul => {
                if cli.x.is_empty() {
                    return Err("simul requires at least one --X".into());
                }
                for &x in &cli.x {
                    in_range("--X", x, 1, MAX_SIMUL_BOUND)?;
                }
                cfg.x_list = cli.x;
            }
            Command::Algsearch => {
                let h = need(cli.h, "--H", cmd)?;
                let max = match cli.kind {
                    Kind::Rational => MAX_RATIONAL_HEIGHT,
                    _ => MAX_ALGEBRAIC_HEIGHT,
                };
                cfg.h = in_range("--H", h, 1, max)?;
            }
        }
        if cmd == Command::Cube {
            let text = need(cli.delta, "--delta", cmd)?;
            let d: Rational = text
                .parse()
                .map_err(|_| format!("--delta: cannot parse {text:?}"))?;
            if !d.is_positive() || d >= Rational::one() {
                return Err(format!("--delta = {text} must lie strictly between 0 and 1"));
            }
            cfg.delta = d;
        }
        Ok(cfg)
    }
}
