//! Experiment runners behind the command-line front end. Each runner validates its
//! configuration before computing and returns a CSV table plus a pass flag.

pub mod apps;
pub mod config;
pub mod convergence;
pub mod csv;
pub mod families;
pub mod identity;
pub mod nec;
pub mod norm;
pub mod sparse_check;
pub mod square;

use std::str::FromStr;

pub use config::{Config, Schema};
pub use csv::CsvTable;

use crate::error::Result;
use crate::spectral::{make_grid, GridSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    IdentitySuite,
    SquareFunction,
    NormEstimate,
    NecProbe,
    Convergence,
    SparseCheck,
    AppDemo,
}

impl Command {
    pub const ALL: [Command; 7] = [
        Command::IdentitySuite,
        Command::SquareFunction,
        Command::NormEstimate,
        Command::NecProbe,
        Command::Convergence,
        Command::SparseCheck,
        Command::AppDemo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::IdentitySuite => "identity-suite",
            Command::SquareFunction => "square-function",
            Command::NormEstimate => "norm-estimate",
            Command::NecProbe => "nec-probe",
            Command::Convergence => "convergence",
            Command::SparseCheck => "sparse-check",
            Command::AppDemo => "app-demo",
        }
    }

    pub fn schema(self) -> Schema {
        match self {
            Command::IdentitySuite => identity::SCHEMA,
            Command::SquareFunction => square::SCHEMA,
            Command::NormEstimate => norm::SCHEMA,
            Command::NecProbe => nec::SCHEMA,
            Command::Convergence => convergence::SCHEMA,
            Command::SparseCheck => sparse_check::SCHEMA,
            Command::AppDemo => apps::SCHEMA,
        }
    }

    pub fn parse_config(self, text: &str) -> Result<Config> {
        Config::parse(self.name(), self.schema(), text)
    }

    pub fn defaults(self) -> Config {
        Config::defaults(self.name(), self.schema())
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Command::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| format!("unknown command `{s}`"))
    }
}

/// Result of one run: the CSV table and whether every check passed.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub table: CsvTable,
    pub passed: bool,
    /// One-line human summary.
    pub summary: String,
}

impl Outcome {
    pub fn csv(&self) -> String {
        self.table.render()
    }
}

/// Validates the configuration and runs the command.
pub fn run(cmd: Command, cfg: &Config) -> Result<Outcome> {
    let mut out = match cmd {
        Command::IdentitySuite => identity::run(&identity::Params::from_config(cfg)?)?,
        Command::SquareFunction => square::run(&square::Params::from_config(cfg)?)?,
        Command::NormEstimate => norm::run(&norm::Params::from_config(cfg)?)?,
        Command::NecProbe => nec::run(&nec::Params::from_config(cfg)?)?,
        Command::Convergence => convergence::run(&convergence::Params::from_config(cfg)?)?,
        Command::SparseCheck => sparse_check::run(&sparse_check::Params::from_config(cfg)?)?,
        Command::AppDemo => apps::run(&apps::Params::from_config(cfg)?)?,
    };
    out.table.meta("config_hash", cfg.hash());
    Ok(out)
}

/// Reads `n`, `N`, `L` from a config and validates them as a grid.
pub(crate) fn grid_from(cfg: &Config) -> Result<GridSpec> {
    let n: usize = cfg.get("n")?;
    let size: usize = cfg.get("N")?;
    let l: f64 = cfg.get("L")?;
    make_grid(n, size, l).map_err(|e| cfg.invalid("N", e.to_string()))
}

/// Least-squares slope of `ys` against `xs`.
pub fn fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

pub(crate) fn require(cfg: &Config, key: &str, ok: bool, msg: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(cfg.invalid(key, msg))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn command_names_round_trip() {
        for c in Command::ALL {
            assert_eq!(c.name().parse::<Command>().unwrap(), c);
            let d = c.defaults();
            assert_eq!(d.command(), c.name());
        }
        assert!("bogus".parse::<Command>().is_err());
    }

    #[test]
    fn slope() {
        let xs = [1.0, 2.0, 3.0];
        assert!((fit_slope(&xs, &[3.0, 5.0, 7.0]) - 2.0).abs() < 1e-14);
    }
}
