//! Command-line front end. Exit codes: 0 success, 1 check failure, 2 configuration error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use brlab::error::Error;
use brlab::experiments::{run, Command};

#[derive(Parser)]
#[command(name = "brlab", version, about = "Experiments on bilinear Bochner-Riesz means and square functions")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// `key = value` configuration file; missing keys take their defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Write the CSV here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Overrides the `seed` key of the configuration.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads; results do not depend on this.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand, Clone, Copy)]
enum Cmd {
    /// Exact identities: Stein-Weiss, order raising, subordination, majorization, partition.
    IdentitySuite,
    /// The square function field for one input pair.
    SquareFunction,
    /// Empirical operator-norm ratio over seeded trials.
    NormEstimate,
    /// Growth probes that separate bounded from unbounded regimes.
    NecProbe,
    /// Convergence of Bochner-Riesz or Schrodinger means to the product.
    Convergence,
    /// Sparse families and the empirical domination constant.
    SparseCheck,
    /// Application demos: schrodinger, spherical, gfunction, maximal-br.
    AppDemo,
}

impl Cmd {
    fn command(self) -> Command {
        match self {
            Cmd::IdentitySuite => Command::IdentitySuite,
            Cmd::SquareFunction => Command::SquareFunction,
            Cmd::NormEstimate => Command::NormEstimate,
            Cmd::NecProbe => Command::NecProbe,
            Cmd::Convergence => Command::Convergence,
            Cmd::SparseCheck => Command::SparseCheck,
            Cmd::AppDemo => Command::AppDemo,
        }
    }
}

fn config_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("config error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cmd = cli.command.command();
    let text = match &cli.config {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return config_error(format!("{}: {e}", path.display())),
        },
        None => String::new(),
    };
    let mut cfg = match cmd.parse_config(&text) {
        Ok(c) => c,
        Err(e) => return config_error(e),
    };
    if let Some(seed) = cli.seed {
        if let Err(e) = cfg.set("seed", &seed.to_string()) {
            return config_error(e);
        }
    }
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return config_error("--threads must be positive");
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            return config_error(e);
        }
    }
    let outcome = match run(cmd, &cfg) {
        Ok(o) => o,
        Err(e @ Error::Config { .. }) => return config_error(e),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let csv = outcome.csv();
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, csv) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{csv}"),
    }
    eprintln!("{}: {} ({})", cmd.name(), if outcome.passed { "ok" } else { "FAILED" }, outcome.summary);
    if outcome.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
