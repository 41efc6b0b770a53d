//! Empirical ratio ‖𝒢^α(f,g)‖_p / (‖f‖_{p1}‖g‖_{p2}) over seeded trials.

use brlab::experiments::{run, Command};

fn main() -> brlab::Result<()> {
    for text in ["alpha = 1\np1 = 2\np2 = 2\ntrials = 20\n", "family = pure-mode\nalpha = 1\ntrials = 5\n", "alpha = 0.5\np1 = 4/3\np2 = 4\nfamily = modulated\n"] {
        let out = run(Command::NormEstimate, &Command::NormEstimate.parse_config(text)?)?;
        println!("{}: {}", text.replace('\n', " "), out.summary);
    }
    Ok(())
}
