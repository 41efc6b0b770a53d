//! Running any command from configuration text and writing its CSV.

use brlab::experiments::{run, Command};

fn main() -> brlab::Result<()> {
    let text = "# square function of a modulated bump\nalpha = 0.5\nfamily = modulated\nN = 64\n";
    let cfg = Command::SquareFunction.parse_config(text)?;
    println!("canonical config:\n{}hash {}", cfg.canonical(), cfg.hash());
    let out = run(Command::SquareFunction, &cfg)?;
    let csv = out.csv();
    for line in csv.lines().take(4) {
        println!("{line}");
    }
    println!("...\n{}", csv.lines().last().unwrap_or_default());
    match Command::SquareFunction.parse_config("alpha = 1\nwidth = 3\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
