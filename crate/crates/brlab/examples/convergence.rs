//! Bochner–Riesz means as R → ∞ and Schrödinger means as s → 0 converge to f·g.

use brlab::experiments::{run, Command};

fn main() -> brlab::Result<()> {
    for mode in ["bochner-riesz", "schrodinger"] {
        let cfg = Command::Convergence.parse_config(&format!("mode = {mode}\n"))?;
        let out = run(Command::Convergence, &cfg)?;
        println!("{mode}: {}", out.summary);
        for row in out.table.rows() {
            println!("  {}  {}", row[0], row[1]);
        }
    }
    Ok(())
}
