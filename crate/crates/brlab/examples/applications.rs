//! Application demos: Schrödinger and spherical maximal means, the g-function bound,
//! and annular pieces of the maximal Bochner–Riesz operator.

use brlab::experiments::{run, Command};

fn main() -> brlab::Result<()> {
    for app in ["schrodinger", "spherical", "gfunction", "maximal-br"] {
        let cfg = Command::AppDemo.parse_config(&format!("app = {app}\n"))?;
        let out = run(Command::AppDemo, &cfg)?;
        println!("{app}: passed {}, {}", out.passed, out.summary);
    }
    Ok(())
}
