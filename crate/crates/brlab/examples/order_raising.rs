//! Raising the order of a Bochner–Riesz symbol by averaging over scales, at the
//! symbol level and on fields.

use brlab::experiments::identity::{scale_mix, Params};
use brlab::experiments::Command;
use brlab::identities::order_raise_check;

fn main() -> brlab::Result<()> {
    let us: Vec<f64> = (0..=20).map(|i| i as f64 / 20.0).collect();
    let rep = order_raise_check(2.0, 1.0, &us, 1e-6)?;
    println!("(1−u)² from order 1: max rel err {:.3e}; {}", rep.max_rel_err, rep.note);
    let params = Params::from_config(&Command::IdentitySuite.defaults())?;
    let mix = scale_mix(&params)?;
    println!("field level: max rel err {:.3e}; {}", mix.max_rel_err, mix.note);
    Ok(())
}
