//! Sampling a field on a periodic grid, transforming it, and measuring norms.

use std::f64::consts::PI;

use brlab::spectral::{forward_transform, inverse_transform, lp_norm, make_grid, Field};

fn main() -> brlab::Result<()> {
    let grid = make_grid(1, 256, 8.0)?;
    let f = Field::from_real(grid, |x| (-PI * x[0] * x[0]).exp());
    let spec = forward_transform(&f);
    // The Gaussian is its own transform: the coefficient at ξ = 0 is ∫ f = 1.
    println!("f̂(0) = {:.15}", spec.coeffs()[0].re);
    let back = inverse_transform(&spec);
    println!("round-trip error = {:.3e}", back.max_diff(&f)?);
    for p in [1.0, 2.0, f64::INFINITY] {
        println!("‖f‖_{p} = {:.12}", lp_norm(&f, p)?);
    }
    Ok(())
}
