//! Stopping-time sparse families on three shifted dyadic lattices and the empirical
//! domination constant of 𝒢^α.

use std::f64::consts::PI;

use brlab::sparse::{kernel_regularity_check, oscillation_eta_values, verify_sparse_domination};
use brlab::spectral::{make_grid, Field};

fn main() -> brlab::Result<()> {
    for size in [128, 256, 512] {
        let grid = make_grid(1, size, 8.0)?;
        let f = Field::from_real(grid, |x| (-PI * (x[0] - 0.5).powi(2)).exp());
        let g = Field::from_real(grid, |x| (-PI * (x[0] + 1.0).powi(2) / 2.0).exp());
        let rep = verify_sparse_domination(&f, &g, 1.0, 0.5, 16.0, 128)?;
        let cubes: Vec<usize> = rep.families.iter().map(|f| f.cubes.len()).collect();
        println!("N = {size}: C = {:.4}, cubes per family {cubes:?}", rep.constant);
    }
    println!("ω_0.25 of [1, 1.5, 1.2, 90] = {}", oscillation_eta_values(&[1.0, 1.5, 1.2, 90.0], 0.25));
    let reg = kernel_regularity_check(1.0, 1, 42, 8, 0.05)?;
    println!("{}", reg.summary());
    Ok(())
}
