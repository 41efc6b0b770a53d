//! The square function 𝒢^α on pure modes, where it is the constant √((α+1)/(2α+1)).

use std::f64::consts::PI;

use brlab::ops::{bilinear_square_function, BilinearPlan};
use brlab::spectral::{make_grid, Field};
use num_complex::Complex64;

fn main() -> brlab::Result<()> {
    let grid = make_grid(1, 64, 8.0)?;
    let mode = |xi: f64| Field::from_fn(grid, move |x| Complex64::from_polar(1.0, 2.0 * PI * xi * x[0]));
    let (f, g) = (mode(0.5), mode(-0.25));
    let q = BilinearPlan::new(&f, &g)?.covering_quadrature(512)?;
    println!("log-quadrature over R ∈ [{:.4}, {:.4}] with {} nodes", q.r_min(), q.r_max(), q.len());
    for alpha in [0.0, 0.5, 1.0, 2.0] {
        let sq = bilinear_square_function(&f, &g, alpha, &q)?;
        let exact = ((alpha + 1.0) / (2.0 * alpha + 1.0)).sqrt();
        println!("α = {alpha}: 𝒢 = {:.10}, expected {exact:.10}", sq.values()[7].re);
    }
    Ok(())
}
