//! Bessel functions of the first kind across the series, recurrence and Hankel regimes.

use brlab::special::{asymptotic_min_x, bessel_j, bessel_j_asymptotic, bessel_j_recurrence, bessel_j_series, bessel_ratio, gamma_fn};

fn main() -> brlab::Result<()> {
    for nu in [0.0, 0.5, 2.5, 7.0] {
        println!("ν = {nu}: Hankel regime from x = {}", asymptotic_min_x(nu));
        for x in [0.5, 5.0, 12.0, 40.0] {
            println!("  J_ν({x:>4}) = {:+.15e}", bessel_j(nu, x));
        }
    }
    // J_{1/2}(x) = √(2/(πx)) sin x.
    let x = 7.3f64;
    let exact = (2.0 / (std::f64::consts::PI * x)).sqrt() * x.sin();
    println!("J_1/2(7.3): series {:.3e}, recurrence {:.3e} off the closed form", (bessel_j_series(0.5, x) - exact).abs(), (bessel_j_recurrence(0.5, x) - exact).abs());
    println!("J_1/2(30) Hankel error {:.3e}", (bessel_j_asymptotic(0.5, 30.0) - (2.0 / (std::f64::consts::PI * 30.0)).sqrt() * 30f64.sin()).abs());
    println!("J_2(x)/x² at 0 = {} (1/(4Γ(3)) = {})", bessel_ratio(2.0, 0.0), 1.0 / (4.0 * gamma_fn(3.0)?));
    Ok(())
}
