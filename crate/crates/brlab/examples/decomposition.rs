//! Dyadic decomposition of the square-function symbol near the sphere.

use brlab::decomposition::{build_partition, decomposition_check, partition_defect, psi, psi0};

fn main() -> brlab::Result<()> {
    let (b, b0) = build_partition(12)?;
    println!("ψ on {:?}, ψ₀ on {:?}, defect {:.2e} over {} points", b.support, b0.support, b.defect, b.lattice_points);
    for t in [0.0, 0.3, 0.6, 0.9, 0.99] {
        let sum: f64 = (2..=12).map(|j| psi(2f64.powi(j) * (1.0 - t))).sum::<f64>() + psi0(t);
        println!("t = {t}: ψ₀ + Σ_{{j≥2}} ψ(2^j(1−t)) = {sum:.15}, defect {:.1e}", partition_defect(t, 12));
    }
    for alpha in [0.25, 1.0, 2.5] {
        let d = decomposition_check(alpha, 1.0, 12, 64, 1e-10)?;
        println!("α = {alpha}: defect {:.2e} on {} points ({} in the shell)", d.max_defect, d.points_checked, d.points_in_shell);
    }
    Ok(())
}
