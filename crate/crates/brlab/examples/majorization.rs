//! Pointwise domination of a maximal multiplier operator by 𝒢^{α−1}, and the
//! weighted Sobolev norm that sets its constant.

use brlab::experiments::families::{generate_pair, FamilyKind, FamilyParams};
use brlab::identities::{majorization_check, riemann_liouville_constant, sobolev_norm, unit_bump};
use brlab::spectral::make_grid;

fn main() -> brlab::Result<()> {
    let m = unit_bump();
    for alpha in [1.0, 1.5, 2.0] {
        let a = sobolev_norm(&m, alpha, 0.0, 1024)?.value;
        let b = sobolev_norm(&m.dilate(3.0), alpha, 0.0, 1024)?.value;
        println!("‖φ‖_L²_{alpha} = {a:.10}, after dilation {b:.10}");
    }
    let grid = make_grid(1, 128, 8.0)?;
    let fam = FamilyParams { kind: FamilyKind::RandomMix, modes: 4, m: 0.0, eps0: 0.0 };
    let (f, g) = generate_pair(&grid, &fam, 42, 2)?;
    let scales: Vec<f64> = (0..32).map(|i| 2f64.powf(-4.0 + 8.0 * i as f64 / 31.0)).collect();
    let rep = majorization_check(&m, 2.0, &f, &g, &scales, riemann_liouville_constant(2.0)?, 512, 1e-9)?;
    println!("constant {:.6}, worst ratio {:.4}, violations {}", rep.constant, rep.worst_ratio, rep.violations);
    Ok(())
}
