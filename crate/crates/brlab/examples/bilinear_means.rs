//! Bilinear Bochner–Riesz means of a random band-limited pair, and the maximal
//! function over a geometric scale family.

use brlab::experiments::families::{generate_pair, FamilyKind, FamilyParams};
use brlab::ops::{bochner_riesz, maximal_over_scales, BilinearPlan, ScaleFamily};
use brlab::spectral::make_grid;
use brlab::symbols::SymbolDescriptor;

fn main() -> brlab::Result<()> {
    let grid = make_grid(1, 128, 8.0)?;
    let fam = FamilyParams { kind: FamilyKind::RandomMix, modes: 4, m: 0.0, eps0: 0.0 };
    let (f, g) = generate_pair(&grid, &fam, 42, 0)?;
    let plan = BilinearPlan::new(&f, &g)?;
    println!("occupied |ξ|²+|η|² range: {:?}, amplitude {:.4}", plan.occupied_range(), plan.amplitude());
    for r in [0.5, 1.0, 2.0, 4.0] {
        let b = bochner_riesz(&f, &g, 1.0, r)?;
        println!("R = {r}: sup |B_R(f,g)| = {:.6}", b.max_abs());
    }
    let family = ScaleFamily::geometric(0.25, 4.0, 2f64.sqrt(), |r: f64| SymbolDescriptor::BochnerRiesz { alpha: 1.0, r })?;
    let max = maximal_over_scales(&f, &g, &family)?;
    println!("maximal function over {} scales: sup = {:.6}", family.scales().len(), max.max_abs());
    Ok(())
}
