//! The Stein–Weiss slicing identity and its normalising constant.

use brlab::identities::{c_alpha, stein_weiss_sides, stein_weiss_suite, QuadMode};

fn main() -> brlab::Result<()> {
    let (lhs, rhs, nodes) = stein_weiss_sides(1.5, 0.7, 2.0, 0.8, 0.6, QuadMode::Adaptive(1e-12))?;
    println!("β = 1.5, δ = 0.7: lhs {lhs:.15}, rhs {rhs:.15} ({nodes} nodes)");
    println!("c(1.5, 0.7) = {}", c_alpha(1.5, 0.7)?);
    let adaptive = stein_weiss_suite(42, 100, 1e-6, QuadMode::Adaptive(1e-10))?;
    println!("100 seeded samples, adaptive: max rel err {:.3e}, pass {}", adaptive.max_rel_err, adaptive.pass);
    let coarse = stein_weiss_suite(42, 100, 1e-6, QuadMode::Fixed(4))?;
    println!("4-node rule: max rel err {:.3e}, pass {}", coarse.max_rel_err, coarse.pass);
    Ok(())
}
