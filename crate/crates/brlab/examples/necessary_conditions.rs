//! Growth probes on either side of the boundedness thresholds.

use brlab::experiments::nec::{annulus_block_sum, annulus_threshold, pairing, pairing_threshold};

fn main() -> brlab::Result<()> {
    let p = 2.0 / 3.0;
    println!("annulus threshold at n = 1, p = 2/3: {}", annulus_threshold(1, p));
    for alpha in [0.5, -0.3] {
        let v: Vec<String> = [64, 256, 1024].iter().map(|m| annulus_block_sum(alpha, 1, p, *m, 0.1, 16).map(|x| format!("{x:.5e}"))).collect::<brlab::Result<_>>()?;
        println!("α = {alpha}: {}", v.join("  "));
    }
    let thr = pairing_threshold(1, 0.75, 0.75, 0.4);
    println!("pairing threshold at p1 = p2 = 4/3: {thr}");
    for alpha in [thr - 0.5, thr + 0.5] {
        let v: Vec<String> = [64.0, 256.0, 1024.0]
            .iter()
            .map(|&m| {
                let (val, a, b) = pairing(alpha, 1, m, 0.5, 0.4, 32);
                format!("{:.5e}", val / (a.powf(0.75) * b.powf(0.75)))
            })
            .collect();
        println!("α = {alpha:.3}: {}", v.join("  "));
    }
    Ok(())
}
