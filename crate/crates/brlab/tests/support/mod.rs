//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use std::f64::consts::PI;

use brlab::spectral::Field;
use brlab::symbols::Multiplier;
use num_complex::Complex64;

/// `Σ_ξ Σ_η m(ξ,η) f̂(ξ) ĝ(η) e^{2πi(ξ+η)x} Δξ²` on a one-dimensional grid, with
/// `f̂` computed by direct summation. Quadratic in the grid size per output point.
pub fn brute_force_bilinear(f: &Field, g: &Field, m: &impl Multiplier) -> Vec<Complex64> {
    let grid = *f.grid();
    assert_eq!(grid.dim(), 1);
    let n = grid.size() as i64;
    let dxi = grid.dxi();
    let xs: Vec<f64> = (0..grid.size()).map(|i| grid.coord(i)).collect();
    let ks: Vec<i64> = (-n / 2..n / 2).collect();
    let hat = |h: &Field| -> Vec<Complex64> {
        ks.iter()
            .map(|&k| {
                let xi = k as f64 * dxi;
                xs.iter().zip(h.values()).map(|(x, v)| v * Complex64::from_polar(grid.dx(), -2.0 * PI * xi * x)).sum()
            })
            .collect()
    };
    let (fh, gh) = (hat(f), hat(g));
    xs.iter()
        .map(|&x| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (a, &k1) in ks.iter().enumerate() {
                for (b, &k2) in ks.iter().enumerate() {
                    let (xi, eta) = (k1 as f64 * dxi, k2 as f64 * dxi);
                    let w = m.eval([xi, 0.0], [eta, 0.0]);
                    if w.norm() != 0.0 {
                        acc += w * fh[a] * gh[b] * Complex64::from_polar(dxi * dxi, 2.0 * PI * (xi + eta) * x);
                    }
                }
            }
            acc
        })
        .collect()
}

/// `∫_0^∞ |2(α+1)s(1−s)_+^α|² dR/R` with `s = u/R²`, by a midpoint rule in `s` with `nodes` cells.
pub fn single_mode_square(alpha: f64, nodes: usize) -> f64 {
    let h = 1.0 / nodes as f64;
    let sum: f64 = (0..nodes)
        .map(|i| {
            let s = (i as f64 + 0.5) * h;
            let k = 2.0 * (alpha + 1.0) * s * (1.0 - s).powf(alpha);
            k * k / (2.0 * s)
        })
        .sum();
    (sum * h).sqrt()
}

/// `min` over all ways of discarding exactly `k` of `values` of the remaining spread.
pub fn exhaustive_oscillation(values: &[f64], k: usize) -> f64 {
    let n = values.len();
    let mut best = f64::INFINITY;
    let mut keep = vec![true; n];
    fn rec(values: &[f64], keep: &mut [bool], start: usize, left: usize, best: &mut f64) {
        if left == 0 {
            let kept = values.iter().zip(keep.iter()).filter(|(_, k)| **k).map(|(v, _)| *v);
            let (lo, hi) = kept.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| (a.min(v), b.max(v)));
            *best = best.min(hi - lo);
            return;
        }
        for i in start..values.len() {
            keep[i] = false;
            rec(values, keep, i + 1, left - 1, best);
            keep[i] = true;
        }
    }
    rec(values, &mut keep, 0, k, &mut best);
    best
}

/// Number of `k`-subsets of an `n`-set.
pub fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n - k + i) / i)
}
