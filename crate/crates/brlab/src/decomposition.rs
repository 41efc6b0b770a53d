//! Smooth partition of unity near the unit sphere and the piece symbols built from it.
//!
//! With `χ` equal to 1 on `(-∞, 1]` and 0 on `[2, ∞)`, the bump
//! `ψ(t) = χ(t) − χ(2t)` lives in `[1/2, 2]` and `ψ₀(t) = 1 − χ(4(1 − |t|))`
//! lives in `[−3/4, 3/4]`. The dyadic sum telescopes:
//! `Σ_{j=2}^{J} ψ(2^j s) + ψ₀(1 − s) = 1 − χ(2^{J+1} s)`, which is exactly 1 for
//! `s ≥ 2^{−J}`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ops::{square_function_with, QuadratureSpec};
use crate::spectral::Field;
use crate::symbols::{pos_pow, Multiplier};

pub const DEFAULT_TRUNCATION: usize = 12;

/// Smooth step: 0 for `x <= 0`, 1 for `x >= 1`.
pub fn smooth_step(x: f64) -> f64 {
    if x <= 0.0 {
        return 0.0;
    }
    if x >= 1.0 {
        return 1.0;
    }
    let a = (-1.0 / x).exp();
    let b = (-1.0 / (1.0 - x)).exp();
    a / (a + b)
}

/// 1 on `(-∞, 1]`, 0 on `[2, ∞)`, smooth and nonincreasing in between.
pub fn cutoff(t: f64) -> f64 {
    1.0 - smooth_step(t - 1.0)
}

pub fn psi(t: f64) -> f64 {
    cutoff(t) - cutoff(2.0 * t)
}

pub fn psi0(t: f64) -> f64 {
    let a = t.abs();
    if a >= 1.0 {
        0.0
    } else {
        1.0 - cutoff(4.0 * (1.0 - a))
    }
}

/// `ψ` transplanted affinely from `[1/2, 2]` to `[1, 2]`.
pub fn phi(t: f64) -> f64 {
    psi(0.5 + 1.5 * (t - 1.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BumpKind {
    Psi,
    Psi0,
    Phi,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertifiedBump {
    pub kind: BumpKind,
    pub support: (f64, f64),
    /// Largest partition defect observed during certification.
    pub defect: f64,
    pub lattice_points: usize,
}

impl CertifiedBump {
    pub fn eval(&self, t: f64) -> f64 {
        match self.kind {
            BumpKind::Psi => psi(t),
            BumpKind::Psi0 => psi0(t),
            BumpKind::Phi => phi(t),
        }
    }
}

/// Left side of the partition identity minus one.
pub fn partition_defect(t: f64, truncation: usize) -> f64 {
    let s = 1.0 - t;
    let mut sum = psi0(t);
    let mut scale = 4.0;
    for _ in 2..=truncation {
        sum += psi(scale * s);
        scale *= 2.0;
    }
    sum - 1.0
}

fn support_is_clean(f: impl Fn(f64) -> f64, lo: f64, hi: f64) -> bool {
    let probes = 4000;
    (0..=probes).all(|i| {
        let u = i as f64 / probes as f64;
        f(lo - 3.0 * u) == 0.0 && f(hi + 3.0 * u) == 0.0
    })
}

/// Builds `(ψ, ψ₀)` and certifies the partition on `10⁴` points of `[0, 1 − 2^{−J}]`.
pub fn build_partition(truncation: usize) -> Result<(CertifiedBump, CertifiedBump)> {
    if truncation < 4 {
        return Err(Error::InvalidArgument(format!("truncation level {truncation} < 4")));
    }
    let points = 10_000;
    let end = 1.0 - 2f64.powi(-(truncation as i32));
    let mut defect: f64 = 0.0;
    for i in 0..points {
        let t = end * i as f64 / (points - 1) as f64;
        defect = defect.max(partition_defect(t, truncation).abs());
    }
    if defect > 1e-10 {
        return Err(Error::Certification(format!("partition defect {defect:e} exceeds 1e-10")));
    }
    if !support_is_clean(psi, 0.5, 2.0) {
        return Err(Error::Certification("ψ leaks outside [1/2, 2]".into()));
    }
    if !support_is_clean(psi0, -0.75, 0.75) {
        return Err(Error::Certification("ψ₀ leaks outside [-3/4, 3/4]".into()));
    }
    let psi_b = CertifiedBump { kind: BumpKind::Psi, support: (0.5, 2.0), defect, lattice_points: points };
    let psi0_b = CertifiedBump { kind: BumpKind::Psi0, support: (-0.75, 0.75), defect, lattice_points: points };
    Ok((psi_b, psi0_b))
}

fn sq(v: [f64; 2]) -> f64 {
    v[0] * v[0] + v[1] * v[1]
}

fn mj_value(j: usize, alpha: f64, r: f64, xi: [f64; 2], eta: [f64; 2]) -> f64 {
    let a = sq(xi) / (r * r);
    let b = sq(eta) / (r * r);
    let one_minus_a = 1.0 - a;
    let p = psi(2f64.powi(j as i32) * one_minus_a);
    if p == 0.0 {
        return 0.0;
    }
    p * (a + b) * pos_pow(one_minus_a, alpha) * pos_pow(1.0 - b / one_minus_a, alpha)
}

fn m0_value(alpha: f64, r: f64, xi: [f64; 2], eta: [f64; 2]) -> f64 {
    let a = sq(xi) / (r * r);
    let p = psi0(a);
    if p == 0.0 {
        return 0.0;
    }
    let s = a + sq(eta) / (r * r);
    p * s * pos_pow(1.0 - s, alpha)
}

fn check_params(alpha: f64, r: f64) -> Result<()> {
    if !(alpha > -1.0) {
        return Err(Error::InvalidArgument(format!("α = {alpha} must exceed -1")));
    }
    if !(r > 0.0) {
        return Err(Error::InvalidArgument(format!("scale R = {r} must be positive")));
    }
    Ok(())
}

/// Piece `j >= 2` of the kernel symbol (without the `2(α+1)` prefactor).
pub fn mj_symbol(j: usize, alpha: f64, r: f64, xi: [f64; 2], eta: [f64; 2]) -> Result<f64> {
    check_params(alpha, r)?;
    if j < 2 {
        return Err(Error::InvalidArgument(format!("piece index {j} < 2")));
    }
    Ok(mj_value(j, alpha, r, xi, eta))
}

/// Low-frequency piece of the kernel symbol (without the `2(α+1)` prefactor).
pub fn m0_symbol(alpha: f64, r: f64, xi: [f64; 2], eta: [f64; 2]) -> Result<f64> {
    check_params(alpha, r)?;
    Ok(m0_value(alpha, r, xi, eta))
}

/// Piece `j` (0 for the low-frequency piece) scaled by `2(α+1)`, at scale `R`.
#[derive(Debug, Clone, Copy)]
pub struct PieceSymbol {
    pub j: usize,
    pub alpha: f64,
    pub r: f64,
}

impl Multiplier for PieceSymbol {
    fn eval(&self, xi: [f64; 2], eta: [f64; 2]) -> Complex64 {
        let v = if self.j == 0 {
            m0_value(self.alpha, self.r, xi, eta)
        } else {
            mj_value(self.j, self.alpha, self.r, xi, eta)
        };
        Complex64::new(2.0 * (self.alpha + 1.0) * v, 0.0)
    }
}

/// Kernel symbol minus all pieces `j ∈ {0} ∪ [2, J]`: nonzero only inside the truncation shell.
#[derive(Debug, Clone, Copy)]
pub struct TruncationRemainder {
    pub truncation: usize,
    pub alpha: f64,
    pub r: f64,
}

impl Multiplier for TruncationRemainder {
    fn eval(&self, xi: [f64; 2], eta: [f64; 2]) -> Complex64 {
        let s = (sq(xi) + sq(eta)) / (self.r * self.r);
        let full = s * pos_pow(1.0 - s, self.alpha);
        let mut pieces = m0_value(self.alpha, self.r, xi, eta);
        for j in 2..=self.truncation {
            pieces += mj_value(j, self.alpha, self.r, xi, eta);
        }
        Complex64::new(2.0 * (self.alpha + 1.0) * (full - pieces), 0.0)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionReport {
    pub alpha: f64,
    pub r: f64,
    pub truncation: usize,
    pub max_defect: f64,
    pub points_checked: usize,
    pub points_in_shell: usize,
    pub pass: bool,
}

/// Sweeps every frequency pair of the `n = 1` lattice with `size` points per axis.
///
/// The box half-width is chosen so the lattice reaches `1.5 R`.
pub fn decomposition_check(alpha: f64, r: f64, truncation: usize, size: usize, tol: f64) -> Result<DecompositionReport> {
    check_params(alpha, r)?;
    let half_width = size as f64 / (4.0 * 1.5 * r);
    let grid = crate::spectral::make_grid(1, size, half_width)?;
    let shell = 2f64.powi(-(truncation as i32));
    let mut max_defect: f64 = 0.0;
    let mut checked = 0;
    let mut in_shell = 0;
    for i in 0..grid.len() {
        for k in 0..grid.len() {
            let xi = grid.frequency(i);
            let eta = grid.frequency(k);
            let a = sq(xi) / (r * r);
            if 1.0 - a < shell && a < 1.0 {
                in_shell += 1;
                continue;
            }
            let s = a + sq(eta) / (r * r);
            let lhs = s * pos_pow(1.0 - s, alpha);
            let mut rhs = m0_value(alpha, r, xi, eta);
            for j in 2..=truncation {
                rhs += mj_value(j, alpha, r, xi, eta);
            }
            max_defect = max_defect.max((lhs - rhs).abs());
            checked += 1;
        }
    }
    Ok(DecompositionReport {
        alpha,
        r,
        truncation,
        max_defect,
        points_checked: checked,
        points_in_shell: in_shell,
        pass: max_defect <= tol,
    })
}

/// `𝒢_j` for `j >= 2`, or the low-frequency piece for `j = 0`.
pub fn gj_square_function(f: &Field, g: &Field, j: usize, alpha: f64, q: &QuadratureSpec) -> Result<Field> {
    check_params(alpha, 1.0)?;
    if j == 1 {
        return Err(Error::InvalidArgument("piece index must be 0 or at least 2".into()));
    }
    square_function_with(f, g, q, |r| PieceSymbol { j, alpha, r })
}

/// Square function of the truncation remainder, the slack in the pointwise domination.
pub fn remainder_square_function(f: &Field, g: &Field, truncation: usize, alpha: f64, q: &QuadratureSpec) -> Result<Field> {
    check_params(alpha, 1.0)?;
    square_function_with(f, g, q, |r| TruncationRemainder { truncation, alpha, r })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bump_supports_and_values() {
        assert_eq!(psi(0.5), 0.0);
        assert_eq!(psi(2.0), 0.0);
        assert_eq!(psi(1.0), 1.0);
        assert_eq!(psi0(0.0), 1.0);
        assert_eq!(psi0(0.75), 0.0);
        assert_eq!(psi0(0.9), 0.0);
        assert!(phi(1.5) > 0.0);
        assert_eq!(phi(1.0), 0.0);
        assert_eq!(phi(2.0), 0.0);
        assert!((0..1000).all(|i| psi(i as f64 * 0.003) >= 0.0));
    }

    #[test]
    fn partition_certifies() {
        let (p, p0) = build_partition(12).unwrap();
        assert!(p.defect <= 1e-10);
        assert_eq!(p.support, (0.5, 2.0));
        assert_eq!(p0.support, (-0.75, 0.75));
        assert!(build_partition(3).is_err());
    }

    #[test]
    fn partition_at_origin_and_dyadic_points() {
        assert_eq!(partition_defect(0.0, 12), 0.0);
        for j in 2..10 {
            let t = 1.0 - 2f64.powi(-j);
            assert!(partition_defect(t, 12).abs() < 1e-14);
            assert_eq!(psi(2f64.powi(j) * (1.0 - t)), 1.0);
        }
    }

    #[test]
    fn piece_symbols_edge_cases() {
        assert_eq!(mj_symbol(3, 1.0, 1.0, [1.2, 0.0], [0.0, 0.0]).unwrap(), 0.0);
        let a: f64 = 1.0 - 0.75 * 2f64.powi(-3);
        let xi = [a.sqrt(), 0.0];
        let eta = [(1.0 - a).sqrt(), 0.0];
        assert_eq!(mj_symbol(3, 1.0, 1.0, xi, eta).unwrap(), 0.0);
        assert_eq!(m0_symbol(1.0, 1.0, [0.9f64.sqrt(), 0.0], [0.1, 0.0]).unwrap(), 0.0);
        assert_eq!(m0_symbol(1.0, 1.0, [0.0, 0.0], [0.0, 0.0]).unwrap(), 0.0);
        assert!(mj_symbol(1, 1.0, 1.0, xi, eta).is_err());
        assert!(m0_symbol(-1.0, 1.0, xi, eta).is_err());
    }

    #[test]
    fn decomposition_sweeps_pass() {
        for alpha in [0.25, 1.0, 2.5] {
            for r in [0.7, 1.0, 1.9] {
                let rep = decomposition_check(alpha, r, 12, 64, 1e-10).unwrap();
                assert!(rep.pass, "α={alpha} R={r}: {}", rep.max_defect);
            }
        }
    }

    #[test]
    fn adjacent_support_disjointness() {
        for i in 0..2000 {
            let a = i as f64 / 2000.0;
            let xi = [a.sqrt(), 0.0];
            for j in 2..12 {
                for k in (j + 2)..14 {
                    let x = mj_value(j, 1.0, 1.0, xi, [0.01, 0.0]);
                    let y = mj_value(k, 1.0, 1.0, xi, [0.01, 0.0]);
                    assert_eq!(x * y, 0.0);
                }
            }
        }
    }
}
