//! Spatial form of the square-function kernel `𝒦^α_R` on `ℝ^{2n}` and its
//! calibration against a direct inverse transform of the kernel symbol.
//!
//! With `z = 2πR|y|` the kernel is
//! `c R^{2n} [J_{α+n}(z)/z^{α+n} − κ J_{α+n+1}(z)/z^{α+n+1}]`.
//! Writing `s(1−s)^α = (1−s)^α − (1−s)^{α+1}` and transforming each ball multiplier
//! gives `κ = 2(α+1)` and `c = 2Γ(α+2) 2^{n+α} π^n`. The unit-coefficient variant is
//! kept so its misfit can be reported.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spectral::{inverse_transform, make_grid, Spectrum};
use crate::special::{bessel_ratio, gamma_pos};
use crate::symbols::joint_sq;

/// Coefficient of the second Bessel term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelForm {
    /// `κ = 2(α+1)`, the value that reproduces the kernel symbol.
    Exact,
    /// `κ = 1`.
    UnitCoefficient,
}

impl KernelForm {
    fn kappa(self, alpha: f64) -> f64 {
        match self {
            KernelForm::Exact => 2.0 * (alpha + 1.0),
            KernelForm::UnitCoefficient => 1.0,
        }
    }
}

/// `R^{2n}[J_{α+n}(z)/z^{α+n} − κ J_{α+n+1}(z)/z^{α+n+1}]`, without the constant.
pub fn kernel_shape(form: KernelForm, alpha: f64, n: usize, r_scale: f64, radius: f64) -> f64 {
    let nu = alpha + n as f64;
    let z = 2.0 * std::f64::consts::PI * r_scale * radius.abs();
    r_scale.powi(2 * n as i32) * (bessel_ratio(nu, z) - form.kappa(alpha) * bessel_ratio(nu + 1.0, z))
}

/// `2Γ(α+2) 2^{n+α} π^n`.
pub fn analytic_constant(alpha: f64, n: usize) -> f64 {
    2.0 * gamma_pos(alpha + 2.0) * 2f64.powf(n as f64 + alpha) * std::f64::consts::PI.powi(n as i32)
}

/// Radial kernel with a fixed constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialKernel {
    pub alpha: f64,
    pub n: usize,
    pub form: KernelForm,
    pub constant: f64,
}

impl RadialKernel {
    pub fn new(alpha: f64, n: usize) -> Result<Self> {
        if !(alpha > -1.0) || !(1..=2).contains(&n) {
            return Err(Error::InvalidArgument(format!("need α > -1 and n ∈ {{1, 2}}, got ({alpha}, {n})")));
        }
        Ok(Self { alpha, n, form: KernelForm::Exact, constant: analytic_constant(alpha, n) })
    }

    pub fn eval(&self, r_scale: f64, radius: f64) -> f64 {
        self.constant * kernel_shape(self.form, self.alpha, self.n, r_scale, radius)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct KernelCalibration {
    pub alpha: f64,
    pub form: KernelForm,
    /// Least-squares constant.
    pub constant: f64,
    pub analytic: f64,
    /// `max |c·shape − K_fft| / max |K_fft|` over the calibration radii.
    pub residual: f64,
    pub radii: Vec<f64>,
}

/// Fits the kernel constant against an FFT inverse of the kernel symbol (n = 1, R = 1)
/// at grid points with radius in `[r_lo, r_hi]`.
pub fn calibrate_kernel(alpha: f64, form: KernelForm, size: usize, half_width: f64, r_lo: f64, r_hi: f64) -> Result<KernelCalibration> {
    if !(alpha > -1.0) {
        return Err(Error::InvalidArgument(format!("index α = {alpha} must exceed -1")));
    }
    let grid = make_grid(2, size, half_width)?;
    if (size as f64) / (4.0 * half_width) <= 1.0 {
        return Err(Error::InvalidGrid("frequency box must contain the unit ball".into()));
    }
    let coeffs = (0..grid.len())
        .map(|i| {
            let s = joint_sq(grid.frequency(i), [0.0; 2]);
            let v = if s < 1.0 { 2.0 * (alpha + 1.0) * s * (1.0 - s).powf(alpha) } else { 0.0 };
            Complex64::new(v, 0.0)
        })
        .collect();
    let kernel = inverse_transform(&Spectrum::new(grid, coeffs)?);
    let mut pts = Vec::new();
    for i in 0..grid.len() {
        let p = grid.point(i);
        let r = (p[0] * p[0] + p[1] * p[1]).sqrt();
        if r >= r_lo && r <= r_hi {
            pts.push((r, kernel.values()[i].re, kernel_shape(form, alpha, 1, 1.0, r)));
        }
    }
    if pts.is_empty() {
        return Err(Error::Empty("no grid points in the calibration annulus".into()));
    }
    let num: f64 = pts.iter().map(|(_, k, s)| k * s).sum();
    let den: f64 = pts.iter().map(|(_, _, s)| s * s).sum();
    let c = num / den;
    let peak = pts.iter().fold(0.0f64, |m, (_, k, _)| m.max(k.abs()));
    let residual = pts.iter().fold(0.0f64, |m, (_, k, s)| m.max((c * s - k).abs())) / peak;
    let mut radii: Vec<f64> = pts.iter().map(|p| p.0).collect();
    radii.sort_by(f64::total_cmp);
    radii.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    Ok(KernelCalibration { alpha, form, constant: c, analytic: analytic_constant(alpha, 1), residual, radii })
}

/// Calibration used by the test suite: `L = 64`, `N = 512`, radii in `[0.5, 5]`.
pub fn default_calibration(alpha: f64, form: KernelForm) -> Result<KernelCalibration> {
    calibrate_kernel(alpha, form, 512, 64.0, 0.5, 5.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_value_matches_symbol_integral() {
        // K(0) = ∫ 2(α+1)s(1−s)^α dζ over the unit ball of ℝ²: π·2(α+1)·B(2, α+1).
        for alpha in [0.5, 1.0, 2.0] {
            let k = RadialKernel::new(alpha, 1).unwrap();
            let want = std::f64::consts::PI * 2.0 * (alpha + 1.0) / ((alpha + 1.0) * (alpha + 2.0));
            assert!((k.eval(1.0, 0.0) - want).abs() < 1e-12 * want, "{alpha}");
        }
    }

    #[test]
    fn scaling_in_r() {
        let k = RadialKernel::new(1.0, 1).unwrap();
        for r in [0.3, 1.7, 4.2] {
            assert!((k.eval(2.0, r / 2.0) - 4.0 * k.eval(1.0, r)).abs() < 1e-12 * k.eval(1.0, r).abs().max(1e-3));
        }
    }

    #[test]
    fn calibration_recovers_analytic_constant() {
        for alpha in [1.0, 2.0] {
            let cal = default_calibration(alpha, KernelForm::Exact).unwrap();
            assert!(cal.residual <= 1e-3, "α={alpha} residual {}", cal.residual);
            assert!((cal.constant / cal.analytic - 1.0).abs() < 1e-3);
            let lit = default_calibration(alpha, KernelForm::UnitCoefficient).unwrap();
            assert!(lit.residual > 1e-2, "unit form should not fit: {}", lit.residual);
        }
    }
}
