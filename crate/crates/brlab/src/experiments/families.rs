//! Seeded input families: random band-limited mixes, modulated bumps, pure modes and
//! the witnesses used by the necessary-condition probes.

use std::f64::consts::PI;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decomposition::cutoff;
use crate::error::{Error, Result};
use crate::spectral::{forward_transform, inverse_transform, Field, GridSpec, Spectrum};

/// Stream-split generator for trial `trial` of master seed `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyKind {
    /// Sum of random Gaussians, truncated to the half band.
    RandomMix,
    /// Gaussian bump times a random lattice mode.
    ModulatedBump,
    /// `e^{2πiξ₀·x}` and `e^{2πiη₀·x}` with random half-band lattice frequencies.
    PureMode,
    /// `ψ` with `ψ̂ = 1` on `|ξ| ≤ 2`, vanishing for `|ξ| ≥ 4`; used as `f = g = ψ`.
    NecWitness,
    /// `χ_{A_M}` and `χ_{B_M} e^{−2πi|z|}`, spectrally tapered.
    PhaseWitness,
    /// `f = g = 0`.
    Zero,
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "random" => Ok(Self::RandomMix),
            "modulated" => Ok(Self::ModulatedBump),
            "pure-mode" => Ok(Self::PureMode),
            "nec-witness" => Ok(Self::NecWitness),
            "phase-witness" => Ok(Self::PhaseWitness),
            "zero" => Ok(Self::Zero),
            _ => Err(format!("unknown family `{s}` (random, modulated, pure-mode, nec-witness, phase-witness, zero)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyParams {
    pub kind: FamilyKind,
    pub modes: usize,
    /// Witness size parameter `M`.
    pub m: f64,
    /// Witness cone aperture `ε₀`.
    pub eps0: f64,
}

/// Spectral taper applied to indicator witnesses: one up to `|k| = N/8`, a smooth
/// roll-off to zero at `|k| = N/4` per axis.
pub fn taper(grid: &GridSpec, k: i64) -> f64 {
    let n = grid.size() as f64;
    let t = k.unsigned_abs() as f64 / (n / 8.0);
    cutoff(t)
}

/// Width of the taper's roll-off in grid cells, recorded in CSV metadata.
pub fn taper_description(grid: &GridSpec) -> String {
    format!("spectral_taper_N/8_to_N/4;dx={}", crate::spectral::fmt_f64(grid.dx()))
}

/// Zeroes every coefficient outside the half band `|k| ≤ N/4` per axis.
pub fn band_limit(f: &Field) -> Field {
    let spec = forward_transform(f);
    let grid = *spec.grid();
    let coeffs = spec.coeffs().iter().enumerate().map(|(i, c)| if grid.in_half_band(i) { *c } else { Complex64::new(0.0, 0.0) }).collect();
    inverse_transform(&Spectrum::new(grid, coeffs).expect("same grid"))
}

fn tapered(f: &Field) -> Field {
    let spec = forward_transform(f);
    let grid = *spec.grid();
    let coeffs = spec
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let k = grid.wavenumbers(i);
            let w = taper(&grid, k[0]) * if grid.dim() == 2 { taper(&grid, k[1]) } else { 1.0 };
            c * w
        })
        .collect();
    inverse_transform(&Spectrum::new(grid, coeffs).expect("same grid"))
}

fn random_mix(grid: &GridSpec, modes: usize, rng: &mut ChaCha8Rng) -> Field {
    let l = grid.half_width();
    let bumps: Vec<([f64; 2], f64, Complex64)> = (0..modes.max(1))
        .map(|_| {
            let c = [rng.gen_range(-0.5 * l..0.5 * l), rng.gen_range(-0.5 * l..0.5 * l)];
            let w = rng.gen_range(l / 16.0..l / 4.0);
            let a = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            (c, w, a)
        })
        .collect();
    let dim = grid.dim();
    let raw = Field::from_fn(*grid, |x| {
        bumps
            .iter()
            .map(|(c, w, a)| {
                let d2 = (0..dim).map(|k| (x[k] - c[k]).powi(2)).sum::<f64>();
                a * (-PI * d2 / (w * w)).exp()
            })
            .sum()
    });
    band_limit(&raw)
}

fn random_lattice_frequency(grid: &GridSpec, rng: &mut ChaCha8Rng) -> [f64; 2] {
    let kmax = (grid.size() / 4) as i64;
    let mut k = [0i64; 2];
    for kk in k.iter_mut().take(grid.dim()) {
        *kk = rng.gen_range(-kmax..=kmax);
    }
    [k[0] as f64 * grid.dxi(), k[1] as f64 * grid.dxi()]
}

fn modulated_bump(grid: &GridSpec, rng: &mut ChaCha8Rng) -> Field {
    let l = grid.half_width();
    let c = [rng.gen_range(-0.25 * l..0.25 * l), rng.gen_range(-0.25 * l..0.25 * l)];
    let w = rng.gen_range(l / 8.0..l / 4.0);
    let xi = random_lattice_frequency(grid, rng);
    let dim = grid.dim();
    let raw = Field::from_fn(*grid, |x| {
        let d2 = (0..dim).map(|k| (x[k] - c[k]).powi(2)).sum::<f64>();
        let ph = 2.0 * PI * (0..dim).map(|k| xi[k] * x[k]).sum::<f64>();
        Complex64::from_polar((-PI * d2 / (w * w)).exp(), ph)
    });
    band_limit(&raw)
}

fn pure_mode(grid: &GridSpec, xi: [f64; 2]) -> Field {
    let dim = grid.dim();
    Field::from_fn(*grid, |x| Complex64::from_polar(1.0, 2.0 * PI * (0..dim).map(|k| xi[k] * x[k]).sum::<f64>()))
}

/// `ψ` with `ψ̂(ξ) = χ(|ξ|/2)`.
pub fn nec_witness(grid: &GridSpec) -> Result<Field> {
    let band = (grid.size() / 4) as f64 * grid.dxi();
    if band < 4.0 {
        return Err(Error::InvalidGrid(format!("witness needs half band ≥ 4, grid offers {band}")));
    }
    let coeffs = (0..grid.len())
        .map(|i| {
            let xi = grid.frequency(i);
            Complex64::new(cutoff((xi[0] * xi[0] + xi[1] * xi[1]).sqrt() / 2.0), 0.0)
        })
        .collect();
    Ok(inverse_transform(&Spectrum::new(*grid, coeffs)?))
}

/// Radii of the witness sets `A_M` and `B_M`.
pub fn pairing_radii(m: f64, eps0: f64) -> ((f64, f64), (f64, f64)) {
    ((eps0 * m.sqrt() / 10.0, eps0 * m.sqrt() / 5.0), (eps0 * m / 10.0, eps0 * m / 5.0))
}

/// `χ_{A_M}` and `χ_{B_M} e^{−2πi|z|}`, tapered to the half band.
pub fn phase_witness(grid: &GridSpec, m: f64, eps0: f64) -> Result<(Field, Field)> {
    let ((a0, a1), (b0, b1)) = pairing_radii(m, eps0);
    if b1 >= grid.half_width() {
        return Err(Error::InvalidGrid(format!("B_M reaches radius {b1}, beyond the box half-width {}", grid.half_width())));
    }
    if grid.dx() >= a1 - a0 {
        return Err(Error::InvalidGrid("A_M is thinner than one grid cell".into()));
    }
    let dim = grid.dim();
    let f = Field::from_real(*grid, |x| {
        let r = (0..dim).map(|k| x[k] * x[k]).sum::<f64>().sqrt();
        if r >= a0 && r < a1 {
            1.0
        } else {
            0.0
        }
    });
    let g = Field::from_fn(*grid, |x| {
        let r = (0..dim).map(|k| x[k] * x[k]).sum::<f64>().sqrt();
        let cone = dim == 1 || x[0].abs() <= eps0 / 10.0 * x[1].abs();
        if r >= b0 && r <= b1 && cone {
            Complex64::from_polar(1.0, -2.0 * PI * r)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    Ok((tapered(&f), tapered(&g)))
}

/// Reads `family`, `modes`, `M`, `eps0` from a config.
pub fn family_from(cfg: &super::Config) -> Result<FamilyParams> {
    let kind = cfg.get::<FamilyKind>("family")?;
    let p = FamilyParams { kind, modes: cfg.get("modes")?, m: cfg.get("M")?, eps0: cfg.get("eps0")? };
    super::require(cfg, "modes", p.modes >= 1, "need at least one mode")?;
    if kind == FamilyKind::PhaseWitness {
        super::require(cfg, "M", p.m >= 1.0, "witness size must be at least 1")?;
        super::require(cfg, "eps0", p.eps0 > 0.0 && p.eps0 <= 1.0, "aperture must lie in (0, 1]")?;
    }
    Ok(p)
}

/// Draws the `(f, g)` pair of trial `trial`.
pub fn generate_pair(grid: &GridSpec, params: &FamilyParams, seed: u64, trial: u64) -> Result<(Field, Field)> {
    let mut rng = trial_rng(seed, trial);
    match params.kind {
        FamilyKind::RandomMix => {
            let f = random_mix(grid, params.modes, &mut rng);
            let g = random_mix(grid, params.modes, &mut rng);
            Ok((f, g))
        }
        FamilyKind::ModulatedBump => {
            let f = modulated_bump(grid, &mut rng);
            let g = modulated_bump(grid, &mut rng);
            Ok((f, g))
        }
        FamilyKind::PureMode => loop {
            let xi = random_lattice_frequency(grid, &mut rng);
            let eta = random_lattice_frequency(grid, &mut rng);
            if xi.iter().chain(&eta).any(|v| *v != 0.0) {
                return Ok((pure_mode(grid, xi), pure_mode(grid, eta)));
            }
        },
        FamilyKind::NecWitness => {
            let psi = nec_witness(grid)?;
            Ok((psi.clone(), psi))
        }
        FamilyKind::PhaseWitness => phase_witness(grid, params.m, params.eps0),
        FamilyKind::Zero => Ok((Field::zeros(*grid), Field::zeros(*grid))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::make_grid;

    fn band_ok(f: &Field) -> bool {
        let spec = forward_transform(f);
        let peak = spec.coeffs().iter().fold(0.0f64, |m, c| m.max(c.norm()));
        spec.coeffs().iter().enumerate().all(|(i, c)| f.grid().in_half_band(i) || c.norm() <= 1e-12 * peak.max(1e-300))
    }

    #[test]
    fn families_are_band_limited_and_reproducible() {
        let grid = make_grid(1, 128, 16.0).unwrap();
        for kind in [FamilyKind::RandomMix, FamilyKind::ModulatedBump, FamilyKind::PureMode, FamilyKind::PhaseWitness] {
            let p = FamilyParams { kind, modes: 3, m: 64.0, eps0: 1.0 };
            let (f, g) = generate_pair(&grid, &p, 7, 2).unwrap();
            assert!(band_ok(&f) && band_ok(&g), "{kind:?}");
            let (f2, _) = generate_pair(&grid, &p, 7, 2).unwrap();
            assert_eq!(f, f2);
            if kind != FamilyKind::PhaseWitness {
                let (f3, _) = generate_pair(&grid, &p, 7, 3).unwrap();
                assert_ne!(f, f3);
            }
        }
    }

    #[test]
    fn witness_needs_band() {
        assert!(nec_witness(&make_grid(1, 64, 8.0).unwrap()).is_err());
        let grid = make_grid(1, 256, 8.0).unwrap();
        let psi = nec_witness(&grid).unwrap();
        assert!(band_ok(&psi));
    }

    #[test]
    fn kind_parsing() {
        assert_eq!("random".parse::<FamilyKind>().unwrap(), FamilyKind::RandomMix);
        assert!("nope".parse::<FamilyKind>().is_err());
    }
}
