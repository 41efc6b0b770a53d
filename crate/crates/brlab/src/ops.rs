//! Bilinear multiplier operators, Bochner–Riesz means, square functions and
//! maximal functions over scale families.
//!
//! `T_m(f, g)(x) = Σ_{ξ,η} m(ξ,η) f̂(ξ) ĝ(η) e^{2πi x·(ξ+η)} Δξ^{2n}` is computed by
//! grouping frequency pairs by `τ = ξ + η` on a zero-padded lattice and doing a
//! single inverse transform, then reading the padded output back at the
//! original sample points.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::spectral::{forward_transform, inverse_transform, Field, GridSpec, Spectrum};
use crate::symbols::{joint_sq, pos_pow, Multiplier, SymbolDescriptor};

pub const DEFAULT_PAD: usize = 2;
/// Spectral coefficients below this fraction of the largest one are dropped.
const COEFF_FLOOR: f64 = 1e-13;
/// `R_max / √u_max` used by [`QuadratureSpec::covering`].
pub const COVERING_HEADROOM: f64 = 20.0;

/// Log-uniform trapezoid rule for `∫ · dR/R` on `[R_min, R_max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureSpec {
    r_min: f64,
    r_max: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureSpec {
    pub fn new(r_min: f64, r_max: f64, k: usize) -> Result<Self> {
        if !(r_min > 0.0 && r_max > r_min && r_max.is_finite()) {
            return Err(Error::InvalidArgument(format!("need 0 < R_min < R_max, got [{r_min}, {r_max}]")));
        }
        if k < 16 {
            return Err(Error::InvalidArgument(format!("quadrature needs K >= 16 nodes, got {k}")));
        }
        let h = (r_max / r_min).ln() / (k - 1) as f64;
        let nodes = (0..k).map(|i| r_min * (i as f64 * h).exp()).collect();
        let mut weights = vec![h; k];
        weights[0] = 0.5 * h;
        weights[k - 1] = 0.5 * h;
        Ok(Self { r_min, r_max, nodes, weights })
    }

    /// Rule covering joint frequencies `u ∈ [u_min, u_max]`: `√u_min` sits half a
    /// cell above `R_min`, and `R_max = 20 √u_max`.
    pub fn covering(u_min: f64, u_max: f64, k: usize) -> Result<Self> {
        if !(u_min > 0.0 && u_max >= u_min) {
            return Err(Error::InvalidArgument(format!("bad occupied range [{u_min}, {u_max}]")));
        }
        if k < 16 {
            return Err(Error::InvalidArgument(format!("quadrature needs K >= 16 nodes, got {k}")));
        }
        let h = (COVERING_HEADROOM * (u_max / u_min).sqrt()).ln() / (k as f64 - 1.5);
        let r_min = u_min.sqrt() * (-0.5 * h).exp();
        let r_max = r_min * ((k - 1) as f64 * h).exp();
        Self::new(r_min, r_max, k)
    }

    pub fn r_min(&self) -> f64 {
        self.r_min
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Checks the coverage precondition for the square functions.
    pub fn check_covers(&self, u_min: f64, u_max: f64) -> Result<()> {
        if self.r_min * self.r_min > u_min * (1.0 + 1e-12) {
            return Err(Error::Coverage(format!(
                "R_min² = {:e} exceeds the smallest occupied u = {u_min:e}",
                self.r_min * self.r_min
            )));
        }
        if self.r_max * self.r_max < 100.0 * u_max {
            return Err(Error::Coverage(format!(
                "R_max² = {:e} is below 100·u_max = {:e}",
                self.r_max * self.r_max,
                100.0 * u_max
            )));
        }
        Ok(())
    }

    /// Bound on the squared tail `∫_{R_max}^∞ |𝒦_R∗(f,g)|² dR/R` given `A = Σ|f̂||ĝ|Δξ^{2n}`.
    pub fn tail_bound(&self, alpha: f64, u_max: f64, amplitude: f64) -> f64 {
        let s_max = u_max / (self.r_max * self.r_max);
        let worst = if alpha >= 0.0 { 1.0 } else { (1.0 - s_max).powf(alpha) };
        let c = 2.0 * (alpha + 1.0) * u_max * worst;
        amplitude * amplitude * c * c / (4.0 * self.r_max.powi(4))
    }
}

#[derive(Debug, Clone, Copy)]
struct PairEntry {
    slot: usize,
    xi: [f64; 2],
    eta: [f64; 2],
    amp: Complex64,
}

/// Frequency pairs of `(f̂, ĝ)` grouped for repeated symbol application.
#[derive(Debug, Clone)]
pub struct BilinearPlan {
    grid: GridSpec,
    padded: GridSpec,
    pad: usize,
    entries: Vec<PairEntry>,
    amplitude: f64,
}

fn occupied(spec: &Spectrum) -> Vec<(usize, Complex64)> {
    let peak = spec.coeffs().iter().fold(0.0f64, |m, c| m.max(c.norm()));
    spec.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.norm() > COEFF_FLOOR * peak && c.norm() > 0.0)
        .map(|(i, &c)| (i, c))
        .collect()
}

impl BilinearPlan {
    pub fn new(f: &Field, g: &Field) -> Result<Self> {
        Self::with_pad(f, g, DEFAULT_PAD)
    }

    pub fn with_pad(f: &Field, g: &Field, pad: usize) -> Result<Self> {
        if f.grid() != g.grid() {
            return Err(Error::GridMismatch);
        }
        if pad < 2 || !pad.is_power_of_two() {
            return Err(Error::InvalidArgument(format!("pad factor {pad} must be a power of two >= 2")));
        }
        let grid = *f.grid();
        let padded = grid.refined(pad)?;
        let fs = occupied(&forward_transform(f));
        let gs = occupied(&forward_transform(g));
        let norm = 1.0 / grid.box_volume();
        let mut entries = Vec::with_capacity(fs.len() * gs.len());
        let mut amplitude = 0.0;
        for &(a, fa) in &fs {
            let ka = grid.wavenumbers(a);
            let xi = grid.frequency(a);
            for &(b, gb) in &gs {
                let kb = grid.wavenumbers(b);
                let mut idx = [0usize; 2];
                for ax in 0..grid.dim() {
                    idx[ax] = padded.slot(ka[ax] + kb[ax]);
                }
                let amp = fa * gb * norm;
                amplitude += amp.norm();
                entries.push(PairEntry { slot: padded.flatten(idx), xi, eta: grid.frequency(b), amp });
            }
        }
        Ok(Self { grid, padded, pad, entries, amplitude: amplitude / grid.box_volume() })
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn pair_count(&self) -> usize {
        self.entries.len()
    }

    /// `Σ |f̂(ξ)||ĝ(η)| Δξ^{2n}`, a bound on `sup |T_m(f,g)|` for `|m| <= 1`.
    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    /// Smallest positive and largest `u = |ξ|² + |η|²` among occupied pairs.
    pub fn occupied_range(&self) -> Option<(f64, f64)> {
        let mut lo = f64::INFINITY;
        let mut hi: f64 = 0.0;
        for e in &self.entries {
            let u = joint_sq(e.xi, e.eta);
            if u > 0.0 {
                lo = lo.min(u);
                hi = hi.max(u);
            }
        }
        (hi > 0.0).then_some((lo, hi))
    }

    pub fn covering_quadrature(&self, k: usize) -> Result<QuadratureSpec> {
        match self.occupied_range() {
            Some((lo, hi)) => QuadratureSpec::covering(lo, hi, k),
            None => QuadratureSpec::new(1.0, 2.0, k.max(16)),
        }
    }

    pub fn apply(&self, m: &(impl Multiplier + ?Sized)) -> Field {
        let mut h = vec![Complex64::new(0.0, 0.0); self.padded.len()];
        for e in &self.entries {
            let v = m.eval(e.xi, e.eta);
            if v.re != 0.0 || v.im != 0.0 {
                h[e.slot] += v * e.amp;
            }
        }
        let full = inverse_transform(&Spectrum::new(self.padded, h).expect("padded length"));
        let values = (0..self.grid.len())
            .map(|i| {
                let idx = self.grid.unflatten(i);
                let mut pidx = [0usize; 2];
                for ax in 0..self.grid.dim() {
                    pidx[ax] = idx[ax] * self.pad;
                }
                full.values()[self.padded.flatten(pidx)]
            })
            .collect();
        Field::new(self.grid, values).expect("finite output")
    }
}

pub fn apply_bilinear(f: &Field, g: &Field, m: &(impl Multiplier + ?Sized)) -> Result<Field> {
    Ok(BilinearPlan::new(f, g)?.apply(m))
}

pub fn bochner_riesz(f: &Field, g: &Field, alpha: f64, r: f64) -> Result<Field> {
    apply_bilinear(f, g, &SymbolDescriptor::bochner_riesz(alpha, r)?)
}

/// `(Σ_k w_k |T_{m(R_k)}(f,g)|²)^{1/2}` for a symbol family indexed by scale.
pub fn square_function_with<M, S>(f: &Field, g: &Field, q: &QuadratureSpec, symbol: S) -> Result<Field>
where
    M: Multiplier,
    S: Fn(f64) -> M + Sync,
{
    let plan = BilinearPlan::new(f, g)?;
    Ok(plan_square_function(&plan, q, symbol))
}

pub(crate) fn plan_square_function<M, S>(plan: &BilinearPlan, q: &QuadratureSpec, symbol: S) -> Field
where
    M: Multiplier,
    S: Fn(f64) -> M + Sync,
{
    let grid = plan.grid;
    if plan.entries.is_empty() {
        return Field::zeros(grid);
    }
    let per_node: Vec<Vec<f64>> = q
        .nodes()
        .par_iter()
        .zip(q.weights().par_iter())
        .map(|(&r, &w)| plan.apply(&symbol(r)).values().iter().map(|v| w * v.norm_sqr()).collect())
        .collect();
    let mut acc = vec![0.0; grid.len()];
    for row in &per_node {
        for (a, v) in acc.iter_mut().zip(row) {
            *a += v;
        }
    }
    Field::new(grid, acc.into_iter().map(|s| Complex64::new(s.sqrt(), 0.0)).collect()).expect("finite")
}

/// 𝒢^α(f, g) with the kernel symbol `2(α+1)(u/R²)(1 − u/R²)_+^α`.
pub fn bilinear_square_function(f: &Field, g: &Field, alpha: f64, q: &QuadratureSpec) -> Result<Field> {
    SymbolDescriptor::square_kernel(alpha, 1.0)?;
    let plan = BilinearPlan::new(f, g)?;
    if let Some((lo, hi)) = plan.occupied_range() {
        q.check_covers(lo, hi)?;
    }
    Ok(plan_square_function(&plan, q, |r| SymbolDescriptor::SquareKernel { alpha, r }))
}

/// Linear square function with `K̂_t(ξ) = 2(α+1)(|ξ|²/t²)(1 − |ξ|²/t²)_+^α`.
pub fn linear_square_function(f: &Field, alpha: f64, q: &QuadratureSpec) -> Result<Field> {
    if !(alpha > -1.0) {
        return Err(Error::InvalidArgument(format!("index α = {alpha} must exceed -1")));
    }
    let grid = *f.grid();
    let spec = forward_transform(f);
    let occupied = occupied(&spec);
    if occupied.is_empty() {
        return Ok(Field::zeros(grid));
    }
    let mut lo = f64::INFINITY;
    let mut hi: f64 = 0.0;
    for &(i, _) in &occupied {
        let u = joint_sq(grid.frequency(i), [0.0; 2]);
        if u > 0.0 {
            lo = lo.min(u);
            hi = hi.max(u);
        }
    }
    if hi > 0.0 {
        q.check_covers(lo, hi)?;
    }
    let per_node: Vec<Vec<f64>> = q
        .nodes()
        .par_iter()
        .zip(q.weights().par_iter())
        .map(|(&t, &w)| {
            let filtered = spec.multiply(|xi| {
                let s = joint_sq(xi, [0.0; 2]) / (t * t);
                Complex64::new(2.0 * (alpha + 1.0) * s * pos_pow(1.0 - s, alpha), 0.0)
            });
            inverse_transform(&filtered).values().iter().map(|v| w * v.norm_sqr()).collect()
        })
        .collect();
    let mut acc = vec![0.0; grid.len()];
    for row in &per_node {
        for (a, v) in acc.iter_mut().zip(row) {
            *a += v;
        }
    }
    Field::new(grid, acc.into_iter().map(|s| Complex64::new(s.sqrt(), 0.0)).collect())
}

/// A symbol family `s ↦ m_s` sampled on a finite scale grid.
pub struct ScaleFamily<S> {
    scales: Vec<f64>,
    symbol: S,
}

impl<M: Multiplier, S: Fn(f64) -> M + Sync> ScaleFamily<S> {
    pub fn new(scales: Vec<f64>, symbol: S) -> Result<Self> {
        if scales.is_empty() {
            return Err(Error::Empty("scale grid has no members".into()));
        }
        if scales.iter().any(|s| !(*s > 0.0 && s.is_finite())) {
            return Err(Error::InvalidArgument("scales must be positive".into()));
        }
        Ok(Self { scales, symbol })
    }

    /// Geometric grid `s_min · ratio^k` up to and including the last member `<= s_max`.
    pub fn geometric(s_min: f64, s_max: f64, ratio: f64, symbol: S) -> Result<Self> {
        if !(s_min > 0.0 && s_max >= s_min && ratio > 1.0) {
            return Err(Error::InvalidArgument(format!("bad geometric grid [{s_min}, {s_max}] ratio {ratio}")));
        }
        let count = ((s_max / s_min).ln() / ratio.ln() + 1e-9).floor() as usize + 1;
        let scales = (0..count).map(|k| s_min * ratio.powi(k as i32)).collect();
        Self::new(scales, symbol)
    }

    pub fn scales(&self) -> &[f64] {
        &self.scales
    }

    pub fn symbol_at(&self, s: f64) -> M {
        (self.symbol)(s)
    }
}

/// `T_{m_s}(f, g)` for every scale, in scale order.
pub fn apply_over_scales<M, S>(plan: &BilinearPlan, fam: &ScaleFamily<S>) -> Vec<Field>
where
    M: Multiplier,
    S: Fn(f64) -> M + Sync,
{
    fam.scales.par_iter().map(|&s| plan.apply(&fam.symbol_at(s))).collect()
}

pub fn maximal_over_scales<M, S>(f: &Field, g: &Field, fam: &ScaleFamily<S>) -> Result<Field>
where
    M: Multiplier,
    S: Fn(f64) -> M + Sync,
{
    let plan = BilinearPlan::new(f, g)?;
    Ok(plan_maximal(&plan, fam))
}

pub(crate) fn plan_maximal<M, S>(plan: &BilinearPlan, fam: &ScaleFamily<S>) -> Field
where
    M: Multiplier,
    S: Fn(f64) -> M + Sync,
{
    let outputs = apply_over_scales(plan, fam);
    let mut acc = vec![0.0f64; plan.grid.len()];
    for out in &outputs {
        for (a, v) in acc.iter_mut().zip(out.values()) {
            *a = a.max(v.norm());
        }
    }
    Field::new(plan.grid, acc.into_iter().map(|s| Complex64::new(s, 0.0)).collect()).expect("finite")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::make_grid;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn mode(grid: GridSpec, k: [i64; 2]) -> Field {
        Field::from_fn(grid, |x| {
            let ph = 2.0 * PI * grid.dxi() * (k[0] as f64 * x[0] + k[1] as f64 * x[1]);
            Complex64::from_polar(1.0, ph)
        })
    }

    fn band_limited(grid: GridSpec, rng: &mut ChaCha8Rng) -> Field {
        let coeffs = (0..grid.len())
            .map(|i| {
                if grid.in_half_band(i) {
                    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect();
        inverse_transform(&Spectrum::new(grid, coeffs).unwrap())
    }

    #[test]
    fn unit_symbol_gives_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in [1, 2] {
            let grid = make_grid(n, 16, 2.0).unwrap();
            let f = Field::new(grid, (0..grid.len()).map(|_| Complex64::new(rng.gen(), rng.gen())).collect()).unwrap();
            let g = Field::new(grid, (0..grid.len()).map(|_| Complex64::new(rng.gen(), rng.gen())).collect()).unwrap();
            let out = apply_bilinear(&f, &g, &|_: [f64; 2], _: [f64; 2]| Complex64::new(1.0, 0.0)).unwrap();
            let prod = f.zip_with(&g, |a, b| a * b).unwrap();
            assert!(out.max_diff(&prod).unwrap() < 1e-12);
        }
    }

    #[test]
    fn separable_symbol_factorizes() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let grid = make_grid(1, 32, 3.0).unwrap();
        let f = band_limited(grid, &mut rng);
        let g = band_limited(grid, &mut rng);
        let m1 = |xi: [f64; 2]| Complex64::new((-xi[0] * xi[0]).exp(), xi[0]);
        let m2 = |xi: [f64; 2]| Complex64::new(1.0 / (1.0 + xi[0] * xi[0]), 0.0);
        let out = apply_bilinear(&f, &g, &|a: [f64; 2], b: [f64; 2]| m1(a) * m2(b)).unwrap();
        let tf = inverse_transform(&forward_transform(&f).multiply(m1));
        let tg = inverse_transform(&forward_transform(&g).multiply(m2));
        let want = tf.zip_with(&tg, |a, b| a * b).unwrap();
        assert!(out.max_diff(&want).unwrap() < 1e-12);
    }

    #[test]
    fn pure_modes_pick_out_symbol_value() {
        let grid = make_grid(2, 16, 2.0).unwrap();
        let f = mode(grid, [1, 2]);
        let g = mode(grid, [-3, 1]);
        let out = bochner_riesz(&f, &g, 1.5, 2.0).unwrap();
        let xi = grid.frequency(grid.flatten([1, 2]));
        let eta = grid.frequency(grid.flatten([grid.slot(-3), 1]));
        let m = crate::symbols::br_symbol(1.5, 2.0, xi, eta).unwrap();
        let want = mode(grid, [-2, 3]).scale(Complex64::new(m, 0.0));
        assert!(out.max_diff(&want).unwrap() < 1e-12);
    }

    #[test]
    fn padding_factor_is_immaterial_for_band_limited_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let grid = make_grid(1, 64, 4.0).unwrap();
        let f = band_limited(grid, &mut rng);
        let g = band_limited(grid, &mut rng);
        let m = SymbolDescriptor::bochner_riesz(0.5, 1.5).unwrap();
        let a = BilinearPlan::with_pad(&f, &g, 2).unwrap().apply(&m);
        let b = BilinearPlan::with_pad(&f, &g, 4).unwrap().apply(&m);
        assert!(a.max_diff(&b).unwrap() <= 1e-12 * a.max_abs().max(1.0));
    }

    #[test]
    fn grid_mismatch_rejected() {
        let a = Field::zeros(make_grid(1, 16, 1.0).unwrap());
        let b = Field::zeros(make_grid(1, 32, 1.0).unwrap());
        assert!(matches!(apply_bilinear(&a, &b, &SymbolDescriptor::AnnulusPiece { j: 2 }), Err(Error::GridMismatch)));
    }

    #[test]
    fn quadrature_rules() {
        let q = QuadratureSpec::new(0.1, 10.0, 33).unwrap();
        let s: f64 = q.weights().iter().sum();
        assert!((s - 100f64.ln()).abs() < 1e-14);
        assert!(QuadratureSpec::new(1.0, 2.0, 15).is_err());
        assert!(QuadratureSpec::new(2.0, 1.0, 20).is_err());
        let c = QuadratureSpec::covering(0.5, 8.0, 64).unwrap();
        assert!(c.check_covers(0.5, 8.0).is_ok());
        assert!((c.r_max() - COVERING_HEADROOM * 8f64.sqrt()).abs() < 1e-10);
        assert!(c.check_covers(0.1, 8.0).is_err());
    }

    #[test]
    fn square_function_of_pure_modes() {
        let grid = make_grid(1, 32, 4.0).unwrap();
        let f = mode(grid, [2, 0]);
        let g = mode(grid, [3, 0]);
        for alpha in [0.0, 0.5, 1.0, 2.0] {
            let plan = BilinearPlan::new(&f, &g).unwrap();
            let q = plan.covering_quadrature(512).unwrap();
            let out = bilinear_square_function(&f, &g, alpha, &q).unwrap();
            let want = ((alpha + 1.0) / (2.0 * alpha + 1.0)).sqrt();
            for v in out.values() {
                assert!((v.re - want).abs() < 1e-3, "α={alpha}: {} vs {want}", v.re);
            }
        }
        let zero = Field::zeros(grid);
        let q = QuadratureSpec::new(0.01, 100.0, 64).unwrap();
        assert_eq!(bilinear_square_function(&zero, &zero, 1.0, &q).unwrap().max_abs(), 0.0);
    }

    #[test]
    fn linear_square_function_of_pure_mode() {
        let grid = make_grid(1, 32, 4.0).unwrap();
        let f = mode(grid, [3, 0]);
        let u = (3.0 * grid.dxi()).powi(2);
        let q = QuadratureSpec::covering(u, u, 512).unwrap();
        for alpha in [0.5, 1.0] {
            let out = linear_square_function(&f, alpha, &q).unwrap();
            let want = ((alpha + 1.0) / (2.0 * alpha + 1.0)).sqrt();
            assert!(out.values().iter().all(|v| (v.re - want).abs() < 1e-3));
        }
        assert_eq!(linear_square_function(&Field::zeros(grid), 1.0, &q).unwrap().max_abs(), 0.0);
    }

    #[test]
    fn dc_partner_collapses_to_linear_square_function() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let grid = make_grid(1, 32, 4.0).unwrap();
        let f = band_limited(grid, &mut rng);
        let c = Complex64::new(0.7, -0.2);
        let g = Field::from_fn(grid, |_| c);
        let plan = BilinearPlan::new(&f, &g).unwrap();
        let q = plan.covering_quadrature(256).unwrap();
        let bil = bilinear_square_function(&f, &g, 1.0, &q).unwrap();
        let lin = linear_square_function(&f, 1.0, &q).unwrap();
        let want = lin.scale(Complex64::new(c.norm(), 0.0));
        assert!(bil.max_diff(&want).unwrap() < 1e-12 * want.max_abs());
    }

    #[test]
    fn maximal_function_basics() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let grid = make_grid(1, 32, 4.0).unwrap();
        let f = band_limited(grid, &mut rng);
        let g = band_limited(grid, &mut rng);
        let one = ScaleFamily::new(vec![1.0, 2.0], |_s| |_: [f64; 2], _: [f64; 2]| Complex64::new(1.0, 0.0)).unwrap();
        let prod = f.zip_with(&g, |a, b| Complex64::new((a * b).norm(), 0.0)).unwrap();
        assert!(maximal_over_scales(&f, &g, &one).unwrap().max_diff(&prod).unwrap() < 1e-12);

        let single = ScaleFamily::new(vec![1.3], |s| SymbolDescriptor::BochnerRiesz { alpha: 1.0, r: s }).unwrap();
        let direct = bochner_riesz(&f, &g, 1.0, 1.3).unwrap().map(|v| Complex64::new(v.norm(), 0.0));
        assert!(maximal_over_scales(&f, &g, &single).unwrap().max_diff(&direct).unwrap() < 1e-14);

        let small = ScaleFamily::geometric(0.5, 2.0, 2f64.powf(0.25), |s| SymbolDescriptor::BochnerRiesz { alpha: 1.0, r: s }).unwrap();
        let big = ScaleFamily::geometric(0.5, 4.0, 2f64.powf(0.25), |s| SymbolDescriptor::BochnerRiesz { alpha: 1.0, r: s }).unwrap();
        assert_eq!(small.scales().len(), 9);
        let a = maximal_over_scales(&f, &g, &small).unwrap();
        let b = maximal_over_scales(&f, &g, &big).unwrap();
        assert!(a.values().iter().zip(b.values()).all(|(x, y)| y.re >= x.re));
        assert!(ScaleFamily::new(vec![], |s| SymbolDescriptor::BochnerRiesz { alpha: 1.0, r: s }).is_err());
    }
}
