//! Dyadic cubes on the grid, sparse families built by a stopping time, the bilinear
//! sparse operator, the oscillation functional `ω_η` and kernel regularity checks.
//!
//! Cubes live on the periodic index torus: a cube of a shifted lattice may wrap
//! around the box edge. Dilated cubes used by the oscillation condition are instead
//! clipped to the box.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kernel::RadialKernel;
use crate::ops::{bilinear_square_function, BilinearPlan};
use crate::quad::gauss_legendre;
use crate::spectral::{fmt_f64, Field, GridSpec};

/// A dyadic cube in grid units.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cube {
    pub level: u32,
    /// Lower corner as grid indices, taken modulo the grid size.
    pub corner: [usize; 2],
    /// Side length in grid cells.
    pub side: usize,
}

impl Cube {
    pub fn top(grid: &GridSpec, shift: [usize; 2]) -> Self {
        Self { level: 0, corner: shift, side: grid.size() }
    }

    /// The `2^n` children, each of half the side.
    pub fn children(&self, grid: &GridSpec) -> Vec<Cube> {
        if self.side < 2 {
            return Vec::new();
        }
        let h = self.side / 2;
        let n = grid.size();
        let offsets: &[[usize; 2]] = if grid.dim() == 1 { &[[0, 0], [1, 0]] } else { &[[0, 0], [1, 0], [0, 1], [1, 1]] };
        offsets
            .iter()
            .map(|o| Cube { level: self.level + 1, corner: [(self.corner[0] + o[0] * h) % n, (self.corner[1] + o[1] * h) % n], side: h })
            .collect()
    }

    /// Flat grid indices of the cube's points.
    pub fn points(&self, grid: &GridSpec) -> Vec<usize> {
        let n = grid.size();
        let axis = |c: usize| (0..self.side).map(move |o| (c + o) % n);
        if grid.dim() == 1 {
            axis(self.corner[0]).collect()
        } else {
            axis(self.corner[0]).flat_map(|i| axis(self.corner[1]).map(move |j| grid.flatten([i, j]))).collect()
        }
    }

    pub fn cell_count(&self, grid: &GridSpec) -> usize {
        self.side.pow(grid.dim() as u32)
    }

    fn check(&self, grid: &GridSpec) -> Result<()> {
        let n = grid.size();
        if self.side == 0 || self.side > n || !self.side.is_power_of_two() || self.corner[0] >= n || (grid.dim() == 2 && self.corner[1] >= n) {
            return Err(Error::InvalidArgument(format!("cube {self:?} does not fit a grid of size {n}")));
        }
        Ok(())
    }
}

/// Mean of `|f|` over the grid points of `q`.
pub fn cube_average(f: &Field, q: &Cube) -> Result<f64> {
    q.check(f.grid())?;
    let pts = q.points(f.grid());
    let s: f64 = pts.iter().map(|&i| f.values()[i].norm()).sum();
    Ok(s / pts.len() as f64)
}

/// One sparse family: cubes with their pairwise-disjoint majority sets.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseFamily {
    pub shift_id: usize,
    pub shift: [usize; 2],
    pub nu: f64,
    pub cubes: Vec<Cube>,
    /// `E_Q` as sorted flat indices, aligned with `cubes`.
    pub majority: Vec<Vec<usize>>,
    /// Stopping generation of each cube; the top cube is generation 0.
    pub generation: Vec<usize>,
}

impl SparseFamily {
    pub const CSV_HEADER_1D: &'static str = "shift_id,level,corner_0,EQ_cell_count";
    pub const CSV_HEADER_2D: &'static str = "shift_id,level,corner_0,corner_1,EQ_cell_count";

    /// Checks `E_Q ⊆ Q`, `|E_Q| ≥ (1−ν)|Q|` and pairwise disjointness, exactly.
    pub fn verify(&self, grid: &GridSpec) -> Result<()> {
        let mut seen = vec![false; grid.len()];
        for (q, e) in self.cubes.iter().zip(&self.majority) {
            let pts = q.points(grid);
            let mut inside = vec![false; grid.len()];
            for &p in &pts {
                inside[p] = true;
            }
            for &p in e {
                if !inside[p] {
                    return Err(Error::Sparsity(format!("E_Q escapes cube {q:?}")));
                }
                if seen[p] {
                    return Err(Error::Sparsity(format!("majority sets overlap at index {p}")));
                }
                seen[p] = true;
            }
            // |E_Q| ≥ (1−ν)|Q| in integer arithmetic up to the rounding of ν.
            if (e.len() as f64) < (1.0 - self.nu) * pts.len() as f64 {
                return Err(Error::Sparsity(format!("|E_Q| = {} below (1 − {})·{} for cube {q:?}", e.len(), self.nu, pts.len())));
            }
        }
        Ok(())
    }

    /// Number of cubes per stopping generation.
    pub fn generation_counts(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for &g in &self.generation {
            if counts.len() <= g {
                counts.resize(g + 1, 0);
            }
            counts[g] += 1;
        }
        counts
    }

    pub fn to_csv(&self, grid: &GridSpec) -> String {
        let mut out = String::new();
        for (q, e) in self.cubes.iter().zip(&self.majority) {
            if grid.dim() == 1 {
                let _ = writeln!(out, "{},{},{},{}", self.shift_id, q.level, q.corner[0], e.len());
            } else {
                let _ = writeln!(out, "{},{},{},{},{}", self.shift_id, q.level, q.corner[0], q.corner[1], e.len());
            }
        }
        out
    }
}

/// Lattice shift `t·⌊N/3⌋` per axis; `3^n` shifts in total.
pub fn lattice_shifts(grid: &GridSpec) -> Vec<[usize; 2]> {
    let third = grid.size() / 3;
    if grid.dim() == 1 {
        (0..3).map(|t| [t * third, 0]).collect()
    } else {
        (0..9).map(|t| [(t % 3) * third, (t / 3) * third]).collect()
    }
}

/// Calderón–Zygmund stopping time on one shifted lattice; the result is verified.
pub fn build_sparse_family(f: &Field, g: &Field, nu: f64, lambda: f64, shift_id: usize) -> Result<SparseFamily> {
    if f.grid() != g.grid() {
        return Err(Error::GridMismatch);
    }
    if !(nu > 0.0 && nu < 1.0) || !(lambda > 1.0) {
        return Err(Error::InvalidArgument(format!("need 0 < ν < 1 and Λ > 1, got ({nu}, {lambda})")));
    }
    let grid = *f.grid();
    if !grid.size().is_power_of_two() {
        return Err(Error::InvalidGrid("dyadic lattices need a power-of-two grid".into()));
    }
    let shifts = lattice_shifts(&grid);
    let shift = *shifts.get(shift_id).ok_or_else(|| Error::InvalidArgument(format!("shift id {shift_id} out of range")))?;
    let af: Vec<f64> = f.values().iter().map(|v| v.norm()).collect();
    let ag: Vec<f64> = g.values().iter().map(|v| v.norm()).collect();
    let avg = |q: &Cube| -> f64 {
        let pts = q.points(&grid);
        let k = pts.len() as f64;
        let sf: f64 = pts.iter().map(|&i| af[i]).sum();
        let sg: f64 = pts.iter().map(|&i| ag[i]).sum();
        (sf / k) * (sg / k)
    };

    let mut cubes = Vec::new();
    let mut majority = Vec::new();
    let mut generation = Vec::new();
    let mut queue = vec![(Cube::top(&grid, shift), 0usize)];
    while let Some((q, gen)) = queue.pop() {
        let threshold = lambda * avg(&q);
        let mut stopped = Vec::new();
        let mut stack = q.children(&grid);
        while let Some(c) = stack.pop() {
            if avg(&c) > threshold {
                stopped.push(c);
            } else {
                stack.extend(c.children(&grid));
            }
        }
        let mut taken = vec![false; grid.len()];
        for c in &stopped {
            for p in c.points(&grid) {
                taken[p] = true;
            }
        }
        let mut e: Vec<usize> = q.points(&grid).into_iter().filter(|&p| !taken[p]).collect();
        e.sort_unstable();
        cubes.push(q);
        majority.push(e);
        generation.push(gen);
        // Reverse so children are processed in emission order.
        stopped.sort_by_key(|c| (c.corner[1], c.corner[0]));
        queue.extend(stopped.into_iter().rev().map(|c| (c, gen + 1)));
    }
    let family = SparseFamily { shift_id, shift, nu, cubes, majority, generation };
    family.verify(&grid)?;
    Ok(family)
}

/// All `3^n` shifted families, built in parallel.
pub fn build_sparse_families(f: &Field, g: &Field, nu: f64, lambda: f64) -> Result<Vec<SparseFamily>> {
    let count = lattice_shifts(f.grid()).len();
    (0..count).into_par_iter().map(|k| build_sparse_family(f, g, nu, lambda, k)).collect()
}

/// `Σ_Q ⟨f⟩_Q ⟨g⟩_Q χ_Q`.
pub fn sparse_operator(family: &SparseFamily, f: &Field, g: &Field) -> Result<Vec<f64>> {
    if f.grid() != g.grid() {
        return Err(Error::GridMismatch);
    }
    let grid = *f.grid();
    family.verify(&grid)?;
    let mut out = vec![0.0; grid.len()];
    for q in &family.cubes {
        let w = cube_average(f, q)? * cube_average(g, q)?;
        for p in q.points(&grid) {
            out[p] += w;
        }
    }
    Ok(out)
}

/// `ω_η` on raw values: drop `⌊η·len⌋` points to minimize the remaining spread.
pub fn oscillation_eta_values(values: &[f64], eta: f64) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let k = ((eta * v.len() as f64).floor() as usize).min(v.len() - 1);
    let m = v.len() - k;
    (0..=k).map(|i| v[i + m - 1] - v[i]).fold(f64::INFINITY, f64::min)
}

/// `ω_η(h, Q)` using the real part of `h`.
pub fn oscillation_eta(h: &Field, q: &Cube, eta: f64) -> Result<f64> {
    if !(eta > 0.0 && eta < 1.0) {
        return Err(Error::InvalidArgument(format!("η = {eta} must lie in (0, 1)")));
    }
    q.check(h.grid())?;
    let vals: Vec<f64> = q.points(h.grid()).iter().map(|&i| h.values()[i].re).collect();
    Ok(oscillation_eta_values(&vals, eta))
}

/// Average of `|f|` over `2^{k+1}Q` clipped to the box.
fn clipped_average(f: &Field, q: &Cube, factor: usize) -> f64 {
    let grid = f.grid();
    let n = grid.size() as isize;
    let side = (q.side * factor) as isize;
    let range = |c: usize| {
        let centre2 = 2 * c as isize + q.side as isize;
        let lo = ((centre2 - side) / 2).max(0);
        let hi = ((centre2 + side) / 2).min(n);
        lo as usize..hi as usize
    };
    let mut s = 0.0;
    let mut count = 0usize;
    if grid.dim() == 1 {
        for i in range(q.corner[0]) {
            s += f.values()[i].norm();
            count += 1;
        }
    } else {
        for i in range(q.corner[0]) {
            for j in range(q.corner[1]) {
                s += f.values()[grid.flatten([i, j])].norm();
                count += 1;
            }
        }
    }
    s / count as f64
}

/// Smallest `C` with `ω_η(h,Q) ≤ C Σ_{k≤K} 2^{−δk} ⟨f⟩_{2^{k+1}Q}⟨g⟩_{2^{k+1}Q}` for a given `h`.
pub fn ln_condition_ratio(h: &Field, f: &Field, g: &Field, q: &Cube, eta: f64, delta: f64, tail: usize) -> Result<f64> {
    q.check(f.grid())?;
    let n = f.grid().size();
    if (0..f.grid().dim()).any(|d| q.corner[d] + q.side > n) {
        return Err(Error::InvalidArgument("cube must not wrap around the box".into()));
    }
    let lhs = oscillation_eta(h, q, eta)?;
    let mut rhs = 0.0;
    for k in 0..=tail {
        let factor = 1usize << (k + 1);
        rhs += 2f64.powf(-delta * k as f64) * clipped_average(f, q, factor) * clipped_average(g, q, factor);
    }
    if rhs == 0.0 {
        if lhs > 0.0 {
            return Err(Error::Degenerate("right side vanishes while the oscillation is positive".into()));
        }
        return Ok(0.0);
    }
    Ok(lhs / rhs)
}

/// The oscillation condition with `h = 𝒢^α(f,g)`, using a covering rule of `nodes` nodes.
#[allow(clippy::too_many_arguments)]
pub fn ln_condition_check(f: &Field, g: &Field, alpha: f64, q: &Cube, eta: f64, delta: f64, tail: usize, nodes: usize) -> Result<f64> {
    let h = square_function_auto(f, g, alpha, nodes)?;
    ln_condition_ratio(&h, f, g, q, eta, delta, tail)
}

fn square_function_auto(f: &Field, g: &Field, alpha: f64, nodes: usize) -> Result<Field> {
    let plan = BilinearPlan::new(f, g)?;
    match plan.occupied_range() {
        None => Ok(Field::zeros(*f.grid())),
        Some(_) => {
            let q = plan.covering_quadrature(nodes)?;
            bilinear_square_function(f, g, alpha, &q)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DominationReport {
    /// Smallest `C` with `𝒢^α ≤ C Σ_k S_k` on the grid.
    pub constant: f64,
    pub families: Vec<SparseFamily>,
    pub generation_counts: Vec<Vec<usize>>,
}

/// Empirical sparse domination constant of `𝒢^α(f, g)` for `α > n − 1/2`.
pub fn verify_sparse_domination(f: &Field, g: &Field, alpha: f64, nu: f64, lambda: f64, nodes: usize) -> Result<DominationReport> {
    let n = f.grid().dim() as f64;
    if !(alpha > n - 0.5) {
        return Err(Error::InvalidArgument(format!("sparse domination needs α > n − 1/2, got {alpha}")));
    }
    let h = square_function_auto(f, g, alpha, nodes)?;
    let families = build_sparse_families(f, g, nu, lambda)?;
    let mut rhs = vec![0.0; f.grid().len()];
    for fam in &families {
        for (r, v) in rhs.iter_mut().zip(sparse_operator(fam, f, g)?) {
            *r += v;
        }
    }
    let mut c: f64 = 0.0;
    for (i, (l, r)) in h.values().iter().zip(&rhs).enumerate() {
        let l = l.re;
        if *r > 0.0 {
            c = c.max(l / r);
        } else if l > 1e-12 {
            return Err(Error::Uncovered { index: i, left: l });
        }
    }
    let generation_counts = families.iter().map(|f| f.generation_counts()).collect();
    Ok(DominationReport { constant: c, families, generation_counts })
}

#[derive(Debug, Clone, PartialEq)]
pub struct KernelRegularityReport {
    pub alpha: f64,
    pub delta: f64,
    pub max_ratio: f64,
    pub samples: usize,
    /// `(r_max, value)` of the truncated regularity integral.
    pub truncations: Vec<(f64, f64)>,
    /// Ratio of successive increments of the truncated integral; below one means saturating.
    pub increment_ratios: Vec<f64>,
}

/// Left/right ratio of the kernel regularity estimate at one `(r, s, R)`.
pub fn kernel_regularity_ratio(kernel: &RadialKernel, delta: f64, r: f64, s: f64, big_r: f64) -> f64 {
    let n = kernel.n as f64;
    let lhs = (kernel.eval(big_r, r + s) - kernel.eval(big_r, r)).abs() / big_r.sqrt();
    let decay = r.powf(-(2.0 * n + delta));
    let rhs = (big_r.powf(-0.5 - delta) * decay).min(s.abs() * big_r.powf(0.5 - delta) * decay);
    if lhs == 0.0 {
        0.0
    } else {
        lhs / rhs
    }
}

/// Seeded `(r, s, R)` samples with `0 < 2s < r`.
pub fn regularity_samples(seed: u64, count: usize) -> Vec<(f64, f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let r = 10f64.powf(rng.gen_range(-1.0..2.0));
            let s = r * 0.5 * rng.gen_range(1e-3..1.0);
            let big_r = 10f64.powf(rng.gen_range(-2.0..2.0));
            (r, s, big_r)
        })
        .collect()
}

/// `{∫_0^∞ |K_R(r+s) − K_R(r)|²/R dR}^{1/2}`, truncated at `R = 400/r`.
fn regularity_inner(kernel: &RadialKernel, r: f64, s: f64) -> f64 {
    let (x, w) = gauss_legendre(8);
    let hi = 400.0 / r;
    let panels = 1600;
    let h = hi / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let a = p as f64 * h;
        for (xi, wi) in x.iter().zip(&w) {
            let big_r = a + 0.5 * h * (xi + 1.0);
            let d = kernel.eval(big_r, r + s) - kernel.eval(big_r, r);
            total += 0.5 * h * wi * d * d / big_r;
        }
    }
    total.sqrt()
}

/// Pointwise ratios over seeded samples, plus the truncated regularity integral
/// `∫_{2s}^{r_max} {…}^{1/2} r^{2n−1} dr` at doubling `r_max`.
pub fn kernel_regularity_check(alpha: f64, n: usize, seed: u64, count: usize, s: f64) -> Result<KernelRegularityReport> {
    let delta = alpha - (n as f64 - 0.5);
    if !(delta > 0.0) {
        return Err(Error::InvalidArgument(format!("need α > n − 1/2, got α = {alpha}")));
    }
    if !(s > 0.0) {
        return Err(Error::InvalidArgument("shift s must be positive".into()));
    }
    let kernel = RadialKernel::new(alpha, n)?;
    let samples = regularity_samples(seed, count);
    let max_ratio = samples.par_iter().map(|&(r, s, big_r)| kernel_regularity_ratio(&kernel, delta, r, s, big_r)).reduce(|| 0.0, f64::max);

    let (x, w) = gauss_legendre(8);
    let mut edges = vec![2.0 * s];
    for _ in 0..6 {
        let last = *edges.last().expect("nonempty");
        edges.push(last * 4.0);
    }
    let pieces: Vec<f64> = edges
        .windows(2)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|e| {
            // log-substitution r = e^τ within each piece
            let (la, lb) = (e[0].ln(), e[1].ln());
            let panels = 16;
            let h = (lb - la) / panels as f64;
            let mut acc = 0.0;
            for p in 0..panels {
                for (xi, wi) in x.iter().zip(&w) {
                    let r = (la + h * (p as f64 + 0.5 * (xi + 1.0))).exp();
                    acc += 0.5 * h * wi * regularity_inner(&kernel, r, s) * r.powi(2 * n as i32);
                }
            }
            acc
        })
        .collect();
    let mut truncations = Vec::new();
    let mut total = 0.0;
    for (e, v) in edges[1..].iter().zip(&pieces) {
        total += v;
        truncations.push((*e, total));
    }
    let increment_ratios = pieces.windows(2).map(|p| p[1] / p[0]).collect();
    Ok(KernelRegularityReport { alpha, delta, max_ratio, samples: count, truncations, increment_ratios })
}

impl KernelRegularityReport {
    pub fn saturating(&self) -> bool {
        let tail = &self.increment_ratios[self.increment_ratios.len().saturating_sub(3)..];
        !tail.is_empty() && tail.iter().all(|r| *r < 1.0)
    }

    pub fn summary(&self) -> String {
        let last = self.truncations.last().map_or(0.0, |t| t.1);
        format!("max_ratio={};integral={};saturating={}", fmt_f64(self.max_ratio), fmt_f64(last), self.saturating())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::make_grid;
    use num_complex::Complex64;

    fn bumps(size: usize) -> (Field, Field) {
        let grid = make_grid(1, size, 8.0).unwrap();
        let f = Field::from_real(grid, |x| (-std::f64::consts::PI * (x[0] - 0.5).powi(2)).exp());
        let g = Field::from_real(grid, |x| (-std::f64::consts::PI * (x[0] + 1.0).powi(2) / 2.0).exp());
        (f, g)
    }

    #[test]
    fn averages() {
        let grid = make_grid(1, 16, 1.0).unwrap();
        let c = Field::from_real(grid, |_| -3.0);
        let q = Cube { level: 1, corner: [8, 0], side: 8 };
        assert_eq!(cube_average(&c, &q).unwrap(), 3.0);
        let half = Field::from_fn(grid, |x| Complex64::new(if x[0] < 0.5 { 1.0 } else { 0.0 }, 0.0));
        assert_eq!(cube_average(&half, &q).unwrap(), 0.5);
        assert!(cube_average(&c, &Cube { level: 0, corner: [0, 0], side: 32 }).is_err());
    }

    #[test]
    fn constant_inputs_give_single_cube() {
        let grid = make_grid(1, 64, 1.0).unwrap();
        let one = Field::from_real(grid, |_| 1.0);
        let fam = build_sparse_family(&one, &one, 0.5, 4.0, 0).unwrap();
        assert_eq!(fam.cubes.len(), 1);
        assert_eq!(fam.majority[0].len(), 64);
        assert!(sparse_operator(&fam, &one, &one).unwrap().iter().all(|v| (*v - 1.0).abs() < 1e-15));
    }

    #[test]
    fn point_mass_gives_nested_chain() {
        let grid = make_grid(1, 64, 1.0).unwrap();
        let delta = Field::new(grid, (0..64).map(|i| Complex64::new(if i == 37 { 1.0 } else { 0.0 }, 0.0)).collect()).unwrap();
        let fam = build_sparse_family(&delta, &delta, 0.5, 2.0, 0).unwrap();
        assert!(fam.cubes.len() > 2);
        for w in fam.cubes.windows(2) {
            assert!(w[1].side < w[0].side);
            assert!(w[1].points(&grid).contains(&37));
        }
        fam.verify(&grid).unwrap();
    }

    #[test]
    fn sliding_window_matches_subsets() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let v: Vec<f64> = (0..12).map(|_| rng.gen::<f64>()).collect();
            let fast = oscillation_eta_values(&v, 0.25);
            let mut best = f64::INFINITY;
            for a in 0..12 {
                for b in a + 1..12 {
                    for c in b + 1..12 {
                        let rest: Vec<f64> = (0..12).filter(|&i| i != a && i != b && i != c).map(|i| v[i]).collect();
                        let hi = rest.iter().cloned().fold(f64::MIN, f64::max);
                        let lo = rest.iter().cloned().fold(f64::MAX, f64::min);
                        best = best.min(hi - lo);
                    }
                }
            }
            assert_eq!(fast, best);
        }
        assert_eq!(oscillation_eta_values(&[2.0; 9], 0.3), 0.0);
        assert_eq!(oscillation_eta_values(&[1.0, 1.5, 1.2, 90.0], 0.25), 0.5);
    }

    #[test]
    fn domination_is_scale_invariant() {
        let (f, g) = bumps(128);
        let a = verify_sparse_domination(&f, &g, 1.0, 0.5, 4.0, 128).unwrap();
        assert!(a.constant.is_finite() && a.constant > 0.0);
        let f2 = f.scale(Complex64::new(2.0, 0.0));
        let g3 = g.scale(Complex64::new(3.0, 0.0));
        let b = verify_sparse_domination(&f2, &g3, 1.0, 0.5, 4.0, 128).unwrap();
        assert!((a.constant - b.constant).abs() <= 1e-9 * a.constant);
        let zero = Field::zeros(*f.grid());
        assert_eq!(verify_sparse_domination(&zero, &zero, 1.0, 0.5, 4.0, 128).unwrap().constant, 0.0);
        assert!(verify_sparse_domination(&f, &g, 0.5, 0.5, 4.0, 128).is_err());
    }

    #[test]
    fn condition_ratio_basics() {
        let (f, g) = bumps(128);
        let q = Cube { level: 3, corner: [48, 0], side: 16 };
        let r = ln_condition_check(&f, &g, 1.0, &q, 0.125, 0.5, 6, 128).unwrap();
        assert!(r.is_finite() && r > 0.0);
        let zero = Field::zeros(*f.grid());
        assert_eq!(ln_condition_check(&zero, &zero, 1.0, &q, 0.125, 0.5, 6, 128).unwrap(), 0.0);
    }

    #[test]
    fn regularity_ratio_finite() {
        let k = RadialKernel::new(1.0, 1).unwrap();
        assert_eq!(kernel_regularity_ratio(&k, 0.5, 10.0, 0.0, 1.0), 0.0);
        assert!(kernel_regularity_ratio(&k, 0.5, 10.0, 0.1, 1.0).is_finite());
    }
}
