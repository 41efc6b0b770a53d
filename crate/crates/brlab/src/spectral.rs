//! Periodic sampling of `[-L, L)^n` and the Fourier transform pair.
//!
//! The transform carries the physical measure factors: the forward transform
//! approximates `f̂(ξ) = ∫ f(x) e^{-2πi x·ξ} dx` by a Riemann sum, and the
//! inverse multiplies by `(1/(2L))^n`, so the pair is an exact round trip.
//! Spectra are stored in FFT order: slot `j` on an axis holds the integer
//! wavenumber `j` for `j < N/2` and `j - N` otherwise.

use std::fmt::Write as _;
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    n: usize,
    size: usize,
    half_width: f64,
}

pub fn make_grid(n: usize, size: usize, half_width: f64) -> Result<GridSpec> {
    GridSpec::new(n, size, half_width)
}

impl GridSpec {
    pub fn new(n: usize, size: usize, half_width: f64) -> Result<Self> {
        if n != 1 && n != 2 {
            return Err(Error::InvalidGrid(format!("dimension {n} not in {{1,2}}")));
        }
        if size < 8 || !size.is_power_of_two() {
            return Err(Error::InvalidGrid(format!("N = {size} is not a power of two >= 8")));
        }
        if !(half_width > 0.0 && half_width.is_finite()) {
            return Err(Error::InvalidGrid(format!("half-width {half_width} must be positive")));
        }
        Ok(Self { n, size, half_width })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Samples per axis.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn len(&self) -> usize {
        self.size.pow(self.n as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dx(&self) -> f64 {
        2.0 * self.half_width / self.size as f64
    }

    pub fn dxi(&self) -> f64 {
        0.5 / self.half_width
    }

    /// Volume element `Δx^n`.
    pub fn cell_volume(&self) -> f64 {
        self.dx().powi(self.n as i32)
    }

    pub fn box_volume(&self) -> f64 {
        (2.0 * self.half_width).powi(self.n as i32)
    }

    /// Same box, `factor` times as many samples per axis.
    pub fn refined(&self, factor: usize) -> Result<Self> {
        Self::new(self.n, self.size * factor, self.half_width)
    }

    /// Coordinate of sample `i` along one axis.
    pub fn coord(&self, i: usize) -> f64 {
        -self.half_width + i as f64 * self.dx()
    }

    /// Integer wavenumber stored in FFT slot `j`.
    pub fn wavenumber(&self, j: usize) -> i64 {
        if j < self.size / 2 {
            j as i64
        } else {
            j as i64 - self.size as i64
        }
    }

    /// FFT slot holding integer wavenumber `k` (taken modulo N).
    pub fn slot(&self, k: i64) -> usize {
        k.rem_euclid(self.size as i64) as usize
    }

    /// Per-axis indices of flat index `i` (row-major, last axis fastest).
    pub fn unflatten(&self, i: usize) -> [usize; 2] {
        if self.n == 1 {
            [i, 0]
        } else {
            [i / self.size, i % self.size]
        }
    }

    pub fn flatten(&self, idx: [usize; 2]) -> usize {
        if self.n == 1 {
            idx[0]
        } else {
            idx[0] * self.size + idx[1]
        }
    }

    /// Spatial point of flat index `i`; unused trailing entries are zero.
    pub fn point(&self, i: usize) -> [f64; 2] {
        let idx = self.unflatten(i);
        let mut x = [0.0; 2];
        for a in 0..self.n {
            x[a] = self.coord(idx[a]);
        }
        x
    }

    /// Frequency of flat spectral index `i`.
    pub fn frequency(&self, i: usize) -> [f64; 2] {
        let k = self.wavenumbers(i);
        let mut xi = [0.0; 2];
        for a in 0..self.n {
            xi[a] = k[a] as f64 * self.dxi();
        }
        xi
    }

    pub fn wavenumbers(&self, i: usize) -> [i64; 2] {
        let idx = self.unflatten(i);
        let mut k = [0i64; 2];
        for a in 0..self.n {
            k[a] = self.wavenumber(idx[a]);
        }
        k
    }

    /// True when every axis wavenumber satisfies `|k| <= N/4`.
    pub fn in_half_band(&self, i: usize) -> bool {
        let k = self.wavenumbers(i);
        let lim = (self.size / 4) as i64;
        k[..self.n].iter().all(|k| k.abs() <= lim)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    grid: GridSpec,
    values: Vec<Complex64>,
}

impl Field {
    pub fn new(grid: GridSpec, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::InvalidArgument(format!(
                "field has {} values, grid needs {}",
                values.len(),
                grid.len()
            )));
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::InvalidArgument("field contains non-finite values".into()));
        }
        Ok(Self { grid, values })
    }

    pub fn zeros(grid: GridSpec) -> Self {
        Self { grid, values: vec![Complex64::new(0.0, 0.0); grid.len()] }
    }

    /// Samples `f` at every grid point; `f` receives `[x_0, x_1]` (unused axes are 0).
    pub fn from_fn(grid: GridSpec, f: impl Fn([f64; 2]) -> Complex64) -> Self {
        let values = (0..grid.len()).map(|i| f(grid.point(i))).collect();
        Self { grid, values }
    }

    pub fn from_real(grid: GridSpec, f: impl Fn([f64; 2]) -> f64) -> Self {
        Self::from_fn(grid, |x| Complex64::new(f(x), 0.0))
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self { grid: self.grid, values: self.values.iter().map(|&v| f(v)).collect() }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.map(|v| v * c)
    }

    pub fn abs(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm()).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.norm()))
    }

    pub fn zip_with(&self, other: &Field, f: impl Fn(Complex64, Complex64) -> Complex64) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        let values = self.values.iter().zip(&other.values).map(|(&a, &b)| f(a, b)).collect();
        Ok(Self { grid: self.grid, values })
    }

    /// `sup |self - other|`.
    pub fn max_diff(&self, other: &Field) -> Result<f64> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        Ok(self.values.iter().zip(&other.values).fold(0.0, |m, (a, b)| m.max((a - b).norm())))
    }

    /// CSV with columns `index_0..index_{n-1}, re, im`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for a in 0..self.grid.n {
            let _ = write!(out, "index_{a},");
        }
        out.push_str("re,im\n");
        for (i, v) in self.values.iter().enumerate() {
            let idx = self.grid.unflatten(i);
            for a in idx.iter().take(self.grid.n) {
                let _ = write!(out, "{a},");
            }
            let _ = writeln!(out, "{},{}", fmt_f64(v.re), fmt_f64(v.im));
        }
        out
    }

    /// Parses the format written by [`Field::to_csv`]; lines starting with `#` are skipped.
    pub fn from_csv(grid: GridSpec, text: &str) -> Result<Self> {
        let mut values = vec![Complex64::new(0.0, 0.0); grid.len()];
        let mut seen = vec![false; grid.len()];
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));
        let header_cols = grid.n + 2;
        match lines.next() {
            Some((_, h)) if h.split(',').count() == header_cols => {}
            Some((no, _)) => return Err(Error::Csv { line: no + 1, msg: "unexpected header".into() }),
            None => return Err(Error::Csv { line: 1, msg: "missing header".into() }),
        }
        for (no, line) in lines {
            let cols: Vec<&str> = line.split(',').map(str::trim).collect();
            let bad = |msg: &str| Error::Csv { line: no + 1, msg: msg.to_string() };
            if cols.len() != header_cols {
                return Err(bad("wrong column count"));
            }
            let mut idx = [0usize; 2];
            for a in 0..grid.n {
                idx[a] = cols[a].parse().map_err(|_| bad("bad index"))?;
                if idx[a] >= grid.size {
                    return Err(bad("index out of range"));
                }
            }
            let re: f64 = cols[grid.n].parse().map_err(|_| bad("bad real part"))?;
            let im: f64 = cols[grid.n + 1].parse().map_err(|_| bad("bad imaginary part"))?;
            let flat = grid.flatten(idx);
            values[flat] = Complex64::new(re, im);
            seen[flat] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Csv { line: 0, msg: "missing grid points".into() });
        }
        Field::new(grid, values)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    grid: GridSpec,
    coeffs: Vec<Complex64>,
}

impl Spectrum {
    pub fn new(grid: GridSpec, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != grid.len() {
            return Err(Error::InvalidArgument(format!(
                "spectrum has {} coefficients, grid needs {}",
                coeffs.len(),
                grid.len()
            )));
        }
        Ok(Self { grid, coeffs })
    }

    pub fn zeros(grid: GridSpec) -> Self {
        Self { grid, coeffs: vec![Complex64::new(0.0, 0.0); grid.len()] }
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [Complex64] {
        &mut self.coeffs
    }

    /// Multiplies each coefficient by `m(ξ)`.
    pub fn multiply(&self, m: impl Fn([f64; 2]) -> Complex64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| c * m(self.grid.frequency(i)))
            .collect();
        Self { grid: self.grid, coeffs }
    }
}

fn plan(size: usize, inverse: bool) -> Arc<dyn Fft<f64>> {
    let mut planner = FftPlanner::new();
    if inverse {
        planner.plan_fft_inverse(size)
    } else {
        planner.plan_fft_forward(size)
    }
}

/// Unnormalized in-place DFT over every axis.
fn dft_in_place(grid: &GridSpec, data: &mut [Complex64], inverse: bool) {
    let n = grid.size;
    let fft = plan(n, inverse);
    if grid.n == 1 {
        fft.process(data);
        return;
    }
    for row in data.chunks_mut(n) {
        fft.process(row);
    }
    let mut col = vec![Complex64::new(0.0, 0.0); n];
    for c in 0..n {
        for r in 0..n {
            col[r] = data[r * n + c];
        }
        fft.process(&mut col);
        for r in 0..n {
            data[r * n + c] = col[r];
        }
    }
}

/// Parity of the wavenumber sum of flat index `i`; accounts for the box starting at `-L`.
fn alternating_sign(grid: &GridSpec, i: usize) -> f64 {
    let idx = grid.unflatten(i);
    let s: usize = idx[..grid.n].iter().sum();
    if s % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

pub fn forward_transform(f: &Field) -> Spectrum {
    let grid = f.grid;
    let mut data = f.values.clone();
    dft_in_place(&grid, &mut data, false);
    let vol = grid.cell_volume();
    for (i, c) in data.iter_mut().enumerate() {
        *c *= vol * alternating_sign(&grid, i);
    }
    Spectrum { grid, coeffs: data }
}

pub fn inverse_transform(spec: &Spectrum) -> Field {
    let grid = spec.grid;
    let scale = 1.0 / grid.box_volume();
    let mut data: Vec<Complex64> = spec
        .coeffs
        .iter()
        .enumerate()
        .map(|(i, &c)| c * (scale * alternating_sign(&grid, i)))
        .collect();
    dft_in_place(&grid, &mut data, true);
    Field { grid, values: data }
}

/// Deterministic pairwise summation.
pub fn pairwise_sum(xs: &[f64]) -> f64 {
    const BLOCK: usize = 32;
    if xs.len() <= BLOCK {
        return xs.iter().sum();
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}

/// Riemann-sum `L^p` norm; `p = f64::INFINITY` gives the sup norm.
pub fn lp_norm(f: &Field, p: f64) -> Result<f64> {
    if p.is_nan() || p <= 0.0 {
        return Err(Error::InvalidArgument(format!("exponent p = {p} must be positive")));
    }
    if p.is_infinite() {
        return Ok(f.max_abs());
    }
    let powers: Vec<f64> = f.values.iter().map(|v| v.norm().powf(p)).collect();
    Ok((f.grid.cell_volume() * pairwise_sum(&powers)).powf(1.0 / p))
}

/// 17 significant digits in scientific notation.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn grid_spacings() {
        let g = make_grid(1, 8, 1.0).unwrap();
        assert_eq!(g.dx(), 0.25);
        assert_eq!(g.dxi(), 0.5);
        let g = make_grid(2, 16, 4.0).unwrap();
        assert_eq!(g.len(), 256);
        assert_eq!(g.dxi(), 0.125);
        assert!(make_grid(1, 7, 1.0).is_err());
        assert!(make_grid(3, 8, 1.0).is_err());
        assert!(make_grid(1, 8, 0.0).is_err());
        assert!(make_grid(1, 4, 1.0).is_err());
    }

    #[test]
    fn constant_transforms_to_dc() {
        for n in [1, 2] {
            let g = make_grid(n, 16, 1.5).unwrap();
            let s = forward_transform(&Field::from_real(g, |_| 1.0));
            assert!((s.coeffs()[0] - c(g.box_volume())).norm() < 1e-12);
            assert!(s.coeffs()[1..].iter().all(|v| v.norm() < 1e-12));
        }
    }

    #[test]
    fn pure_mode_has_single_coefficient() {
        let g = make_grid(2, 16, 2.0).unwrap();
        let (k0, k1) = (3i64, -5i64);
        let f = Field::from_fn(g, |x| {
            let ph = 2.0 * std::f64::consts::PI * (k0 as f64 * x[0] + k1 as f64 * x[1]) * g.dxi();
            Complex64::from_polar(1.0, ph)
        });
        let s = forward_transform(&f);
        let target = g.flatten([g.slot(k0), g.slot(k1)]);
        for (i, v) in s.coeffs().iter().enumerate() {
            let want = if i == target { g.box_volume() } else { 0.0 };
            assert!((v - c(want)).norm() < 1e-11, "slot {i}");
        }
        let back = inverse_transform(&s);
        assert!(back.max_diff(&f).unwrap() < 1e-13);
    }

    #[test]
    fn gaussian_matches_closed_form() {
        let g = make_grid(1, 256, 8.0).unwrap();
        let f = Field::from_real(g, |x| (-std::f64::consts::PI * x[0] * x[0]).exp());
        let s = forward_transform(&f);
        for (i, v) in s.coeffs().iter().enumerate() {
            let xi = g.frequency(i)[0];
            let want = (-std::f64::consts::PI * xi * xi).exp();
            assert!((v - c(want)).norm() <= 1e-10);
        }
    }

    #[test]
    fn zero_spectrum_inverts_to_zero() {
        let g = make_grid(2, 8, 1.0).unwrap();
        assert_eq!(inverse_transform(&Spectrum::zeros(g)).max_abs(), 0.0);
    }

    #[test]
    fn random_round_trip_and_parseval() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..100 {
            let n = 1 + trial % 2;
            let g = make_grid(n, 16, 0.5 + rng.gen::<f64>() * 4.0).unwrap();
            let values = (0..g.len()).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
            let f = Field::new(g, values).unwrap();
            let s = forward_transform(&f);
            let back = inverse_transform(&s);
            assert!(back.max_diff(&f).unwrap() <= 1e-12 * f.max_abs());
            let lhs = lp_norm(&f, 2.0).unwrap().powi(2);
            let rhs: f64 = s.coeffs().iter().map(|v| v.norm_sqr()).sum::<f64>() / g.box_volume();
            assert!((lhs - rhs).abs() <= 1e-12 * lhs);
        }
    }

    #[test]
    fn real_fields_have_conjugate_symmetric_spectra() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = make_grid(2, 16, 2.0).unwrap();
        let values = (0..g.len()).map(|_| c(rng.gen_range(-1.0..1.0))).collect();
        let s = forward_transform(&Field::new(g, values).unwrap());
        for i in 0..g.len() {
            let k = g.wavenumbers(i);
            let j = g.flatten([g.slot(-k[0]), g.slot(-k[1])]);
            assert!((s.coeffs()[j] - s.coeffs()[i].conj()).norm() < 1e-12);
        }
    }

    #[test]
    fn norms_of_simple_fields() {
        let g = make_grid(1, 64, 1.0).unwrap();
        let one = Field::from_real(g, |_| 1.0);
        assert!((lp_norm(&one, 2.0).unwrap() - 2f64.sqrt()).abs() < 1e-14);
        assert_eq!(lp_norm(&Field::zeros(g), 3.0).unwrap(), 0.0);
        let half = Field::from_real(g, |x| if x[0] < 0.0 { 1.0 } else { 0.0 });
        assert!((lp_norm(&half, 1.0).unwrap() - 1.0).abs() < 1e-14);
        assert_eq!(lp_norm(&one, f64::INFINITY).unwrap(), 1.0);
        assert!(lp_norm(&one, 0.0).is_err());
        assert!(lp_norm(&one, -1.0).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let g = make_grid(2, 8, 1.0).unwrap();
        let f = Field::from_fn(g, |x| Complex64::new(x[0].sin(), x[1] * 1e-7));
        let text = f.to_csv();
        assert!(text.starts_with("index_0,index_1,re,im\n"));
        let back = Field::from_csv(g, &text).unwrap();
        assert_eq!(back, f);
    }
}
