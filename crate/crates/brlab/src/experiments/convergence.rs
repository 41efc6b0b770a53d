//! `convergence`: sup-norm distance of a bilinear multiplier from the product `f g`
//! along a scale sequence.

use num_complex::Complex64;
use rayon::prelude::*;

use super::config::{Config, Schema};
use super::csv::{f, CsvTable};
use super::families::{family_from, generate_pair, FamilyParams};
use super::{fit_slope, grid_from, require, Outcome};
use crate::error::Result;
use crate::ops::BilinearPlan;
use crate::spectral::GridSpec;
use crate::symbols::SymbolDescriptor;

pub const SCHEMA: Schema = &[
    ("mode", "bochner-riesz"),
    ("n", "1"),
    ("N", "64"),
    ("L", "8"),
    ("alpha", "1"),
    ("R_list", "8,16,32,64"),
    ("beta", "0.5"),
    ("s_list", "0.25,0.125,0.0625,0.03125,0.015625,0.0078125,0.00390625"),
    ("family", "random"),
    ("modes", "4"),
    ("M", "64"),
    ("eps0", "0.5"),
    ("seed", "42"),
    ("trial", "0"),
    ("slope_target", "-2"),
    ("slope_tol", "0.2"),
    ("monotone_tol", "0.1"),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    BochnerRiesz,
    Schrodinger,
    /// The symbol `m ≡ 1`; the error is identically zero.
    Identity,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Params {
    pub mode: Mode,
    pub grid: GridSpec,
    pub alpha: f64,
    pub beta: f64,
    pub scales: Vec<f64>,
    pub family: FamilyParams,
    pub seed: u64,
    pub trial: u64,
    pub slope_target: f64,
    pub slope_tol: f64,
    pub monotone_tol: f64,
}

impl Params {
    pub fn from_config(cfg: &Config) -> Result<Self> {
        let mode = match cfg.raw("mode") {
            "bochner-riesz" => Mode::BochnerRiesz,
            "schrodinger" => Mode::Schrodinger,
            "identity" => Mode::Identity,
            other => return Err(cfg.invalid("mode", format!("expected bochner-riesz, schrodinger or identity, got `{other}`"))),
        };
        let key = if mode == Mode::Schrodinger { "s_list" } else { "R_list" };
        let p = Self {
            mode,
            grid: grid_from(cfg)?,
            alpha: cfg.get("alpha")?,
            beta: cfg.get("beta")?,
            scales: cfg.get_list(key)?,
            family: family_from(cfg)?,
            seed: cfg.get("seed")?,
            trial: cfg.get("trial")?,
            slope_target: cfg.get("slope_target")?,
            slope_tol: cfg.get("slope_tol")?,
            monotone_tol: cfg.get("monotone_tol")?,
        };
        require(cfg, "alpha", p.alpha > -1.0 && p.alpha.is_finite(), "index must exceed -1")?;
        require(cfg, "beta", p.beta > 0.0, "exponent must be positive")?;
        require(cfg, key, p.scales.len() >= 2, "need at least two scales")?;
        require(cfg, key, p.scales.iter().all(|s| *s > 0.0 && s.is_finite()), "scales must be positive")?;
        require(cfg, "slope_tol", p.slope_tol >= 0.0, "tolerance must be nonnegative")?;
        require(cfg, "monotone_tol", p.monotone_tol >= 0.0, "tolerance must be nonnegative")?;
        Ok(p)
    }
}

/// `sup_x |T_{m(scale)}(f,g)(x) − f(x)g(x)|` at each scale.
pub fn sup_errors(p: &Params, plan: &BilinearPlan) -> Vec<f64> {
    let product = plan.apply(&|_: [f64; 2], _: [f64; 2]| Complex64::new(1.0, 0.0));
    p.scales
        .par_iter()
        .map(|&s| {
            let out = match p.mode {
                Mode::BochnerRiesz => plan.apply(&SymbolDescriptor::BochnerRiesz { alpha: p.alpha, r: s }),
                Mode::Schrodinger => plan.apply(&SymbolDescriptor::Schrodinger { beta: p.beta, s }),
                Mode::Identity => plan.apply(&|_: [f64; 2], _: [f64; 2]| Complex64::new(1.0, 0.0)),
            };
            out.max_diff(&product).expect("same grid")
        })
        .collect()
}

pub fn run(p: &Params) -> Result<Outcome> {
    let (fi, gi) = generate_pair(&p.grid, &p.family, p.seed, p.trial)?;
    let plan = BilinearPlan::new(&fi, &gi)?;
    let errors = sup_errors(p, &plan);
    let mut table = CsvTable::new(&["scale", "sup_error"]);
    for (s, e) in p.scales.iter().zip(&errors) {
        table.push(vec![f(*s), f(*e)]);
    }
    // Errors should shrink along the sequence (R increasing or s decreasing).
    let shrinking = errors.windows(2).all(|w| w[1] <= w[0] * (1.0 + p.monotone_tol));
    let (passed, summary) = match p.mode {
        Mode::BochnerRiesz => {
            let logs: Vec<f64> = p.scales.iter().map(|s| s.ln()).collect();
            let loge: Vec<f64> = errors.iter().map(|e| e.ln()).collect();
            let slope = fit_slope(&logs, &loge);
            table.meta_f64("slope", slope);
            table.meta_f64("slope_target", p.slope_target);
            table.meta_f64("slope_tol", p.slope_tol);
            let ok = (slope - p.slope_target).abs() <= p.slope_tol && shrinking;
            (ok, format!("log-log slope {slope:.4}"))
        }
        Mode::Schrodinger => {
            let strict = errors.windows(2).all(|w| w[1] < w[0]);
            (strict, format!("strictly decreasing: {strict}"))
        }
        Mode::Identity => {
            let zero = errors.iter().all(|e| *e == 0.0);
            (zero, format!("identically zero: {zero}"))
        }
    };
    table.meta_f64("monotone_tol", p.monotone_tol);
    Ok(Outcome { table, passed, summary })
}
