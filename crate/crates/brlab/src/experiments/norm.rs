//! `norm-estimate`: empirical sup of `‖𝒢^α(f,g)‖_p / (‖f‖_{p1} ‖g‖_{p2})` over seeded trials.

use rayon::prelude::*;

use super::config::{Config, Schema};
use super::csv::{f, CsvTable};
use super::families::{family_from, generate_pair, FamilyKind, FamilyParams};
use super::{grid_from, require, Outcome};
use crate::error::Result;
use crate::ops::{bilinear_square_function, BilinearPlan};
use crate::spectral::{lp_norm, GridSpec};
use crate::symbols::ExponentTriple;

pub const SCHEMA: Schema = &[
    ("n", "1"),
    ("N", "64"),
    ("L", "8"),
    ("alpha", "1"),
    ("p1", "2"),
    ("p2", "2"),
    ("K", "512"),
    ("trials", "50"),
    ("family", "random"),
    ("modes", "4"),
    ("M", "64"),
    ("eps0", "0.5"),
    ("seed", "42"),
    ("pure_tol", "1e-3"),
];

#[derive(Debug, Clone, PartialEq)]
pub struct Params {
    pub grid: GridSpec,
    pub alpha: f64,
    pub exponents: ExponentTriple,
    pub nodes: usize,
    pub trials: usize,
    pub family: FamilyParams,
    pub seed: u64,
    pub pure_tol: f64,
}

impl Params {
    pub fn from_config(cfg: &Config) -> Result<Self> {
        let exponents = ExponentTriple::parse(cfg.raw("p1"), cfg.raw("p2")).map_err(|e| cfg.invalid("p1", e.to_string()))?;
        let p = Self {
            grid: grid_from(cfg)?,
            alpha: cfg.get("alpha")?,
            exponents,
            nodes: cfg.get("K")?,
            trials: cfg.get("trials")?,
            family: family_from(cfg)?,
            seed: cfg.get("seed")?,
            pure_tol: cfg.get("pure_tol")?,
        };
        require(cfg, "alpha", p.alpha > -1.0 && p.alpha.is_finite(), "index must exceed -1")?;
        require(cfg, "K", p.nodes >= 16, "need at least 16 nodes")?;
        require(cfg, "trials", p.trials >= 1, "need at least one trial")?;
        require(cfg, "pure_tol", p.pure_tol > 0.0, "tolerance must be positive")?;
        Ok(p)
    }
}

/// One trial: `(‖𝒢‖_p, ‖f‖_{p1}, ‖g‖_{p2})`.
pub fn trial_norms(p: &Params, trial: u64) -> Result<(f64, f64, f64)> {
    let (fi, gi) = generate_pair(&p.grid, &p.family, p.seed, trial)?;
    let plan = BilinearPlan::new(&fi, &gi)?;
    let q = plan.covering_quadrature(p.nodes)?;
    let sq = bilinear_square_function(&fi, &gi, p.alpha, &q)?;
    let e = &p.exponents;
    Ok((lp_norm(&sq, e.p())?, lp_norm(&fi, e.p1())?, lp_norm(&gi, e.p2())?))
}

/// Closed-form ratio for a pair of pure modes.
pub fn pure_mode_ratio(alpha: f64) -> f64 {
    ((alpha + 1.0) / (2.0 * alpha + 1.0)).sqrt()
}

pub fn run(p: &Params) -> Result<Outcome> {
    let norms: Vec<(f64, f64, f64)> = (0..p.trials as u64).into_par_iter().map(|t| trial_norms(p, t)).collect::<Result<_>>()?;
    let mut table = CsvTable::new(&["trial", "norm_G", "norm_f", "norm_g", "ratio"]);
    let mut sup: f64 = 0.0;
    let mut skipped = Vec::new();
    let mut pure_err: f64 = 0.0;
    for (t, (ng, nf, ngg)) in norms.iter().enumerate() {
        let den = nf * ngg;
        if den == 0.0 {
            skipped.push(t.to_string());
            continue;
        }
        let ratio = ng / den;
        sup = sup.max(ratio);
        pure_err = pure_err.max((ratio - pure_mode_ratio(p.alpha)).abs() / pure_mode_ratio(p.alpha));
        table.push(vec![t.to_string(), f(*ng), f(*nf), f(*ngg), f(ratio)]);
    }
    table.meta_f64("sup_ratio", sup);
    table.meta("p", p.exponents.inv_p().to_string());
    table.meta("skipped", if skipped.is_empty() { "none".to_string() } else { skipped.join(";") });
    let mut passed = skipped.len() < p.trials && sup.is_finite();
    if p.family.kind == FamilyKind::PureMode {
        table.meta_f64("pure_mode_expected", pure_mode_ratio(p.alpha));
        table.meta_f64("pure_mode_max_rel_err", pure_err);
        table.meta_f64("pure_tol", p.pure_tol);
        passed &= pure_err <= p.pure_tol;
    }
    let summary = format!("sup ratio {sup:e} over {} trials ({} skipped)", p.trials, skipped.len());
    Ok(Outcome { table, passed, summary })
}
