//! `square-function`: the field `𝒢^α(f, g)` for one drawn pair.

use super::config::{Config, Schema};
use super::csv::{f, CsvTable};
use super::families::{family_from, generate_pair, FamilyParams};
use super::{grid_from, require, Outcome};
use crate::error::Result;
use crate::ops::{bilinear_square_function, BilinearPlan};
use crate::spectral::GridSpec;

pub const SCHEMA: Schema = &[
    ("n", "1"),
    ("N", "128"),
    ("L", "8"),
    ("alpha", "1"),
    ("K", "512"),
    ("family", "random"),
    ("modes", "4"),
    ("M", "64"),
    ("eps0", "0.5"),
    ("seed", "42"),
    ("trial", "0"),
];

#[derive(Debug, Clone, PartialEq)]
pub struct Params {
    pub grid: GridSpec,
    pub alpha: f64,
    pub nodes: usize,
    pub family: FamilyParams,
    pub seed: u64,
    pub trial: u64,
}

impl Params {
    pub fn from_config(cfg: &Config) -> Result<Self> {
        let p = Self {
            grid: grid_from(cfg)?,
            alpha: cfg.get("alpha")?,
            nodes: cfg.get("K")?,
            family: family_from(cfg)?,
            seed: cfg.get("seed")?,
            trial: cfg.get("trial")?,
        };
        require(cfg, "alpha", p.alpha > -1.0 && p.alpha.is_finite(), "index must exceed -1")?;
        require(cfg, "K", p.nodes >= 16, "need at least 16 nodes")?;
        Ok(p)
    }
}

pub fn run(p: &Params) -> Result<Outcome> {
    let (fi, gi) = generate_pair(&p.grid, &p.family, p.seed, p.trial)?;
    let plan = BilinearPlan::new(&fi, &gi)?;
    let q = plan.covering_quadrature(p.nodes)?;
    let sq = bilinear_square_function(&fi, &gi, p.alpha, &q)?;
    let dim = p.grid.dim();
    let mut header: Vec<&str> = vec!["index_0", "index_1"][..dim].to_vec();
    header.extend(["x_0", "x_1"][..dim].iter());
    header.push("G");
    let mut table = CsvTable::new(&header);
    for (i, v) in sq.values().iter().enumerate() {
        let idx = p.grid.unflatten(i);
        let x = p.grid.point(i);
        let mut row: Vec<String> = idx[..dim].iter().map(|k| k.to_string()).collect();
        row.extend(x[..dim].iter().map(|c| f(*c)));
        row.push(f(v.re));
        table.push(row);
    }
    let u_max = plan.occupied_range().map_or(0.0, |r| r.1);
    let tail = q.tail_bound(p.alpha, u_max, plan.amplitude()).sqrt();
    let finite = sq.values().iter().all(|v| v.re.is_finite() && v.re >= 0.0);
    table.meta_f64("R_min", q.r_min());
    table.meta_f64("R_max", q.r_max());
    table.meta("K", q.len().to_string());
    table.meta_f64("tail_bound", tail);
    table.meta_f64("sup_G", sq.max_abs());
    let summary = format!("sup 𝒢 = {:e}, tail bound {:e}", sq.max_abs(), tail);
    Ok(Outcome { table, passed: finite, summary })
}
