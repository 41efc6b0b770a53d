//! `sparse-check`: shifted sparse families for a Gaussian-bump pair and the empirical
//! domination constant across resolutions.

use std::f64::consts::PI;

use super::config::{Config, Schema};
use super::csv::CsvTable;
use super::{require, Outcome};
use crate::error::Result;
use crate::sparse::{verify_sparse_domination, DominationReport, SparseFamily};
use crate::spectral::{make_grid, Field, GridSpec};

pub const SCHEMA: Schema = &[
    ("N_list", "128,256,512"),
    ("L", "8"),
    ("alpha", "1"),
    ("nu", "0.5"),
    ("lambda", "16"),
    ("K", "128"),
    ("stability", "2"),
];

#[derive(Debug, Clone, PartialEq)]
pub struct Params {
    pub sizes: Vec<usize>,
    pub half_width: f64,
    pub alpha: f64,
    pub nu: f64,
    pub lambda: f64,
    pub nodes: usize,
    pub stability: f64,
}

impl Params {
    pub fn from_config(cfg: &Config) -> Result<Self> {
        let p = Self {
            sizes: cfg.get_list("N_list")?,
            half_width: cfg.get("L")?,
            alpha: cfg.get("alpha")?,
            nu: cfg.get("nu")?,
            lambda: cfg.get("lambda")?,
            nodes: cfg.get("K")?,
            stability: cfg.get("stability")?,
        };
        require(cfg, "N_list", !p.sizes.is_empty(), "need at least one grid size")?;
        for &n in &p.sizes {
            require(cfg, "N_list", n.is_power_of_two() && n >= 8, "grid sizes must be powers of two ≥ 8")?;
            make_grid(1, n, p.half_width).map_err(|e| cfg.invalid("L", e.to_string()))?;
        }
        require(cfg, "alpha", p.alpha > 0.5, "sparse domination needs α > n − 1/2 = 1/2")?;
        require(cfg, "nu", p.nu > 0.0 && p.nu < 1.0, "sparseness must lie in (0, 1)")?;
        // Stopped cubes cover at most 2|Q|/√Λ of each parent.
        require(cfg, "lambda", p.lambda >= (2.0 / p.nu).powi(2), "stopping threshold must be at least (2/ν)²")?;
        require(cfg, "K", p.nodes >= 16, "need at least 16 nodes")?;
        require(cfg, "stability", p.stability >= 1.0, "stability factor must be at least 1")?;
        Ok(p)
    }
}

/// `f = e^{−π(x−1/2)²}`, `g = e^{−π(x+1)²/2}`.
pub fn gaussian_pair(grid: &GridSpec) -> (Field, Field) {
    let f = Field::from_real(*grid, |x| (-PI * (x[0] - 0.5).powi(2)).exp());
    let g = Field::from_real(*grid, |x| (-PI * (x[0] + 1.0).powi(2) / 2.0).exp());
    (f, g)
}

pub fn domination_at(p: &Params, size: usize) -> Result<DominationReport> {
    let grid = make_grid(1, size, p.half_width)?;
    let (f, g) = gaussian_pair(&grid);
    verify_sparse_domination(&f, &g, p.alpha, p.nu, p.lambda, p.nodes)
}

pub fn run(p: &Params) -> Result<Outcome> {
    let mut table = CsvTable::new(&["N", "shift_id", "level", "corner_0", "EQ_cell_count"]);
    let mut constants = Vec::new();
    for &size in &p.sizes {
        let grid = make_grid(1, size, p.half_width)?;
        let rep = domination_at(p, size)?;
        for fam in &rep.families {
            fam.verify(&grid)?;
            push_family(&mut table, size, fam);
        }
        table.meta_f64(&format!("C_N{size}"), rep.constant);
        constants.push(rep.constant);
    }
    let hi = constants.iter().cloned().fold(0.0, f64::max);
    let lo = constants.iter().cloned().fold(f64::INFINITY, f64::min);
    let spread = hi / lo;
    table.meta_f64("C_spread", spread);
    table.meta_f64("stability", p.stability);
    table.meta_f64("nu", p.nu);
    let passed = constants.iter().all(|c| c.is_finite() && *c > 0.0) && spread <= p.stability;
    Ok(Outcome { table, passed, summary: format!("C = {constants:?}, spread {spread:.3}") })
}

fn push_family(table: &mut CsvTable, size: usize, fam: &SparseFamily) {
    for (q, e) in fam.cubes.iter().zip(&fam.majority) {
        table.push(vec![size.to_string(), fam.shift_id.to_string(), q.level.to_string(), q.corner[0].to_string(), e.len().to_string()]);
    }
}
