//! `identity-suite`: every exact identity checked in one run, one CSV row per check.

use rand::Rng;

use super::config::{Config, Schema};
use super::csv::{f, CsvTable};
use super::families::{generate_pair, trial_rng, FamilyKind, FamilyParams};
use super::{require, Outcome};
use crate::decomposition::{build_partition, decomposition_check};
use crate::error::{Error, Result};
use crate::identities::{
    constant_algebra_suite, kernel_scale_mix_check, majorization_check, order_raise_check, riemann_liouville_check,
    riemann_liouville_constant, smooth_bump, sobolev_norm, stein_weiss_suite, unit_bump, IdentityReport, QuadMode,
};
use crate::ops::{BilinearPlan, QuadratureSpec};
use crate::spectral::make_grid;

pub const SCHEMA: Schema = &[
    ("seed", "42"),
    ("samples", "100"),
    ("K", "0"),
    ("sw_tol", "1e-6"),
    ("algebra_tol", "1e-12"),
    ("rho", "2"),
    ("alpha", "1"),
    ("order_tol", "1e-6"),
    ("mix_N", "64"),
    ("mix_nodes", "4096"),
    ("mix_tol", "1e-5"),
    ("rl_alpha", "1.5"),
    ("rl_tol", "1e-4"),
    ("rl_exact_tol", "1e-8"),
    ("sobolev_tol", "1e-6"),
    ("maj_alpha", "2"),
    ("maj_N", "128"),
    ("maj_scales", "32"),
    ("maj_K", "512"),
    ("maj_slack", "1e-9"),
    ("partition_J", "12"),
    ("partition_tol", "1e-10"),
    ("decomp_tol", "1e-10"),
];

#[derive(Debug, Clone, PartialEq)]
pub struct Params {
    pub seed: u64,
    pub samples: usize,
    /// Tanh-sinh node count for the one-dimensional identities; `None` is adaptive.
    pub nodes: Option<usize>,
    pub sw_tol: f64,
    pub algebra_tol: f64,
    pub rho: f64,
    pub alpha: f64,
    pub order_tol: f64,
    pub mix_n: usize,
    pub mix_nodes: usize,
    pub mix_tol: f64,
    pub rl_alpha: f64,
    pub rl_tol: f64,
    pub rl_exact_tol: f64,
    pub sobolev_tol: f64,
    pub maj_alpha: f64,
    pub maj_n: usize,
    pub maj_scales: usize,
    pub maj_k: usize,
    pub maj_slack: f64,
    pub partition_j: usize,
    pub partition_tol: f64,
    pub decomp_tol: f64,
}

impl Params {
    pub fn from_config(cfg: &Config) -> Result<Self> {
        let k: usize = cfg.get("K")?;
        let p = Self {
            seed: cfg.get("seed")?,
            samples: cfg.get("samples")?,
            nodes: (k > 0).then_some(k),
            sw_tol: cfg.get("sw_tol")?,
            algebra_tol: cfg.get("algebra_tol")?,
            rho: cfg.get("rho")?,
            alpha: cfg.get("alpha")?,
            order_tol: cfg.get("order_tol")?,
            mix_n: cfg.get("mix_N")?,
            mix_nodes: cfg.get("mix_nodes")?,
            mix_tol: cfg.get("mix_tol")?,
            rl_alpha: cfg.get("rl_alpha")?,
            rl_tol: cfg.get("rl_tol")?,
            rl_exact_tol: cfg.get("rl_exact_tol")?,
            sobolev_tol: cfg.get("sobolev_tol")?,
            maj_alpha: cfg.get("maj_alpha")?,
            maj_n: cfg.get("maj_N")?,
            maj_scales: cfg.get("maj_scales")?,
            maj_k: cfg.get("maj_K")?,
            maj_slack: cfg.get("maj_slack")?,
            partition_j: cfg.get("partition_J")?,
            partition_tol: cfg.get("partition_tol")?,
            decomp_tol: cfg.get("decomp_tol")?,
        };
        require(cfg, "samples", p.samples >= 1, "need at least one sample")?;
        require(cfg, "rho", p.alpha > -1.0 && p.rho > p.alpha + 0.5, "need α > -1 and ρ > α + 1/2")?;
        require(cfg, "mix_nodes", p.mix_nodes >= 16, "need at least 16 nodes")?;
        require(cfg, "maj_K", p.maj_k >= 16, "need at least 16 nodes")?;
        require(cfg, "rl_alpha", p.rl_alpha > 0.5, "order must exceed 1/2")?;
        require(cfg, "maj_alpha", p.maj_alpha > 0.5, "order must exceed 1/2")?;
        require(cfg, "maj_scales", p.maj_scales >= 1, "need at least one scale")?;
        require(cfg, "partition_J", p.partition_j >= 4, "truncation must be at least 4")?;
        make_grid(1, p.mix_n, 8.0).map_err(|e| cfg.invalid("mix_N", e.to_string()))?;
        make_grid(1, p.maj_n, 8.0).map_err(|e| cfg.invalid("maj_N", e.to_string()))?;
        for (key, v) in [("sw_tol", p.sw_tol), ("algebra_tol", p.algebra_tol), ("order_tol", p.order_tol), ("mix_tol", p.mix_tol), ("rl_tol", p.rl_tol), ("rl_exact_tol", p.rl_exact_tol), ("sobolev_tol", p.sobolev_tol), ("maj_slack", p.maj_slack), ("partition_tol", p.partition_tol), ("decomp_tol", p.decomp_tol)] {
            require(cfg, key, v > 0.0, "tolerance must be positive")?;
        }
        Ok(p)
    }
}

fn row(t: &mut CsvTable, r: &IdentityReport) {
    let params = if r.note.is_empty() { format!("samples={}", r.samples.len()) } else { r.note.clone() };
    t.push(vec![r.name.clone(), params, f(r.max_rel_err), r.quad_size.to_string(), f(r.tol), r.pass.to_string()]);
}

/// Field-level order raising on a random band-limited pair; the constant is fitted on pure modes.
pub fn scale_mix(p: &Params) -> Result<IdentityReport> {
    let grid = make_grid(1, p.mix_n, 8.0)?;
    let fam = FamilyParams { kind: FamilyKind::RandomMix, modes: 4, m: 0.0, eps0: 0.0 };
    let (f1, g1) = generate_pair(&grid, &fam, p.seed, 0)?;
    let pure = FamilyParams { kind: FamilyKind::PureMode, ..fam };
    let (f0, g0) = generate_pair(&grid, &pure, p.seed, 1)?;
    let lo_hi = |a, b| BilinearPlan::new(a, b).map(|pl| pl.occupied_range());
    let (l1, h1) = lo_hi(&f1, &g1)?.ok_or_else(|| Error::Degenerate("random pair is empty".into()))?;
    let (l0, h0) = lo_hi(&f0, &g0)?.ok_or_else(|| Error::Degenerate("pure pair is empty".into()))?;
    let r = 1.2 * h1.max(h0).sqrt();
    let q = QuadratureSpec::new(0.9 * l1.min(l0).sqrt(), r, p.mix_nodes)?;
    Ok(kernel_scale_mix_check(p.alpha, r, (&f0, &g0), &f1, &g1, &q, p.mix_tol)?.report)
}

pub fn run(p: &Params) -> Result<Outcome> {
    let mode = p.nodes.map_or(QuadMode::Adaptive(1e-10), QuadMode::Fixed);
    let mut reports = Vec::new();
    reports.push(stein_weiss_suite(p.seed, p.samples, p.sw_tol, mode)?);
    reports.push(constant_algebra_suite(p.seed, p.samples, p.algebra_tol));

    let mut rng = trial_rng(p.seed, 1_000_000);
    let mut us: Vec<f64> = (0..p.samples).map(|_| rng.gen_range(0.0..1.0)).collect();
    us.extend([0.0, 1.0]);
    let mut order = order_raise_check(p.rho, p.alpha, &us, p.order_tol)?;
    if let Some(k) = p.nodes {
        // Re-evaluate with the configured fixed rule.
        let exact = 2.0 / crate::special::beta_fn(p.rho - p.alpha, p.alpha + 1.0)?;
        let mut worst: f64 = 0.0;
        for &u in &us {
            let (i, _) = crate::identities::order_raise_integral(p.rho, p.alpha, u, QuadMode::Fixed(k))?;
            let lhs = crate::symbols::pos_pow(1.0 - u, p.rho);
            worst = worst.max(if lhs == 0.0 { (exact * i).abs() } else { (exact * i - lhs).abs() / lhs });
        }
        order.max_rel_err = worst;
        order.quad_size = k;
        order.pass = worst <= p.order_tol;
    }
    reports.push(order);
    reports.push(scale_mix(p)?);

    let profiles = [smooth_bump(0.0, 1.0), smooth_bump(-0.5, 0.8), smooth_bump(0.3, 0.6)];
    let mut rl1 = riemann_liouville_check(&profiles, 1.0, p.rl_exact_tol)?.report;
    rl1.name = "riemann_liouville_order_one".into();
    reports.push(rl1);
    reports.push(riemann_liouville_check(&profiles, p.rl_alpha, p.rl_tol)?.report);

    let m = unit_bump();
    let a = sobolev_norm(&m, p.rl_alpha, 0.0, 1024)?.value;
    let b = sobolev_norm(&m.dilate(2.0), p.rl_alpha, 0.0, 1024)?.value;
    let err = (a - b).abs() / a;
    reports.push(IdentityReport::new(
        "sobolev_scale_invariance",
        vec![crate::identities::IdentitySample { params: format!("alpha={}", p.rl_alpha), rel_err: err, quad_size: 1024 }],
        p.sobolev_tol,
        format!("norm={}", f(a)),
    ));

    let grid = make_grid(1, p.maj_n, 8.0)?;
    let fam = FamilyParams { kind: FamilyKind::RandomMix, modes: 4, m: 0.0, eps0: 0.0 };
    let (fm, gm) = generate_pair(&grid, &fam, p.seed, 2)?;
    let scales: Vec<f64> = (0..p.maj_scales)
        .map(|i| if p.maj_scales == 1 { 1.0 } else { 2f64.powf(-4.0 + 8.0 * i as f64 / (p.maj_scales - 1) as f64) })
        .collect();
    let c = riemann_liouville_constant(p.maj_alpha)?;
    reports.push(majorization_check(&m, p.maj_alpha, &fm, &gm, &scales, c, p.maj_k, p.maj_slack)?.report);

    let (psi, psi0) = build_partition(p.partition_j)?;
    let defect = psi.defect.max(psi0.defect);
    reports.push(IdentityReport::new(
        "partition_of_unity",
        vec![crate::identities::IdentitySample { params: format!("J={}", p.partition_j), rel_err: defect, quad_size: psi.lattice_points }],
        p.partition_tol,
        String::new(),
    ));
    for alpha in [0.25, 1.0, 2.5] {
        let d = decomposition_check(alpha, 1.0, p.partition_j, 64, p.decomp_tol)?;
        reports.push(IdentityReport::new(
            "symbol_decomposition",
            vec![crate::identities::IdentitySample { params: format!("alpha={alpha}"), rel_err: d.max_defect, quad_size: d.points_checked }],
            p.decomp_tol,
            format!("alpha={alpha};points={};shell={}", d.points_checked, d.points_in_shell),
        ));
    }

    let mut table = CsvTable::new(&["identity", "params", "max_rel_err", "quad_size", "tol", "pass"]);
    for r in &reports {
        row(&mut table, r);
    }
    table.meta("quadrature", p.nodes.map_or("adaptive".to_string(), |k| format!("fixed_{k}")));
    let passed = reports.iter().all(|r| r.pass);
    let failed: Vec<&str> = reports.iter().filter(|r| !r.pass).map(|r| r.name.as_str()).collect();
    let summary = if passed { format!("{} checks passed", reports.len()) } else { format!("failed: {}", failed.join(", ")) };
    Ok(Outcome { table, passed, summary })
}
