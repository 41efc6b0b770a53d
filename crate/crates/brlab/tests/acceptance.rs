//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

mod support;

use std::time::Instant;

use brlab::decomposition::{build_partition, decomposition_check};
use brlab::experiments::families::{generate_pair, trial_rng, FamilyKind, FamilyParams};
use brlab::experiments::{run, Command};
use brlab::identities::{
    c_alpha, constant_algebra_suite, majorization_check, order_raise_check, riemann_liouville_constant, stein_weiss_suite,
    unit_bump, QuadMode,
};
use brlab::kernel::{default_calibration, KernelForm};
use brlab::ops::{apply_bilinear, bilinear_square_function, BilinearPlan};
use brlab::special::beta_fn;
use brlab::spectral::make_grid;
use brlab::sparse::oscillation_eta_values;
use brlab::symbols::SymbolDescriptor;
use rand::Rng;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn single_thread<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(1).build().expect("pool").install(f)
}

fn meta_value(csv: &str, key: &str) -> Option<f64> {
    let meta = csv.lines().last()?;
    meta.split(',').find_map(|kv| kv.strip_prefix(&format!("{key}=")).and_then(|v| v.parse().ok()))
}

fn sci(xs: &[f64]) -> String {
    xs.iter().map(|x| format!("{x:.4e}")).collect::<Vec<_>>().join(", ")
}

fn run_with(cmd: Command, text: &str) -> brlab::Result<brlab::experiments::Outcome> {
    run(cmd, &cmd.parse_config(text)?)
}

fn c1_stein_weiss() -> brlab::Result<Verdict> {
    let start = Instant::now();
    let rep = single_thread(|| stein_weiss_suite(42, 100, 1e-6, QuadMode::Adaptive(1e-10)))?;
    let secs = start.elapsed().as_secs_f64();
    Ok(verdict(
        rep.pass && rep.samples.len() == 100 && secs <= 30.0,
        format!("max_rel_err={:.3e} (tol 1e-6), 100 samples, {secs:.2}s single-threaded (limit 30s)", rep.max_rel_err),
    ))
}

fn c2_constant_algebra() -> brlab::Result<Verdict> {
    let rep = constant_algebra_suite(42, 100, 1e-12);
    // Independent spot check through the Beta function.
    let direct = c_alpha(1.7, 0.3)? * beta_fn(1.7, 1.3)? / 2.0;
    let ok = rep.pass && (direct - 1.0).abs() <= 1e-12;
    Ok(verdict(ok, format!("max_rel_err={:.3e} (tol 1e-12)", rep.max_rel_err)))
}

fn c3_partition() -> brlab::Result<Verdict> {
    let (psi, _) = build_partition(12)?;
    Ok(verdict(
        psi.defect <= 1e-10 && psi.lattice_points >= 10_000,
        format!("defect={:.3e} on {} points of [0, 1-2^-12] (tol 1e-10)", psi.defect, psi.lattice_points),
    ))
}

fn c4_decomposition() -> brlab::Result<Verdict> {
    let mut worst: f64 = 0.0;
    let mut ok = true;
    for alpha in [0.25, 1.0, 2.5] {
        let d = decomposition_check(alpha, 1.0, 12, 64, 1e-10)?;
        worst = worst.max(d.max_defect);
        ok &= d.pass && d.points_checked == 64 * 64;
    }
    Ok(verdict(ok, format!("max defect={worst:.3e} over the 64x64 lattice, alpha in {{0.25, 1, 2.5}} (tol 1e-10)")))
}

fn c5_brute_force() -> brlab::Result<Verdict> {
    let start = Instant::now();
    let grid = make_grid(1, 32, 4.0)?;
    let fam = FamilyParams { kind: FamilyKind::RandomMix, modes: 3, m: 0.0, eps0: 0.0 };
    let mut worst: f64 = 0.0;
    for trial in 0..20 {
        let (f, g) = generate_pair(&grid, &fam, 42, trial)?;
        let m = SymbolDescriptor::BochnerRiesz { alpha: 0.7, r: 1.3 };
        let fast = apply_bilinear(&f, &g, &m)?;
        let slow = support::brute_force_bilinear(&f, &g, &m);
        let scale = slow.iter().fold(1e-300f64, |a, v| a.max(v.norm()));
        let err = fast.values().iter().zip(&slow).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max) / scale;
        worst = worst.max(err);
    }
    let secs = start.elapsed().as_secs_f64();
    Ok(verdict(worst <= 1e-10 && secs <= 10.0, format!("max rel diff={worst:.3e} (tol 1e-10), 20 trials, {secs:.2}s (limit 10s)")))
}

fn c6_single_mode() -> brlab::Result<Verdict> {
    let grid = make_grid(1, 64, 8.0)?;
    let fam = FamilyParams { kind: FamilyKind::PureMode, modes: 1, m: 0.0, eps0: 0.0 };
    let (f, g) = generate_pair(&grid, &fam, 42, 0)?;
    let plan = BilinearPlan::new(&f, &g)?;
    let q = plan.covering_quadrature(512)?;
    let mut worst: f64 = 0.0;
    let mut oracle_gap: f64 = 0.0;
    for alpha in [0.0f64, 0.5, 1.0, 2.0] {
        let exact = ((alpha + 1.0) / (2.0 * alpha + 1.0)).sqrt();
        oracle_gap = oracle_gap.max((support::single_mode_square(alpha, 1_000_000) - exact).abs() / exact);
        let sq = bilinear_square_function(&f, &g, alpha, &q)?;
        let err = sq.values().iter().map(|v| (v.re - exact).abs() / exact).fold(0.0, f64::max);
        worst = worst.max(err);
    }
    Ok(verdict(
        worst <= 1e-3 && oracle_gap <= 1e-6,
        format!("max rel err={worst:.3e} (tol 1e-3), 1e6-node oracle gap={oracle_gap:.3e}"),
    ))
}

fn c7_kernel() -> brlab::Result<Verdict> {
    let mut worst: f64 = 0.0;
    let mut unit: f64 = f64::INFINITY;
    for alpha in [1.0, 2.0] {
        worst = worst.max(default_calibration(alpha, KernelForm::Exact)?.residual);
        unit = unit.min(default_calibration(alpha, KernelForm::UnitCoefficient)?.residual);
    }
    Ok(verdict(worst <= 1e-3, format!("residual={worst:.3e} on r in [0.5, 5] (tol 1e-3); unit-coefficient form residual={unit:.3e}")))
}

fn c8_majorization() -> brlab::Result<Verdict> {
    let grid = make_grid(1, 128, 8.0)?;
    let fam = FamilyParams { kind: FamilyKind::RandomMix, modes: 4, m: 0.0, eps0: 0.0 };
    let (f, g) = generate_pair(&grid, &fam, 42, 2)?;
    let scales: Vec<f64> = (0..32).map(|i| 2f64.powf(-4.0 + 8.0 * i as f64 / 31.0)).collect();
    let c = riemann_liouville_constant(2.0)?;
    let rep = majorization_check(&unit_bump(), 2.0, &f, &g, &scales, c, 512, 1e-9)?;
    Ok(verdict(rep.violations == 0, format!("violations={} at N=128, worst ratio={:.4} (slack 1e-9)", rep.violations, rep.worst_ratio)))
}

fn c9_order_raising() -> brlab::Result<Verdict> {
    let mut rng = trial_rng(42, 9);
    let us: Vec<f64> = (0..100).map(|_| rng.gen_range(0.0..1.0)).collect();
    let sym = order_raise_check(2.0, 1.0, &us, 1e-6)?;
    let out = run_with(Command::IdentitySuite, "samples = 4\n")?;
    let row = out.table.rows().iter().find(|r| r[0] == "kernel_scale_mix").expect("scale-mix row").clone();
    let field_err: f64 = row[2].parse().unwrap_or(f64::INFINITY);
    Ok(verdict(
        sym.pass && field_err <= 1e-5,
        format!("symbol max_rel_err={:.3e} (tol 1e-6), field max_rel_err={field_err:.3e} (tol 1e-5)", sym.max_rel_err),
    ))
}

fn c10_sparse() -> brlab::Result<Verdict> {
    let out = run_with(Command::SparseCheck, "")?;
    let csv = out.csv();
    let spread = meta_value(&csv, "C_spread").unwrap_or(f64::INFINITY);
    let cs: Vec<f64> = [128, 256, 512].iter().filter_map(|n| meta_value(&csv, &format!("C_N{n}"))).collect();
    Ok(verdict(out.passed && cs.len() == 3, format!("C=[{}], spread={spread:.3} (limit 2), families verified exactly", sci(&cs))))
}

fn c11_oscillation() -> brlab::Result<Verdict> {
    assert_eq!(support::binomial(12, 3), 220);
    let mut mismatches = 0;
    for trial in 0..50 {
        let mut rng = trial_rng(42, 11_000 + trial);
        let v: Vec<f64> = (0..12).map(|_| rng.gen_range(-1.0..1.0)).collect();
        if oscillation_eta_values(&v, 0.25) != support::exhaustive_oscillation(&v, 3) {
            mismatches += 1;
        }
    }
    Ok(verdict(mismatches == 0, format!("{mismatches} mismatches over 50 trials of 220 subsets (exact equality)")))
}

fn c12_convergence() -> brlab::Result<Verdict> {
    let out = run_with(Command::Convergence, "mode = bochner-riesz\nalpha = 1\nR_list = 8,16,32,64\n")?;
    let slope = meta_value(&out.csv(), "slope").unwrap_or(f64::NAN);
    Ok(verdict(out.passed && (slope + 2.0).abs() <= 0.2, format!("slope={slope:.4} (target -2 +- 0.2)")))
}

fn c13_maximal_scaling() -> brlab::Result<Verdict> {
    let out = run_with(Command::AppDemo, "app = maximal-br\nalpha = 2\nj_min = 3\nj_max = 8\n")?;
    let slope = meta_value(&out.csv(), "slope").unwrap_or(f64::NAN);
    Ok(verdict((1.4..=1.6).contains(&slope) && out.passed, format!("slope={slope:.4} (window [1.4, 1.6]); {}", out.summary)))
}

fn c14_necessary() -> brlab::Result<Verdict> {
    let above = run_with(Command::NecProbe, "probe = a\nalpha = 0.5\n")?;
    let below = run_with(Command::NecProbe, "probe = a\nalpha = -0.3\n")?;
    let vals = |o: &brlab::experiments::Outcome| -> Vec<f64> {
        o.table.rows().iter().filter(|r| r[0] == "a").map(|r| r[2].parse().unwrap()).collect()
    };
    let (va, vb) = (vals(&above), vals(&below));
    let bounded = va.iter().all(|v| *v <= va[0]);
    let increasing = vb.windows(2).all(|w| w[1] > w[0]);
    Ok(verdict(
        bounded && increasing && above.passed && below.passed,
        format!("alpha=0.5: {}; alpha=-0.3: {}", sci(&va), sci(&vb)),
    ))
}

fn c15_determinism() -> brlab::Result<Verdict> {
    let mut ok = true;
    for cmd in Command::ALL {
        let text = if cmd == Command::IdentitySuite { "samples = 8\n" } else { "" };
        let cfg = cmd.parse_config(text)?;
        let a = run(cmd, &cfg)?.csv();
        let b = run(cmd, &cfg)?.csv();
        let c = single_thread(|| run(cmd, &cfg))?.csv();
        ok &= a == b && a == c;
    }
    Ok(verdict(ok, "byte-identical CSV across repeated and single-threaded runs of every command"))
}

fn main() {
    let criteria: [(&str, fn() -> brlab::Result<Verdict>); 15] = [
        ("stein-weiss identity", c1_stein_weiss),
        ("constant algebra", c2_constant_algebra),
        ("partition of unity", c3_partition),
        ("symbol decomposition", c4_decomposition),
        ("brute-force bilinear oracle", c5_brute_force),
        ("single-mode square function", c6_single_mode),
        ("bessel kernel calibration", c7_kernel),
        ("majorization", c8_majorization),
        ("order raising", c9_order_raising),
        ("sparse domination", c10_sparse),
        ("oscillation exactness", c11_oscillation),
        ("bochner-riesz convergence", c12_convergence),
        ("maximal-means scaling", c13_maximal_scaling),
        ("necessary-condition dichotomy", c14_necessary),
        ("determinism", c15_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let v = check().unwrap_or_else(|e| verdict(false, format!("error: {e}")));
        println!("{} [{:>2}] {name}: {}", if v.pass { "PASS" } else { "FAIL" }, i + 1, v.detail);
        failed += usize::from(!v.pass);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
