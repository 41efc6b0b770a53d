//! One-dimensional quadrature rules: Gauss–Legendre panels and tanh-sinh.
//!
//! The tanh-sinh integrands receive the distances to both endpoints as extra
//! arguments, so factors like `(b - t)^{β-1}` can be formed without the
//! cancellation in `b - t` near the endpoint.

use crate::error::{Error, Result};

/// Half-length of the tanh-sinh parameter interval.
const TAU_MAX: f64 = 4.0;
const MAX_LEVEL: usize = 12;

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let step = p / d;
            x -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        if d != 0.0 {
            dp = d;
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    if n == 0 {
        return (1.0, 0.0);
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Composite Gauss–Legendre rule with `panels` equal panels of `order` points.
pub fn gauss_legendre_composite(f: impl Fn(f64) -> f64, a: f64, b: f64, order: usize, panels: usize) -> f64 {
    let (x, w) = gauss_legendre(order);
    let h = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let lo = a + p as f64 * h;
        let mut s = 0.0;
        for (xi, wi) in x.iter().zip(&w) {
            s += wi * f(lo + 0.5 * h * (xi + 1.0));
        }
        total += 0.5 * h * s;
    }
    total
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TanhSinhResult {
    pub value: f64,
    /// Difference between the last two refinement levels.
    pub error: f64,
    pub evaluations: usize,
}

/// Node at parameter `tau`: returns (x in (-1,1), 1 + x, 1 - x, weight dx/dτ).
fn ts_node(tau: f64) -> (f64, f64, f64, f64) {
    let s = std::f64::consts::FRAC_PI_2 * tau.sinh();
    let e = (2.0 * s).exp();
    let one_minus = 2.0 / (1.0 + e);
    let one_plus = 2.0 / (1.0 + 1.0 / e);
    let cosh_s = s.cosh();
    let w = std::f64::consts::FRAC_PI_2 * tau.cosh() / (cosh_s * cosh_s);
    (s.tanh(), one_plus, one_minus, w)
}

fn ts_sum(f: &impl Fn(f64, f64, f64) -> f64, a: f64, b: f64, taus: impl Iterator<Item = f64>) -> (f64, usize) {
    let d = 0.5 * (b - a);
    let mut sum = 0.0;
    let mut count = 0;
    for tau in taus {
        let (x, one_plus, one_minus, w) = ts_node(tau);
        let dl = d * one_plus;
        let dr = d * one_minus;
        if dl <= 0.0 || dr <= 0.0 || w == 0.0 {
            continue;
        }
        let t = if x < 0.0 { a + dl } else { b - dr };
        let y = f(t.clamp(a, b), dl, dr);
        count += 1;
        if y.is_finite() {
            sum += w * y;
        }
    }
    (d * sum, count)
}

/// Adaptive tanh-sinh: halves the step until two successive levels agree to `rel_tol`.
///
/// `f(t, t - a, b - t)` is integrated over `[a, b]`.
pub fn tanh_sinh(f: impl Fn(f64, f64, f64) -> f64, a: f64, b: f64, rel_tol: f64) -> Result<TanhSinhResult> {
    if !(b > a) {
        return Ok(TanhSinhResult { value: 0.0, error: 0.0, evaluations: 0 });
    }
    let mut h = 1.0;
    let m = (TAU_MAX / h) as i64;
    let (mut raw, mut evals) = ts_sum(&f, a, b, (-m..=m).map(|k| k as f64 * h));
    let mut value = h * raw;
    let mut error = f64::INFINITY;
    for level in 1..=MAX_LEVEL {
        h *= 0.5;
        let m = (TAU_MAX / h) as i64;
        let (extra, n) = ts_sum(&f, a, b, (-m..=m).filter(|k| k % 2 != 0).map(|k| k as f64 * h));
        raw += extra;
        evals += n;
        let next = h * raw;
        error = (next - value).abs();
        value = next;
        if level >= 3 && error <= rel_tol * value.abs() {
            return Ok(TanhSinhResult { value, error, evaluations: evals });
        }
    }
    Err(Error::Quadrature(format!(
        "tanh-sinh stalled at {value:e} with level difference {error:e}"
    )))
}

/// Tanh-sinh with exactly `nodes` equispaced parameters on `[-TAU_MAX, TAU_MAX]`.
pub fn tanh_sinh_fixed(f: impl Fn(f64, f64, f64) -> f64, a: f64, b: f64, nodes: usize) -> TanhSinhResult {
    if !(b > a) || nodes < 2 {
        return TanhSinhResult { value: 0.0, error: 0.0, evaluations: 0 };
    }
    let h = 2.0 * TAU_MAX / (nodes - 1) as f64;
    let (raw, evals) = ts_sum(&f, a, b, (0..nodes).map(|k| -TAU_MAX + k as f64 * h));
    TanhSinhResult { value: h * raw, error: f64::NAN, evaluations: evals }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_integrates_polynomials() {
        for n in [1, 2, 5, 8, 16, 32] {
            let (x, w) = gauss_legendre(n);
            assert!((w.iter().sum::<f64>() - 2.0).abs() < 1e-14);
            for deg in 0..(2 * n) {
                let s: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(deg as i32)).sum();
                let want = if deg % 2 == 1 { 0.0 } else { 2.0 / (deg as f64 + 1.0) };
                assert!((s - want).abs() < 1e-13, "n={n} deg={deg}");
            }
        }
    }

    #[test]
    fn composite_rule_on_oscillatory_integrand() {
        let v = gauss_legendre_composite(|t| (50.0 * t).cos(), 0.0, 1.0, 16, 20);
        assert!((v - 50f64.sin() / 50.0).abs() < 1e-14);
    }

    #[test]
    fn tanh_sinh_handles_endpoint_singularities() {
        // ∫_0^1 t^{-1/2} (1-t)^{-1/3} dt = B(1/2, 2/3)
        let r = tanh_sinh(|_, dl, dr| dl.powf(-0.5) * dr.powf(-1.0 / 3.0), 0.0, 1.0, 1e-13).unwrap();
        let want = 2.587_109_559_229_79;
        assert!((r.value - want).abs() < 1e-12 * want, "{}", r.value);
    }

    #[test]
    fn tanh_sinh_smooth_integrand() {
        let r = tanh_sinh(|t, _, _| t.exp(), -1.0, 2.0, 1e-14).unwrap();
        let want = 2f64.exp() - (-1f64).exp();
        assert!((r.value - want).abs() < 1e-13 * want);
    }

    #[test]
    fn coarse_fixed_rule_is_inaccurate() {
        let want = 2.587_109_559_229_79;
        let coarse = tanh_sinh_fixed(|_, dl, dr| dl.powf(-0.5) * dr.powf(-1.0 / 3.0), 0.0, 1.0, 4);
        assert!((coarse.value - want).abs() > 1e-3);
        let fine = tanh_sinh_fixed(|_, dl, dr| dl.powf(-0.5) * dr.powf(-1.0 / 3.0), 0.0, 1.0, 257);
        assert!((fine.value - want).abs() < 1e-10);
    }
}
