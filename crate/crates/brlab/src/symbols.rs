//! Bilinear multiplier symbols and the exponent bookkeeping for boundedness thresholds.
//!
//! Every named symbol is radial in the joint frequency: it depends on
//! `(ξ, η)` only through `u = |ξ|² + |η|²`.

use std::sync::Arc;

use num_complex::Complex64;
use num_rational::Rational64;

use crate::decomposition::{phi, psi};
use crate::error::{Error, Result};
use crate::special::{bessel_ratio, gamma_pos};

/// A bilinear symbol `m(ξ, η)`; unused frequency components are zero.
pub trait Multiplier: Sync {
    fn eval(&self, xi: [f64; 2], eta: [f64; 2]) -> Complex64;
}

impl<F> Multiplier for F
where
    F: Fn([f64; 2], [f64; 2]) -> Complex64 + Sync,
{
    fn eval(&self, xi: [f64; 2], eta: [f64; 2]) -> Complex64 {
        self(xi, eta)
    }
}

/// `x_+^a`, with the value 0 at `x = 0` for every exponent.
pub fn pos_pow(x: f64, a: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else if a == 0.0 {
        1.0
    } else {
        x.powf(a)
    }
}

pub fn joint_sq(xi: [f64; 2], eta: [f64; 2]) -> f64 {
    xi[0] * xi[0] + xi[1] * xi[1] + eta[0] * eta[0] + eta[1] * eta[1]
}

/// Radial profile table `u ↦ value`, linearly interpolated and zero outside its range.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile {
    u: Vec<f64>,
    values: Vec<Complex64>,
}

impl RadialProfile {
    pub fn new(u: Vec<f64>, values: Vec<Complex64>) -> Result<Self> {
        if u.len() != values.len() || u.len() < 2 {
            return Err(Error::InvalidArgument("profile needs at least two (u, value) rows".into()));
        }
        if u.windows(2).any(|w| !(w[1] > w[0])) || u[0] < 0.0 {
            return Err(Error::InvalidArgument("profile abscissae must be nonnegative and increasing".into()));
        }
        Ok(Self { u, values })
    }

    /// Tabulates `f` on `resolution` equispaced points of `[0, u_max]`.
    pub fn sample(f: impl Fn(f64) -> Complex64, u_max: f64, resolution: usize) -> Result<Self> {
        if resolution < 2 || !(u_max > 0.0) {
            return Err(Error::InvalidArgument("profile sampling needs u_max > 0 and resolution >= 2".into()));
        }
        let u: Vec<f64> = (0..resolution).map(|i| u_max * i as f64 / (resolution - 1) as f64).collect();
        let values = u.iter().map(|&x| f(x)).collect();
        Self::new(u, values)
    }

    pub fn eval(&self, u: f64) -> Complex64 {
        let n = self.u.len();
        if u < self.u[0] || u > self.u[n - 1] {
            return Complex64::new(0.0, 0.0);
        }
        let k = self.u.partition_point(|&x| x <= u).clamp(1, n - 1);
        let (u0, u1) = (self.u[k - 1], self.u[k]);
        let w = (u - u0) / (u1 - u0);
        self.values[k - 1] * (1.0 - w) + self.values[k] * w
    }

    /// Columns `u, value_re, value_im` with a header row.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut u = Vec::new();
        let mut values = Vec::new();
        let mut header_seen = false;
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if !header_seen {
                header_seen = true;
                if line.replace(' ', "") != "u,value_re,value_im" {
                    return Err(Error::Csv { line: no + 1, msg: "expected header u,value_re,value_im".into() });
                }
                continue;
            }
            let cols: Vec<&str> = line.split(',').map(str::trim).collect();
            let parse = |s: &str| s.parse::<f64>().map_err(|_| Error::Csv { line: no + 1, msg: format!("bad number {s:?}") });
            if cols.len() != 3 {
                return Err(Error::Csv { line: no + 1, msg: "expected three columns".into() });
            }
            u.push(parse(cols[0])?);
            values.push(Complex64::new(parse(cols[1])?, parse(cols[2])?));
        }
        Self::new(u, values)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("u,value_re,value_im\n");
        for (u, v) in self.u.iter().zip(&self.values) {
            out.push_str(&format!(
                "{},{},{}\n",
                crate::spectral::fmt_f64(*u),
                crate::spectral::fmt_f64(v.re),
                crate::spectral::fmt_f64(v.im)
            ));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SymbolDescriptor {
    BochnerRiesz { alpha: f64, r: f64 },
    SquareKernel { alpha: f64, r: f64 },
    Schrodinger { beta: f64, s: f64 },
    Spherical { beta: f64, n: usize, s: f64 },
    GFunction { u: f64 },
    AnnulusPiece { j: usize },
    Custom(Arc<RadialProfile>),
}

fn check_index(alpha: f64) -> Result<()> {
    if alpha > -1.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("index α = {alpha} must exceed -1")))
    }
}

fn check_scale(name: &str, r: f64) -> Result<()> {
    if r > 0.0 && r.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("{name} = {r} must be positive")))
    }
}

impl SymbolDescriptor {
    pub fn bochner_riesz(alpha: f64, r: f64) -> Result<Self> {
        check_index(alpha)?;
        check_scale("R", r)?;
        Ok(Self::BochnerRiesz { alpha, r })
    }

    pub fn square_kernel(alpha: f64, r: f64) -> Result<Self> {
        check_index(alpha)?;
        check_scale("R", r)?;
        Ok(Self::SquareKernel { alpha, r })
    }

    pub fn schrodinger(beta: f64, s: f64) -> Result<Self> {
        check_scale("β", beta)?;
        check_scale("s", s)?;
        Ok(Self::Schrodinger { beta, s })
    }

    pub fn spherical(beta: f64, n: usize, s: f64) -> Result<Self> {
        let order = beta + n as f64;
        let excluded = order + 1.0 <= 0.0 && (order + 1.0).fract() == 0.0;
        if excluded || order < 0.0 {
            return Err(Error::InvalidArgument(format!("spherical order β + n = {order} not admissible")));
        }
        check_scale("s", s)?;
        Ok(Self::Spherical { beta, n, s })
    }

    pub fn gfunction(u: f64) -> Result<Self> {
        check_scale("u", u)?;
        Ok(Self::GFunction { u })
    }

    /// Evaluates the radial profile at `u = |ξ|² + |η|²`.
    pub fn eval_radial(&self, u: f64) -> Complex64 {
        let re = |x: f64| Complex64::new(x, 0.0);
        match self {
            Self::BochnerRiesz { alpha, r } => re(pos_pow(1.0 - u / (r * r), *alpha)),
            Self::SquareKernel { alpha, r } => {
                let s = u / (r * r);
                re(2.0 * (alpha + 1.0) * s * pos_pow(1.0 - s, *alpha))
            }
            Self::Schrodinger { beta, s } => {
                let v = s * s * u;
                Complex64::from_polar(1.0, v.abs().powf(*beta))
            }
            Self::Spherical { beta, n, s } => re(spherical_profile(*beta, *n, s * s * u)),
            Self::GFunction { u: scale } => {
                let v = scale * u;
                re(v * phi(v))
            }
            Self::AnnulusPiece { j } => re(psi(2f64.powi(*j as i32) * (1.0 - u))),
            Self::Custom(p) => p.eval(u),
        }
    }
}

impl Multiplier for SymbolDescriptor {
    fn eval(&self, xi: [f64; 2], eta: [f64; 2]) -> Complex64 {
        self.eval_radial(joint_sq(xi, eta))
    }
}

/// ω_β(u) = 2^{β+n−1} Γ(β+n+1) J_{β+n}(√u) / u^{(β+n)/2}.
pub fn spherical_profile(beta: f64, n: usize, u: f64) -> f64 {
    let nu = beta + n as f64;
    2f64.powf(nu - 1.0) * gamma_pos(nu + 1.0) * bessel_ratio(nu, u.max(0.0).sqrt())
}

pub fn br_symbol(alpha: f64, r: f64, xi: [f64; 2], eta: [f64; 2]) -> Result<f64> {
    Ok(SymbolDescriptor::bochner_riesz(alpha, r)?.eval(xi, eta).re)
}

pub fn sq_kernel_symbol(alpha: f64, r: f64, xi: [f64; 2], eta: [f64; 2]) -> Result<f64> {
    Ok(SymbolDescriptor::square_kernel(alpha, r)?.eval(xi, eta).re)
}

pub fn schrodinger_symbol(beta: f64, s: f64, xi: [f64; 2], eta: [f64; 2]) -> Result<Complex64> {
    Ok(SymbolDescriptor::schrodinger(beta, s)?.eval(xi, eta))
}

pub fn spherical_symbol(beta: f64, n: usize, s: f64, xi: [f64; 2], eta: [f64; 2]) -> Result<f64> {
    Ok(SymbolDescriptor::spherical(beta, n, s)?.eval(xi, eta).re)
}

pub fn gfun_symbol(u: f64, xi: [f64; 2], eta: [f64; 2]) -> Result<f64> {
    Ok(SymbolDescriptor::gfunction(u)?.eval(xi, eta).re)
}

pub fn annulus_symbol(j: usize, xi: [f64; 2], eta: [f64; 2]) -> f64 {
    SymbolDescriptor::AnnulusPiece { j }.eval(xi, eta).re
}

/// Exponents `p1, p2 ∈ [1, ∞]` stored through their reciprocals, with `1/p = 1/p1 + 1/p2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExponentTriple {
    inv_p1: Rational64,
    inv_p2: Rational64,
}

impl ExponentTriple {
    pub fn from_reciprocals(inv_p1: Rational64, inv_p2: Rational64) -> Result<Self> {
        let zero = Rational64::from_integer(0);
        let one = Rational64::from_integer(1);
        for r in [inv_p1, inv_p2] {
            if r < zero || r > one {
                return Err(Error::InvalidArgument(format!("exponent reciprocal {r} outside [0, 1]")));
            }
        }
        Ok(Self { inv_p1, inv_p2 })
    }

    /// Parses exponents written as `2`, `4/3` or `inf`.
    pub fn parse(p1: &str, p2: &str) -> Result<Self> {
        Self::from_reciprocals(parse_reciprocal(p1)?, parse_reciprocal(p2)?)
    }

    pub fn inv_p1(&self) -> Rational64 {
        self.inv_p1
    }

    pub fn inv_p2(&self) -> Rational64 {
        self.inv_p2
    }

    pub fn inv_p(&self) -> Rational64 {
        self.inv_p1 + self.inv_p2
    }

    pub fn p1(&self) -> f64 {
        recip_to_f64(self.inv_p1)
    }

    pub fn p2(&self) -> f64 {
        recip_to_f64(self.inv_p2)
    }

    pub fn p(&self) -> f64 {
        recip_to_f64(self.inv_p())
    }
}

fn recip_to_f64(r: Rational64) -> f64 {
    if *r.numer() == 0 {
        f64::INFINITY
    } else {
        *r.denom() as f64 / *r.numer() as f64
    }
}

fn parse_reciprocal(s: &str) -> Result<Rational64> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("inf") || s == "∞" {
        return Ok(Rational64::from_integer(0));
    }
    let bad = || Error::InvalidArgument(format!("cannot parse exponent {s:?}"));
    let p = match s.split_once('/') {
        Some((a, b)) => Rational64::new(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => Rational64::from_integer(s.parse().map_err(|_| bad())?),
    };
    if p <= Rational64::from_integer(0) {
        return Err(bad());
    }
    Ok(p.recip())
}

/// α(p) = max{n|1/p − 1/2| − 1/2, 0}.
pub fn alpha_p(n: usize, p: f64) -> Result<f64> {
    if !(p > 0.0) {
        return Err(Error::InvalidArgument(format!("exponent p = {p} must be positive")));
    }
    Ok((n as f64 * (1.0 / p - 0.5).abs() - 0.5).max(0.0))
}

/// p₀(n) = 2 + 12/(4n − 6 − k) with n ≡ k mod 3; a zero denominator gives +∞.
pub fn p0(n: usize) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("p₀(n) is defined for n >= 2, got {n}")));
    }
    let k = (n % 3) as i64;
    let den = 4 * n as i64 - 6 - k;
    Ok(if den == 0 { f64::INFINITY } else { 2.0 + 12.0 / den as f64 })
}

/// 𝔭_n = min{p₀(n), 2(n+2)/n}.
pub fn critical_exponent(n: usize) -> Result<f64> {
    Ok(p0(n)?.min(2.0 * (n as f64 + 2.0) / n as f64))
}

pub fn alpha_star(n: usize, p1: f64, p2: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::InvalidArgument("α_* is defined for n >= 2".into()));
    }
    if !(p1 >= 2.0) || !(p2 >= 2.0) {
        return Err(Error::InvalidArgument(format!("exponents ({p1}, {p2}) must be at least 2")));
    }
    let pn = critical_exponent(n)?;
    let a_pn = alpha_p(n, pn)?;
    let frac = |p: f64| (1.0 - 2.0 / p) / (1.0 - 2.0 / pn);
    let v = match (p1 >= pn, p2 >= pn) {
        (true, true) => alpha_p(n, p1)? + alpha_p(n, p2)?,
        (true, false) => alpha_p(n, p1)? + frac(p2) * a_pn,
        (false, true) => frac(p1) * a_pn + alpha_p(n, p2)?,
        (false, false) => (2.0 - 2.0 / p1 - 2.0 / p2) / (1.0 - 2.0 / pn) * a_pn,
    };
    Ok(v)
}
