//! Struve functions H₀, H₁ and Bessel functions of the second kind Y₀, Y₁.
//!
//! For x ≤ 16 all four come from their ascending series, summed in
//! double-double arithmetic so that the alternating terms (which reach ~1e5
//! at x = 16) cancel without eating the result. Above 16 the combinations
//! Hν − Yν are computed from the exponentially damped integral
//! representation
//!
//! ```text
//! Hν(x) − Yν(x) = 2(x/2)^ν / (√π Γ(ν+½)) ∫₀^∞ e^{−xt} (1+t²)^{ν−½} dt
//! ```
//!
//! and Yν from its Hankel asymptotic expansion; Hν is then recovered as
//! (Hν − Yν) + Yν.

use std::f64::consts::{FRAC_1_PI, FRAC_2_PI, PI};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quadrature::{integrate_semi_infinite, QuadratureSpec, Transform};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Above this argument the integral/asymptotic route is used.
pub const SERIES_CUTOFF: f64 = 16.0;

const SERIES_REL_STOP: f64 = 1e-18;
const MAX_SERIES_TERMS: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpecFunResult {
    pub value: f64,
    pub est_abs_error: f64,
}

pub fn euler_gamma() -> f64 {
    EULER_GAMMA
}

/// Unnormalized double-double number hi + lo with |lo| ≤ ulp(hi)/2.
#[derive(Debug, Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };

    fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    fn abs(self) -> f64 {
        self.to_f64().abs()
    }

    fn add(self, other: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, other.hi);
        let (t1, t2) = two_sum(self.lo, other.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (hi, lo) = quick_two_sum(s1, s2 + t2);
        Dd { hi, lo }
    }

    fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + (self.hi * other.lo + self.lo * other.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[cfg(test)]
    fn mul_f64(self, b: f64) -> Dd {
        let (p, e) = two_prod(self.hi, b);
        let (hi, lo) = quick_two_sum(p, e + self.lo * b);
        Dd { hi, lo }
    }

    fn div_f64(self, d: f64) -> Dd {
        let q1 = self.hi / d;
        let (p, e) = two_prod(q1, d);
        let r = ((self.hi - p) - e + self.lo) / d;
        let (hi, lo) = quick_two_sum(q1, r);
        Dd { hi, lo }
    }

    fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Result of summing a series in double-double precision.
struct SeriesSum {
    sum: f64,
    last: f64,
    peak: f64,
}

impl SeriesSum {
    /// Error bound on the rounded sum.
    fn error(&self) -> f64 {
        self.last + 1e-30 * self.peak + f64::EPSILON * self.sum.abs()
    }
}

/// Sums Σ_k t_k where t_0 = `first` and t_k = t_{k−1}·(−z)/den(k), optionally
/// weighting each term by `weight(k)`.
fn ratio_series(z: Dd, first: Dd, den: impl Fn(f64) -> f64, weight: impl Fn(usize) -> Dd) -> SeriesSum {
    let neg_z = z.neg();
    let mut term = first;
    let mut sum = term.mul(weight(0));
    let mut peak = sum.abs();
    let mut last = peak;
    // terms grow until k ~ √z, then shrink monotonically
    let turn = z.to_f64().sqrt();
    for k in 1..MAX_SERIES_TERMS {
        let kf = k as f64;
        term = term.mul(neg_z).div_f64(den(kf));
        let t = term.mul(weight(k));
        sum = sum.add(t);
        last = t.abs();
        peak = peak.max(last);
        if kf > turn && last <= SERIES_REL_STOP * sum.abs() {
            break;
        }
        if last == 0.0 {
            break;
        }
    }
    SeriesSum {
        sum: sum.to_f64(),
        last,
        peak,
    }
}

fn unit_weight(_: usize) -> Dd {
    Dd::from_f64(1.0)
}

/// (x/2)² as a double-double.
fn quarter_square(x: f64) -> Dd {
    let h = 0.5 * x;
    let (hi, lo) = two_prod(h, h);
    Dd { hi, lo }
}

/// Harmonic numbers H_0..H_n in double-double.
fn harmonic_numbers(n: usize) -> Vec<Dd> {
    let mut out = Vec::with_capacity(n + 1);
    let mut h = Dd::ZERO;
    out.push(h);
    for k in 1..=n {
        h = h.add(Dd::from_f64(1.0).div_f64(k as f64));
        out.push(h);
    }
    out
}

fn check_order(nu: u32) -> Result<()> {
    if nu > 1 {
        return Err(Error::OutOfDomain(format!("order nu = {nu} not in {{0, 1}}")));
    }
    Ok(())
}

fn struve_series(nu: u32, x: f64) -> SpecFunResult {
    let z = quarter_square(x);
    let (prefactor, s) = if nu == 0 {
        // H₀ = (2x/π) Σ (−z)^k / ((3/2)_k)²
        let s = ratio_series(z, Dd::from_f64(1.0), |k| (k + 0.5) * (k + 0.5), unit_weight);
        (2.0 * x * FRAC_1_PI, s)
    } else {
        // H₁ = (8z/3π) Σ (−z)^k / ((3/2)_k (5/2)_k)
        let s = ratio_series(z, Dd::from_f64(1.0), |k| (k + 0.5) * (k + 1.5), unit_weight);
        (8.0 * z.to_f64() / (3.0 * PI), s)
    };
    let value = prefactor * s.sum;
    SpecFunResult {
        value,
        est_abs_error: prefactor.abs() * s.error() + 2.0 * f64::EPSILON * value.abs(),
    }
}

fn bessel_y_series(nu: u32, x: f64) -> SpecFunResult {
    let z = quarter_square(x);
    let harmonic = harmonic_numbers(MAX_SERIES_TERMS + 1);
    let log_term = (0.5 * x).ln() + EULER_GAMMA;
    if nu == 0 {
        // Y₀ = (2/π)[(ln(x/2)+γ) J₀ − Σ_{k≥1} H_k (−z)^k/(k!)²]
        let j0 = ratio_series(z, Dd::from_f64(1.0), |k| k * k, unit_weight);
        let s = ratio_series(z, Dd::from_f64(1.0), |k| k * k, |k| harmonic[k].neg());
        let a = log_term * j0.sum;
        let value = FRAC_2_PI * (a + s.sum);
        let err = FRAC_2_PI * (log_term.abs() * j0.error() + s.error())
            + 4.0 * f64::EPSILON * (FRAC_2_PI * (a.abs() + s.sum.abs()) + value.abs());
        SpecFunResult {
            value,
            est_abs_error: err,
        }
    } else {
        // Y₁ = (2/π)(ln(x/2)+γ) J₁ − 2/(πx) − (x/2π) Σ (H_k + H_{k+1}) (−z)^k/(k!(k+1)!)
        let half_x = 0.5 * x;
        let j1 = ratio_series(z, Dd::from_f64(1.0), |k| k * (k + 1.0), unit_weight);
        let s = ratio_series(z, Dd::from_f64(1.0), |k| k * (k + 1.0), |k| harmonic[k].add(harmonic[k + 1]));
        let a = FRAC_2_PI * log_term * half_x * j1.sum;
        let pole = FRAC_2_PI / x;
        let c = FRAC_1_PI * half_x * s.sum;
        let value = a - pole - c;
        let err = FRAC_2_PI * log_term.abs() * half_x * j1.error()
            + FRAC_1_PI * half_x * s.error()
            + 4.0 * f64::EPSILON * (a.abs() + pole + c.abs() + value.abs());
        SpecFunResult {
            value,
            est_abs_error: err,
        }
    }
}

/// Hankel expansion of Yν for large x.
fn bessel_y_asymptotic(nu: u32, x: f64) -> SpecFunResult {
    let mu = 4.0 * f64::from(nu * nu);
    let mut p = 0.0;
    let mut q = 0.0;
    let mut coef = 1.0; // a_k(ν)/x^k
    let mut prev = f64::INFINITY;
    let mut last = 0.0;
    for k in 0..200usize {
        if k > 0 {
            let kf = k as f64;
            let odd = 2.0 * kf - 1.0;
            coef *= (mu - odd * odd) / (8.0 * kf * x);
        }
        let mag = coef.abs();
        if mag > prev {
            break;
        }
        let signed = if (k / 2) % 2 == 0 { coef } else { -coef };
        if k % 2 == 0 {
            p += signed;
        } else {
            q += signed;
        }
        last = mag;
        prev = mag;
        if mag < 1e-17 * p.abs().max(q.abs()) {
            break;
        }
    }
    let (s, c) = x.sin_cos();
    let r = std::f64::consts::FRAC_1_SQRT_2;
    // χ = x − (ν/2 + 1/4)π
    let (sin_chi, cos_chi) = if nu == 0 {
        (r * (s - c), r * (c + s))
    } else {
        (-r * (s + c), r * (s - c))
    };
    let amp = (FRAC_2_PI / x).sqrt();
    let value = amp * (p * sin_chi + q * cos_chi);
    let err = amp * (last + 4.0 * f64::EPSILON * (1.0 + x) * (p.abs() + q.abs()));
    SpecFunResult {
        value,
        est_abs_error: err,
    }
}

/// Hν(x) − Yν(x) by quadrature of the damped integral representation.
fn struve_minus_y_integral(nu: u32, x: f64) -> Result<SpecFunResult> {
    let spec = QuadratureSpec {
        rel_tol: 1e-13,
        abs_tol: 0.0,
        max_subdivisions: 200,
        transform: Transform::ExpSubstitution,
    };
    // substitute s = x t; e^{−s} ds with s = −ln(1−u) becomes a plain du
    let inv_x = 1.0 / x;
    let q = if nu == 0 {
        integrate_semi_infinite(
            |s| (-s).exp() / (1.0 + (s * inv_x).powi(2)).sqrt(),
            &spec,
        )?
    } else {
        integrate_semi_infinite(|s| (-s).exp() * (1.0 + (s * inv_x).powi(2)).sqrt(), &spec)?
    };
    let scale = if nu == 0 { FRAC_2_PI * inv_x } else { FRAC_2_PI };
    let value = scale * q.value;
    Ok(SpecFunResult {
        value,
        est_abs_error: scale * q.abs_error + 2.0 * f64::EPSILON * value.abs(),
    })
}

/// Struve function Hν(x), ν ∈ {0, 1}, x ≥ 0.
pub fn struve_h(nu: u32, x: f64) -> Result<SpecFunResult> {
    check_order(nu)?;
    if !(x >= 0.0) || !x.is_finite() {
        return Err(Error::OutOfDomain(format!("struve_h requires finite x >= 0, got {x}")));
    }
    if x == 0.0 {
        return Ok(SpecFunResult {
            value: 0.0,
            est_abs_error: 0.0,
        });
    }
    if x <= SERIES_CUTOFF {
        return Ok(struve_series(nu, x));
    }
    let k = struve_minus_y_integral(nu, x)?;
    let y = bessel_y_asymptotic(nu, x);
    Ok(SpecFunResult {
        value: k.value + y.value,
        est_abs_error: k.est_abs_error + y.est_abs_error,
    })
}

/// Bessel function of the second kind Yν(x), ν ∈ {0, 1}, x > 0.
pub fn bessel_y(nu: u32, x: f64) -> Result<SpecFunResult> {
    check_order(nu)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::OutOfDomain(format!("bessel_y requires finite x > 0, got {x}")));
    }
    if x <= SERIES_CUTOFF {
        Ok(bessel_y_series(nu, x))
    } else {
        Ok(bessel_y_asymptotic(nu, x))
    }
}

/// Hν(x) − Yν(x), ν ∈ {0, 1}, x > 0.
pub fn struve_minus_y(nu: u32, x: f64) -> Result<SpecFunResult> {
    check_order(nu)?;
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::OutOfDomain(format!("struve_minus_y requires finite x > 0, got {x}")));
    }
    if x <= SERIES_CUTOFF {
        let h = struve_series(nu, x);
        let y = bessel_y_series(nu, x);
        Ok(SpecFunResult {
            value: h.value - y.value,
            est_abs_error: h.est_abs_error + y.est_abs_error + f64::EPSILON * (h.value - y.value).abs(),
        })
    } else {
        struve_minus_y_integral(nu, x)
    }
}
