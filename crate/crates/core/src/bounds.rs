//! Upper bounds on the minimal length from the 1s Lamb-shift discrepancy.
//!
//! The whole gap between the measured and the computed 1s Lamb shift is
//! charged to the deformation: for each η the 1s shift ΔE(ξ, η) is set equal
//! to the gap and solved for ξ = Δx_min/a.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::spectrum::correction_1s_xi_eta;
use crate::units::{constants, EnergyUnit};

/// Initial ξ bracket for the root search.
pub const XI_BRACKET: (f64, f64) = (1e-9, 1e-2);
/// Relative bracket width at which the search stops.
pub const XI_REL_WIDTH: f64 = 1e-12;
const MAX_EXPANSIONS: usize = 60;
const MAX_ITERATIONS: usize = 400;

/// Measured and computed 1s Lamb shifts, in MHz.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LambData {
    pub l_exp_mhz: f64,
    pub l_theor_mhz: f64,
    /// Quoted one-sigma uncertainties; carried along, never propagated.
    pub l_exp_sigma_mhz: Option<f64>,
    pub l_theor_sigma_mhz: Option<f64>,
}

impl Default for LambData {
    /// 8172.837(22) MHz measured against 8172.731(40) MHz computed.
    fn default() -> Self {
        Self {
            l_exp_mhz: 8172.837,
            l_theor_mhz: 8172.731,
            l_exp_sigma_mhz: Some(0.022),
            l_theor_sigma_mhz: Some(0.040),
        }
    }
}

impl LambData {
    pub fn new(l_exp_mhz: f64, l_theor_mhz: f64) -> Self {
        Self {
            l_exp_mhz,
            l_theor_mhz,
            l_exp_sigma_mhz: None,
            l_theor_sigma_mhz: None,
        }
    }
}

/// Cut-off based bounds reported in earlier work, for annotation only.
pub const REFERENCE_CUTOFF_BOUNDS_M: [(f64, f64); 2] = [(1.0 / 3.0, 1.13e-16), (1.0, 2.87e-17)];

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundPoint {
    pub eta: f64,
    pub xi: f64,
    pub dx_min_m: f64,
}

/// One node of a sweep; failures are kept in place rather than aborting.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundSample {
    pub eta: f64,
    pub outcome: Result<BoundPoint>,
}

/// L_exp − L_theor in MHz.
pub fn lamb_discrepancy(data: &LambData) -> Result<f64> {
    if !data.l_exp_mhz.is_finite() || !data.l_theor_mhz.is_finite() {
        return Err(Error::InvalidData("Lamb shifts must be finite".into()));
    }
    if data.l_exp_mhz <= data.l_theor_mhz {
        return Err(Error::InvalidData(format!(
            "measured Lamb shift {} MHz must exceed the computed {} MHz",
            data.l_exp_mhz, data.l_theor_mhz
        )));
    }
    Ok(decimal_difference(data.l_exp_mhz, data.l_theor_mhz))
}

/// `a − b` computed exactly on the shortest decimal representations of the
/// operands and rounded once, so 8172.837 − 8172.731 gives 0.106 rather than
/// 0.10599999999976717.
pub fn decimal_difference(a: f64, b: f64) -> f64 {
    fn decompose(x: f64) -> Option<(i128, u32)> {
        let s = format!("{x}");
        let (neg, digits) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.as_str()),
        };
        let (int, frac) = digits.split_once('.').unwrap_or((digits, ""));
        if int.len() + frac.len() > 36 {
            return None;
        }
        let m: i128 = format!("{int}{frac}").parse().ok()?;
        Some((if neg { -m } else { m }, frac.len() as u32))
    }
    let (Some((ma, sa)), Some((mb, sb))) = (decompose(a), decompose(b)) else {
        return a - b;
    };
    let scale = sa.max(sb);
    let align = |m: i128, s: u32| m.checked_mul(10i128.checked_pow(scale - s)?);
    match (align(ma, sa), align(mb, sb)) {
        (Some(x), Some(y)) => match x.checked_sub(y) {
            Some(d) => format!("{d}e-{scale}").parse().unwrap_or(a - b),
            None => a - b,
        },
        _ => a - b,
    }
}

fn shift_mhz(xi: f64, eta: f64) -> Result<f64> {
    Ok(correction_1s_xi_eta(xi, eta)?.value_in(EnergyUnit::MHz))
}

/// ξ at which the 1s shift equals `discrepancy_mhz`.
///
/// Bracketed bisection with secant steps; the bracket starts at
/// [`XI_BRACKET`] and is widened geometrically if it does not straddle the
/// root.
pub fn solve_xi(eta: f64, discrepancy_mhz: f64) -> Result<f64> {
    if !(1.0 / 3.0..=1.0).contains(&eta) {
        return Err(Error::OutOfDomain(format!("eta = {eta} outside [1/3, 1]")));
    }
    if !(discrepancy_mhz > 0.0) || !discrepancy_mhz.is_finite() {
        return Err(Error::InvalidData(format!(
            "discrepancy must be positive, got {discrepancy_mhz} MHz"
        )));
    }
    let g = |xi: f64| shift_mhz(xi, eta).map(|v| v - discrepancy_mhz);

    let (mut lo, mut hi) = XI_BRACKET;
    let mut g_lo = g(lo)?;
    let mut expansions = 0;
    while g_lo >= 0.0 {
        if g_lo == 0.0 {
            return Ok(lo);
        }
        hi = lo;
        lo *= 0.5;
        g_lo = g(lo)?;
        expansions += 1;
        if expansions > MAX_EXPANSIONS || lo == 0.0 {
            return Err(Error::NoRoot { eta, lo, hi });
        }
    }
    let mut g_hi = g(hi)?;
    let mut prev = (lo, g_lo);
    while g_hi <= 0.0 {
        if g_hi == 0.0 {
            return Ok(hi);
        }
        if g_hi < prev.1 {
            return Err(Error::NonMonotone { eta, xi: hi });
        }
        prev = (hi, g_hi);
        lo = hi;
        g_lo = g_hi;
        hi *= 2.0;
        expansions += 1;
        if expansions > MAX_EXPANSIONS || !hi.is_finite() {
            return Err(Error::NoRoot { eta, lo, hi });
        }
        g_hi = match g(hi) {
            Ok(v) if v.is_finite() => v,
            _ => return Err(Error::NoRoot { eta, lo, hi }),
        };
    }

    for _ in 0..MAX_ITERATIONS {
        let width = hi - lo;
        let secant = lo - g_lo * width / (g_hi - g_lo);
        if width <= XI_REL_WIDTH * secant.abs() {
            return Ok(secant);
        }
        let mid = 0.5 * (lo + hi);
        // take the secant point when it is well inside the bracket
        let trial = if secant > lo + 0.01 * width && secant < hi - 0.01 * width {
            secant
        } else {
            mid
        };
        let g_trial = g(trial)?;
        if g_trial == 0.0 {
            return Ok(trial);
        }
        if g_trial < 0.0 {
            lo = trial;
            g_lo = g_trial;
        } else {
            hi = trial;
            g_hi = g_trial;
        }
        // a secant step that barely moves one end is followed by a bisection
        if trial == secant {
            let mid = 0.5 * (lo + hi);
            let g_mid = g(mid)?;
            if g_mid == 0.0 {
                return Ok(mid);
            }
            if g_mid < 0.0 {
                lo = mid;
                g_lo = g_mid;
            } else {
                hi = mid;
                g_hi = g_mid;
            }
        }
    }
    Ok(lo - g_lo * (hi - lo) / (g_hi - g_lo))
}

/// Minimal-length bound for every η on a strictly increasing grid in [1/3, 1].
pub fn bound_curve(eta_grid: &[f64], data: &LambData) -> Result<Vec<BoundSample>> {
    for w in eta_grid.windows(2) {
        if !(w[1] > w[0]) {
            return Err(Error::OutOfDomain("eta grid must be strictly increasing".into()));
        }
    }
    if let Some(&bad) = eta_grid.iter().find(|e| !(1.0 / 3.0..=1.0).contains(*e)) {
        return Err(Error::OutOfDomain(format!("eta = {bad} outside [1/3, 1]")));
    }
    let discrepancy = lamb_discrepancy(data)?;
    let a0 = constants().bohr_radius_m;
    Ok(eta_grid
        .iter()
        .map(|&eta| BoundSample {
            eta,
            outcome: solve_xi(eta, discrepancy).map(|xi| BoundPoint {
                eta,
                xi,
                dx_min_m: xi * a0,
            }),
        })
        .collect())
}

/// `count` evenly spaced η values on [1/3, 1], both ends included.
pub fn uniform_eta_grid(count: usize) -> Vec<f64> {
    linspace(1.0 / 3.0, 1.0, count)
}

pub fn linspace(start: f64, stop: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![start],
        _ => {
            let step = (stop - start) / (count - 1) as f64;
            (0..count)
                .map(|i| if i + 1 == count { stop } else { start + step * i as f64 })
                .collect()
        }
    }
}
