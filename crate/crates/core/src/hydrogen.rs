//! The undeformed hydrogen problem in D dimensions (atomic units).
//!
//! Energies and ⟨r^{−k}⟩ are the three-dimensional closed forms with
//! n → n̄ = n + (D−3)/2 and l → l̄ = l + (D−3)/2. Momentum moments follow from
//! p²ψ = 2(Eₙ + 1/r)ψ, so ⟨p⁴⟩ and ⟨(1/r)p² + p²(1/r)⟩ reduce to ⟨r^{−k}⟩.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::units::EnergyValue;

/// Largest n for which radial wavefunctions are tabulated.
pub const MAX_RADIAL_N: u32 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QuantumLevel {
    n: u32,
    l: u32,
    #[serde(rename = "D")]
    dim: u32,
}

impl QuantumLevel {
    pub fn new(n: u32, l: u32, dim: u32) -> Result<Self> {
        if n < 1 {
            return Err(Error::OutOfDomain(format!("n = {n} must be >= 1")));
        }
        if l >= n {
            return Err(Error::OutOfDomain(format!("l = {l} must be <= n - 1 = {}", n - 1)));
        }
        if dim < 2 {
            return Err(Error::OutOfDomain(format!("D = {dim} must be >= 2")));
        }
        Ok(Self { n, l, dim })
    }

    pub fn ground() -> Self {
        Self { n: 1, l: 0, dim: 3 }
    }

    pub fn two_s() -> Self {
        Self { n: 2, l: 0, dim: 3 }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    fn shift(&self) -> f64 {
        (f64::from(self.dim) - 3.0) / 2.0
    }

    /// n̄ = n + (D−3)/2.
    pub fn n_bar(&self) -> f64 {
        f64::from(self.n) + self.shift()
    }

    /// l̄ = l + (D−3)/2.
    pub fn l_bar(&self) -> f64 {
        f64::from(self.l) + self.shift()
    }

    pub fn is_s_level(&self) -> bool {
        self.l == 0
    }

    /// Spectroscopic label such as "2p" (D = 3) or "1s(D=5)".
    pub fn label(&self) -> String {
        const LETTERS: &[u8] = b"spdfghiklmnoqrtuv";
        let letter = LETTERS
            .get(self.l as usize)
            .map(|&c| (c as char).to_string())
            .unwrap_or_else(|| format!("[l={}]", self.l));
        if self.dim == 3 {
            format!("{}{}", self.n, letter)
        } else {
            format!("{}{}(D={})", self.n, letter, self.dim)
        }
    }
}

/// ⟨1/r³⟩ is infinite for s-states in three dimensions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Moment {
    Finite(f64),
    Divergent,
}

impl Moment {
    pub fn finite(self) -> Option<f64> {
        match self {
            Moment::Finite(v) => Some(v),
            Moment::Divergent => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExpectationSet {
    pub energy: f64,
    pub inv_r: f64,
    pub inv_r2: f64,
    pub inv_r3: Moment,
    pub p2: f64,
    pub p4: f64,
    /// ⟨(1/r)p² + p²(1/r)⟩
    pub mixed: f64,
}

/// Eₙ = −1/(2n̄²) Hartree.
pub fn energy(level: &QuantumLevel) -> EnergyValue {
    EnergyValue::hartree(energy_au(level))
}

pub(crate) fn energy_au(level: &QuantumLevel) -> f64 {
    let nb = level.n_bar();
    -0.5 / (nb * nb)
}

/// Closed-form expectation values for `level`.
///
/// Fails only for l̄ = −1/2 (D = 2, l = 0), where already ⟨1/r²⟩ diverges.
pub fn expectations(level: &QuantumLevel) -> Result<ExpectationSet> {
    let nb = level.n_bar();
    let lb = level.l_bar();
    if lb + 0.5 == 0.0 {
        return Err(Error::DivergentLevel {
            n: level.n,
            l: level.l,
            dim: level.dim,
        });
    }
    let e = energy_au(level);
    let n3 = nb * nb * nb;
    let inv_r = 1.0 / (nb * nb);
    let inv_r2 = 1.0 / (n3 * (lb + 0.5));
    let denom3 = lb * (lb + 0.5) * (lb + 1.0);
    let inv_r3 = if denom3 == 0.0 {
        Moment::Divergent
    } else {
        Moment::Finite(1.0 / (n3 * denom3))
    };
    Ok(ExpectationSet {
        energy: e,
        inv_r,
        inv_r2,
        inv_r3,
        p2: 2.0 * (e + inv_r),
        p4: 4.0 * (e * e + 2.0 * e * inv_r + inv_r2),
        mixed: 4.0 * (e * inv_r + inv_r2),
    })
}

/// Associated Laguerre polynomial L_k^{(α)}(x) by upward recurrence.
fn laguerre(k: u32, alpha: f64, x: f64) -> f64 {
    if k == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + alpha - x;
    for j in 1..k {
        let jf = f64::from(j);
        let next = ((2.0 * jf + 1.0 + alpha - x) * cur - (jf + alpha) * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

fn ln_factorial(n: u32) -> f64 {
    (2..=n).map(|k| f64::from(k).ln()).sum()
}

/// Radial probability density |R_nl(r)|² r² of the three-dimensional
/// hydrogen eigenstate; integrates to one over r ∈ [0, ∞).
pub fn radial_density(level: &QuantumLevel, r: f64) -> Result<f64> {
    if level.dim != 3 {
        return Err(Error::Unsupported(format!(
            "radial wavefunctions are implemented for D = 3 only (got D = {})",
            level.dim
        )));
    }
    if level.n > MAX_RADIAL_N {
        return Err(Error::Unsupported(format!(
            "radial wavefunctions are implemented for n <= {MAX_RADIAL_N}"
        )));
    }
    if !(r >= 0.0) {
        return Err(Error::OutOfDomain(format!("r = {r} must be >= 0")));
    }
    Ok(radial_density_unchecked(level.n, level.l, r))
}

pub(crate) fn radial_density_unchecked(n: u32, l: u32, r: f64) -> f64 {
    // beyond this the exponential has underflowed and r² would overflow
    if r > 1e5 {
        return 0.0;
    }
    match (n, l) {
        (1, 0) => 4.0 * r * r * (-2.0 * r).exp(),
        (2, 0) => {
            let f = 1.0 - 0.5 * r;
            0.5 * f * f * r * r * (-r).exp()
        }
        _ => {
            let nf = f64::from(n);
            let rho = 2.0 * r / nf;
            // R² = (2/n)³ (n−l−1)! / (2n (n+l)!) e^{−ρ} ρ^{2l} [L_{n−l−1}^{2l+1}(ρ)]²
            let ln_norm = 3.0 * (2.0 / nf).ln() + ln_factorial(n - l - 1)
                - (2.0 * nf).ln()
                - ln_factorial(n + l);
            let lag = laguerre(n - l - 1, f64::from(2 * l + 1), rho);
            if rho == 0.0 {
                return 0.0;
            }
            let ln_rest = ln_norm - rho + f64::from(2 * l) * rho.ln();
            ln_rest.exp() * lag * lag * r * r
        }
    }
}
