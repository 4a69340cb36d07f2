//! Deformation parameters of the minimal-length algebra
//! `[X_i, P_j] = iħ(δ_ij(1 + βP²) + β′P_iP_j)`.
//!
//! Parameters are stored as (β, β′) in atomic units. The minimal length
//! ħ√(β+β′), the ratio ξ = Δx_min/a and the mix η = β/(β+β′) are derived.

use serde::Serialize;

use crate::error::{Error, Result};

/// Relative slack, in units of machine epsilon, under which 2β − β′ is
/// treated as exactly zero.
const BOUNDARY_ULPS: f64 = 8.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DeformationParams {
    beta: f64,
    beta_prime: f64,
}

impl DeformationParams {
    pub fn from_beta(beta: f64, beta_prime: f64) -> Result<Self> {
        if !(beta >= 0.0) || !beta.is_finite() {
            return Err(Error::NegativeParameter { name: "beta", value: beta });
        }
        if !(beta_prime >= 0.0) || !beta_prime.is_finite() {
            return Err(Error::NegativeParameter {
                name: "beta_prime",
                value: beta_prime,
            });
        }
        Ok(Self { beta, beta_prime })
    }

    /// β = η ξ², β′ = (1 − η) ξ² in atomic units.
    pub fn from_xi_eta(xi: f64, eta: f64) -> Result<Self> {
        if !(xi >= 0.0) || !xi.is_finite() {
            return Err(Error::OutOfDomain(format!("xi = {xi} must be >= 0")));
        }
        if !(0.0..=1.0).contains(&eta) {
            return Err(Error::OutOfDomain(format!("eta = {eta} must lie in [0, 1]")));
        }
        let xi2 = xi * xi;
        Ok(Self {
            beta: eta * xi2,
            beta_prime: (1.0 - eta) * xi2,
        })
    }

    pub fn undeformed() -> Self {
        Self { beta: 0.0, beta_prime: 0.0 }
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn beta_prime(&self) -> f64 {
        self.beta_prime
    }

    /// 2β − β′, snapped to zero when it is within rounding of the η = 1/3
    /// boundary β′ = 2β.
    pub fn two_beta_minus_beta_prime(&self) -> f64 {
        let diff = 2.0 * self.beta - self.beta_prime;
        let scale = 2.0 * self.beta + self.beta_prime;
        if diff.abs() <= BOUNDARY_ULPS * f64::EPSILON * scale {
            0.0
        } else {
            diff
        }
    }

    /// α = (2β − β′)/2.
    pub fn alpha(&self) -> f64 {
        0.5 * self.two_beta_minus_beta_prime()
    }

    /// Δx_min = ħ√(β+β′), in Bohr radii.
    pub fn min_length(&self) -> f64 {
        (self.beta + self.beta_prime).sqrt()
    }

    /// ξ = Δx_min / a.
    pub fn xi(&self) -> f64 {
        self.min_length()
    }

    /// η = β/(β+β′); undefined for the undeformed algebra.
    pub fn eta(&self) -> Option<f64> {
        let sum = self.beta + self.beta_prime;
        (sum > 0.0).then(|| self.beta / sum)
    }

    pub fn is_undeformed(&self) -> bool {
        self.beta == 0.0 && self.beta_prime == 0.0
    }

    /// Squared regularizing shift b² = α(D−1) (ħ = 1).
    pub fn b_squared(&self, dim: u32) -> Result<f64> {
        if dim < 2 {
            return Err(Error::OutOfDomain(format!("dimension D = {dim} must be >= 2")));
        }
        if !slevel_domain_check(self) {
            return Err(Error::OutOfDomain(format!(
                "2β < β′ (β = {}, β′ = {}) is outside the modified-theory domain",
                self.beta, self.beta_prime
            )));
        }
        Ok(self.alpha() * f64::from(dim - 1))
    }

    /// b = ħ√(α(D−1)).
    pub fn b_shift(&self, dim: u32) -> Result<f64> {
        self.b_squared(dim).map(f64::sqrt)
    }
}

/// Whether the s-level (modified perturbation theory) formulas apply:
/// 2β ≥ β′, with equality admitted as the commuting-coordinate limit η = 1/3.
pub fn slevel_domain_check(p: &DeformationParams) -> bool {
    p.two_beta_minus_beta_prime() >= 0.0
}

pub fn b_shift(p: &DeformationParams, dim: u32) -> Result<f64> {
    p.b_shift(dim)
}
