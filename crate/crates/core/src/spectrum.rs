//! First-order energy shifts of hydrogen levels under the deformed algebra.
//!
//! Two routes are provided:
//!
//! * the ordinary expansion of 1/R, which carries a ħ²(D−1)/r³ term and
//!   therefore diverges for s-states in three dimensions, and
//! * the shifted expansion around √(r² + b²), b² = ħ²α(D−1), which replaces
//!   that term by the finite smeared Coulomb difference 1/√(r²+b²) − 1/r.
//!
//! All energies are in Hartree (ħ = m = e = a = 1).

use std::f64::consts::PI;

use serde::Serialize;

use crate::deformation::{slevel_domain_check, DeformationParams};
use crate::error::{Error, Result};
use crate::hydrogen::{expectations, QuantumLevel};
use crate::specfun::{struve_minus_y, EULER_GAMMA};
use crate::units::EnergyValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    Ordinal,
    Modified,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CorrectionResult {
    pub value: EnergyValue,
    pub method: Method,
    pub level: QuantumLevel,
    pub params: DeformationParams,
    /// Set when the ordinal formula is applied with D ≠ 3: it is evaluated
    /// with 1/n³, and 1/n̄³ would be an equally defensible normalization.
    pub ambiguous_normalization: bool,
}

/// x·ln(x) with the analytic limit 0 at x = 0.
fn x_ln_x(x: f64, ln_arg: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * ln_arg.ln()
    }
}

/// Ordinary first-order correction for a D-dimensional level:
///
/// ```text
/// ΔE = 1/n³ · [ (D−1)(2β−β′) / (4 l̄(l̄+1)(l̄+½)) + (2β+β′)/(l̄+½) − (β+β′)/n̄ ]
/// ```
pub fn correction_ordinal(level: &QuantumLevel, p: &DeformationParams) -> Result<CorrectionResult> {
    let lb = level.l_bar();
    let nb = level.n_bar();
    let denom = lb * (lb + 1.0) * (lb + 0.5);
    if denom == 0.0 {
        return Err(Error::DivergentLevel {
            n: level.n(),
            l: level.l(),
            dim: level.dim(),
        });
    }
    let (beta, beta_p) = (p.beta(), p.beta_prime());
    let d = 2.0 * beta - beta_p;
    let n = f64::from(level.n());
    let dim = f64::from(level.dim());
    let bracket = (dim - 1.0) * d / (4.0 * denom) + (2.0 * beta + beta_p) / (lb + 0.5) - (beta + beta_p) / nb;
    Ok(CorrectionResult {
        value: EnergyValue::hartree(bracket / (n * n * n)),
        method: Method::Ordinal,
        level: *level,
        params: *p,
        ambiguous_normalization: level.dim() != 3,
    })
}

/// ⟨1/√(r²+b²)⟩ in the 1s state:
///
/// ```text
/// 4 [ (πb/4)(H₁(2b) − Y₁(2b)) − (πb²/2)(H₀(2b) − Y₀(2b)) ]
/// ```
///
/// Depends on b only through b², and tends to ⟨1/r⟩ = 1 as b → 0.
pub fn smeared_coulomb_1s(b: f64) -> f64 {
    let b = b.abs();
    if b == 0.0 {
        return 1.0;
    }
    4.0 * laplace_moments(b, 2.0)[2]
}

/// The 1s formula with the H₁ − Y₁ coefficient πab instead of πab/4.
/// Kept only so verification runs can show that it fails.
pub fn smeared_coulomb_1s_pi_ab(b: f64) -> f64 {
    let b = b.abs();
    if b == 0.0 {
        return 4.0;
    }
    let x = 2.0 * b;
    let k = struve_minus_y(1, x).expect("x > 0").value;
    let g = struve_minus_y(0, x).expect("x > 0").value;
    4.0 * (PI * b * k - 0.5 * PI * b * b * g)
}

/// ⟨1/√(r²+b²)⟩ in the 2s state, from the same Laplace-transform identity
/// applied to the density ½(r² − r³ + r⁴/4)e^{−r}.
pub fn smeared_coulomb_2s(b: f64) -> f64 {
    let b = b.abs();
    if b == 0.0 {
        return 0.25;
    }
    let m = laplace_moments(b, 1.0);
    0.5 * (m[2] - m[3] + 0.25 * m[4])
}

/// M_k = ∫₀^∞ r^k e^{−pr} / √(r²+b²) dr for k = 2, 3, 4 (entries 0 and 1
/// are left at zero).
///
/// With G = H₀ − Y₀ and K = H₁ − Y₁ at x = bp, the base transform is
/// (π/2)G(bp); its p-derivatives close on {1, G, K} because
/// G′ = 2/π − K and K′ = G − K/x.
fn laplace_moments(b: f64, p: f64) -> [f64; 5] {
    let x = b * p;
    let g = struve_minus_y(0, x).expect("x > 0").value;
    let k = struve_minus_y(1, x).expect("x > 0").value;
    let (b2, b3, b4) = (b * b, b * b * b, b * b * b * b);
    let (p2, p3) = (p * p, p * p * p);
    // b^j G^{(j)}(bp)
    let d2 = -b2 * g + b * k / p;
    let d3 = b2 * g / p + b3 * k - 2.0 * b * k / p2 - 2.0 * b3 / PI;
    let d4 = b4 * g - 3.0 * b2 * g / p2 - 2.0 * b3 * k / p + 6.0 * b * k / p3 + 2.0 * b3 / (PI * p);
    let half_pi = 0.5 * PI;
    [0.0, 0.0, half_pi * d2, -half_pi * d3, half_pi * d4]
}

fn check_modified_level(level: &QuantumLevel) -> Result<()> {
    if level.dim() != 3 || level.l() != 0 || level.n() > 2 {
        return Err(Error::OutOfDomain(format!(
            "modified perturbation theory is implemented for 1s and 2s (D = 3); got {}",
            level.label()
        )));
    }
    Ok(())
}

fn check_modified_params(p: &DeformationParams) -> Result<()> {
    if !slevel_domain_check(p) {
        return Err(Error::OutOfDomain(format!(
            "2β < β′ outside modified-theory domain (β = {}, β′ = {})",
            p.beta(),
            p.beta_prime()
        )));
    }
    Ok(())
}

/// ⟨ψ|V|ψ⟩ for
///
/// ```text
/// V = β′p⁴/2 − (1/√(r²+b²) − 1/r) + ((2β−β′)/4)((1/r)p² + p²(1/r))
/// ```
///
/// using the exact smeared expectation rather than its small-b expansion.
pub fn perturbation_expectation(level: &QuantumLevel, p: &DeformationParams) -> Result<f64> {
    check_modified_level(level)?;
    check_modified_params(p)?;
    let e = expectations(level)?;
    let b = p.b_shift(3)?;
    let smeared = if level.n() == 1 {
        smeared_coulomb_1s(b)
    } else {
        smeared_coulomb_2s(b)
    };
    let d = p.two_beta_minus_beta_prime();
    Ok(0.5 * p.beta_prime() * e.p4 - (smeared - e.inv_r) + 0.25 * d * e.mixed)
}

fn modified(level: QuantumLevel, p: &DeformationParams, hartree: f64) -> CorrectionResult {
    CorrectionResult {
        value: EnergyValue::hartree(hartree),
        method: Method::Modified,
        level,
        params: *p,
        ambiguous_normalization: false,
    }
}

/// 1s shift: 3β + β′ − (2β−β′)(ln(2β−β′) + 2γ + 1).
pub fn correction_1s(p: &DeformationParams) -> Result<CorrectionResult> {
    check_modified_params(p)?;
    let d = p.two_beta_minus_beta_prime();
    let value = 3.0 * p.beta() + p.beta_prime() - x_ln_x(d, d) - d * (2.0 * EULER_GAMMA + 1.0);
    Ok(modified(QuantumLevel::ground(), p, value))
}

/// 2s shift: (1/8)[(7β + 3β′)/2 − (2β−β′)(ln((2β−β′)/4) + 2γ + 5/2)].
pub fn correction_2s(p: &DeformationParams) -> Result<CorrectionResult> {
    check_modified_params(p)?;
    let d = p.two_beta_minus_beta_prime();
    let bracket = 0.5 * (7.0 * p.beta() + 3.0 * p.beta_prime())
        - x_ln_x(d, 0.25 * d)
        - d * (2.0 * EULER_GAMMA + 2.5);
    Ok(modified(QuantumLevel::two_s(), p, bracket / 8.0))
}

fn check_xi_eta(xi: f64, eta: f64) -> Result<()> {
    if !(xi >= 0.0) || !xi.is_finite() {
        return Err(Error::OutOfDomain(format!("xi = {xi} must be >= 0")));
    }
    if !(1.0 / 3.0..=1.0).contains(&eta) {
        return Err(Error::OutOfDomain(format!(
            "eta = {eta} outside the modified-theory range [1/3, 1]"
        )));
    }
    Ok(())
}

/// 1s shift in terms of ξ = Δx_min/a and η = β/(β+β′):
/// ξ²[2η + 1 − (3η−1)(ln(ξ²(3η−1)) + 2γ + 1)].
pub fn correction_1s_xi_eta(xi: f64, eta: f64) -> Result<EnergyValue> {
    check_xi_eta(xi, eta)?;
    let xi2 = xi * xi;
    if xi2 == 0.0 {
        return Ok(EnergyValue::hartree(0.0));
    }
    let k = 3.0 * eta - 1.0;
    let bracket = 2.0 * eta + 1.0 - k * (2.0 * EULER_GAMMA + 1.0);
    let value = xi2 * bracket - xi2 * x_ln_x(k, xi2 * k);
    Ok(EnergyValue::hartree(value))
}

/// 2s shift: (ξ²/8)[(4η+3)/2 − (3η−1)(ln(ξ²(3η−1)/4) + 2γ + 5/2)].
pub fn correction_2s_xi_eta(xi: f64, eta: f64) -> Result<EnergyValue> {
    check_xi_eta(xi, eta)?;
    let xi2 = xi * xi;
    if xi2 == 0.0 {
        return Ok(EnergyValue::hartree(0.0));
    }
    let k = 3.0 * eta - 1.0;
    let bracket = 0.5 * (4.0 * eta + 3.0) - k * (2.0 * EULER_GAMMA + 2.5);
    let value = xi2 * bracket - xi2 * x_ln_x(k, 0.25 * xi2 * k);
    Ok(EnergyValue::hartree(value / 8.0))
}

/// Picks the modified theory for 1s/2s in three dimensions and the ordinal
/// formula everywhere else.
pub fn auto_method(level: &QuantumLevel) -> Method {
    if check_modified_level(level).is_ok() {
        Method::Modified
    } else {
        Method::Ordinal
    }
}

pub fn correction(level: &QuantumLevel, p: &DeformationParams, method: Method) -> Result<CorrectionResult> {
    match method {
        Method::Ordinal => correction_ordinal(level, p),
        Method::Modified => {
            check_modified_level(level)?;
            if level.n() == 1 {
                correction_1s(p)
            } else {
                correction_2s(p)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        if a == b {
            0.0
        } else {
            (a - b).abs() / a.abs().max(b.abs())
        }
    }

    fn params(beta: f64, beta_prime: f64) -> DeformationParams {
        DeformationParams::from_beta(beta, beta_prime).unwrap()
    }

    #[test]
    fn ordinal_direct_substitution_2p() {
        let (beta, bp) = (0.013, 0.0071);
        let lvl = QuantumLevel::new(2, 1, 3).unwrap();
        let got = correction_ordinal(&lvl, &params(beta, bp)).unwrap();
        let want = (1.0 / 8.0)
            * ((2.0 * beta - bp) * 2.0 / (4.0 * 1.0 * 2.0 * 1.5) + (2.0 * beta + bp) / 1.5 - (beta + bp) / 2.0);
        assert!(rel(got.value.magnitude, want) < 1e-15);
        assert_eq!(got.method, Method::Ordinal);
        assert!(!got.ambiguous_normalization);
    }

    #[test]
    fn ordinal_diverges_for_s_states() {
        let p = params(1e-6, 1e-6);
        for (n, dim) in [(1, 3), (4, 3), (1, 2), (3, 2)] {
            let lvl = QuantumLevel::new(n, 0, dim).unwrap();
            assert!(matches!(correction_ordinal(&lvl, &p), Err(Error::DivergentLevel { .. })));
        }
        let higher_d = QuantumLevel::new(1, 0, 5).unwrap();
        let r = correction_ordinal(&higher_d, &p).unwrap();
        assert!(r.ambiguous_normalization && r.value.magnitude.is_finite());
    }

    #[test]
    fn smeared_limits() {
        assert_eq!(smeared_coulomb_1s(0.0), 1.0);
        assert!((smeared_coulomb_1s(1e-9) - 1.0).abs() < 1e-15);
        assert!((smeared_coulomb_2s(1e-9) - 0.25).abs() < 1e-15);
        assert_eq!(smeared_coulomb_1s(-0.3), smeared_coulomb_1s(0.3));
        // the πab coefficient gives four times ⟨1/r⟩ at small b
        assert!((smeared_coulomb_1s_pi_ab(1e-6) - 4.0).abs() < 1e-5);
    }

    #[test]
    fn smeared_monotone_decreasing_in_b() {
        let mut prev = 1.0;
        for i in 1..60 {
            let b = 0.05 * f64::from(i);
            let v = smeared_coulomb_1s(b);
            assert!(v < prev, "b = {b}");
            prev = v;
        }
    }

    #[test]
    fn correction_1s_undeformed_and_brau() {
        assert_eq!(correction_1s(&params(0.0, 0.0)).unwrap().value.magnitude, 0.0);
        let beta = 2.5e-7;
        let got = correction_1s(&params(beta, 2.0 * beta)).unwrap().value.magnitude;
        assert!(rel(got, 5.0 * beta) < 1e-15);
        assert!(matches!(correction_1s(&params(1.0, 3.0)), Err(Error::OutOfDomain(_))));
    }

    #[test]
    fn correction_2s_undeformed_and_brau() {
        assert_eq!(correction_2s(&params(0.0, 0.0)).unwrap().value.magnitude, 0.0);
        let beta = 4e-5;
        let got = correction_2s(&params(beta, 2.0 * beta)).unwrap().value.magnitude;
        assert!(rel(got, 13.0 * beta / 16.0) < 1e-15);
        assert!(correction_2s(&params(1.0, 2.5)).is_err());
    }

    #[test]
    fn brau_limit_continuity() {
        let beta = 1e-6;
        let at = correction_1s(&params(beta, 2.0 * beta)).unwrap().value.magnitude;
        let mut last_gap = f64::INFINITY;
        for eps in [1e-2, 1e-4, 1e-6, 1e-8, 1e-10] {
            let near = correction_1s(&params(beta, 2.0 * beta * (1.0 - eps))).unwrap().value.magnitude;
            let gap = (near - at).abs();
            assert!(gap < last_gap);
            last_gap = gap;
        }
        assert!(last_gap / at < 1e-8);
        assert!(rel(at, 3.0 * beta + 2.0 * beta) < 1e-15);
    }

    #[test]
    fn xi_eta_special_cases() {
        let xi = 0.037;
        let third = 1.0 / 3.0;
        let got = correction_1s_xi_eta(xi, third).unwrap().magnitude;
        assert!(rel(got, xi * xi * 5.0 / 3.0) < 1e-15);
        let got = correction_2s_xi_eta(xi, third).unwrap().magnitude;
        assert!(rel(got, xi * xi * 13.0 / 48.0) < 1e-15);
        assert_eq!(correction_1s_xi_eta(0.0, 0.8).unwrap().magnitude, 0.0);
        assert_eq!(correction_2s_xi_eta(0.0, 0.8).unwrap().magnitude, 0.0);
        assert!(correction_1s_xi_eta(0.1, 0.2).is_err());
        assert!(correction_2s_xi_eta(-0.1, 0.5).is_err());
    }

    #[test]
    fn xi_eta_matches_beta_form() {
        for &xi in &[1e-8, 1e-5, 3e-3, 0.05, 0.3] {
            for i in 0..=10 {
                let eta = 1.0 / 3.0 + f64::from(i) * (2.0 / 3.0) / 10.0;
                let eta = eta.min(1.0);
                let p = DeformationParams::from_xi_eta(xi, eta).unwrap();
                let a = correction_1s_xi_eta(xi, eta).unwrap().magnitude;
                let b = correction_1s(&p).unwrap().value.magnitude;
                assert!(rel(a, b) < 1e-12, "1s xi={xi} eta={eta}: {a} vs {b}");
                let a = correction_2s_xi_eta(xi, eta).unwrap().magnitude;
                let b = correction_2s(&p).unwrap().value.magnitude;
                assert!(rel(a, b) < 1e-12, "2s xi={xi} eta={eta}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn positive_on_plotted_range() {
        for i in 1..=50 {
            let xi = 0.002 * f64::from(i);
            for j in 0..=20 {
                let eta = (1.0 / 3.0 + f64::from(j) / 30.0).min(1.0);
                assert!(correction_1s_xi_eta(xi, eta).unwrap().magnitude > 0.0);
            }
        }
    }

    #[test]
    fn perturbation_expectation_limits() {
        let g = QuantumLevel::ground();
        assert_eq!(perturbation_expectation(&g, &params(0.0, 0.0)).unwrap(), 0.0);
        // commuting-coordinate case: b = 0, V reduces to β′p⁴/2 + 0·mixed
        let beta = 3e-6;
        let v = perturbation_expectation(&g, &params(beta, 2.0 * beta)).unwrap();
        assert!(rel(v, 5.0 * beta) < 1e-15);
        let wrong = QuantumLevel::new(2, 1, 3).unwrap();
        assert!(perturbation_expectation(&wrong, &params(1e-6, 0.0)).is_err());
        assert!(perturbation_expectation(&g, &params(1e-6, 3e-6)).is_err());
    }

    #[test]
    fn auto_method_selection() {
        assert_eq!(auto_method(&QuantumLevel::ground()), Method::Modified);
        assert_eq!(auto_method(&QuantumLevel::two_s()), Method::Modified);
        assert_eq!(auto_method(&QuantumLevel::new(3, 0, 3).unwrap()), Method::Ordinal);
        assert_eq!(auto_method(&QuantumLevel::new(2, 1, 3).unwrap()), Method::Ordinal);
        assert_eq!(auto_method(&QuantumLevel::new(1, 0, 4).unwrap()), Method::Ordinal);
        let p = params(1e-6, 0.0);
        assert!(correction(&QuantumLevel::new(2, 1, 3).unwrap(), &p, Method::Modified).is_err());
    }
}
