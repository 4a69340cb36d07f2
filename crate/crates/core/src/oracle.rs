//! Quadrature-backed reference values for every closed form in the crate.
//!
//! Nothing here calls the Struve/Bessel kernel or the closed-form
//! corrections of [`crate::spectrum`] on the reference side: expectation
//! values are integrals of the radial density, and momentum moments are
//! reduced to ⟨r^{−k}⟩ through p²ψ = 2(Eₙ + 1/r)ψ.

use serde::Serialize;

use crate::deformation::{slevel_domain_check, DeformationParams};
use crate::error::{Error, Result};
use crate::hydrogen::{energy, expectations, radial_density, radial_density_unchecked, Moment, QuantumLevel};
use crate::quadrature::integrate_semi_infinite;
pub use crate::quadrature::{QuadratureSpec, Transform};
use crate::spectrum::smeared_coulomb_1s;

/// Pass threshold for closed-form vs quadrature of the smeared Coulomb term.
pub const SMEARED_REL_TOL: f64 = 1e-8;
/// Pass threshold for hydrogen expectation values and assembled corrections.
pub const EXPECTATION_REL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationCase {
    pub name: String,
    pub closed_form: f64,
    pub oracle: f64,
    pub rel_err: f64,
    pub pass: bool,
}

impl VerificationCase {
    pub fn compare(name: impl Into<String>, closed_form: f64, oracle: f64, tol: f64) -> Self {
        let rel_err = relative_error(closed_form, oracle);
        Self {
            name: name.into(),
            closed_form,
            oracle,
            rel_err,
            pass: rel_err <= tol,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub cases: Vec<VerificationCase>,
    pub overall_pass: bool,
}

impl VerificationReport {
    pub fn new(cases: Vec<VerificationCase>) -> Self {
        let overall_pass = cases.iter().all(|c| c.pass);
        Self { cases, overall_pass }
    }

    pub fn merge(reports: impl IntoIterator<Item = VerificationReport>) -> Self {
        Self::new(reports.into_iter().flat_map(|r| r.cases).collect())
    }

    pub fn failures(&self) -> impl Iterator<Item = &VerificationCase> {
        self.cases.iter().filter(|c| !c.pass)
    }
}

pub fn relative_error(value: f64, reference: f64) -> f64 {
    if value == reference {
        return 0.0;
    }
    if reference == 0.0 {
        return value.abs();
    }
    ((value - reference) / reference).abs()
}

fn require_3d(level: &QuantumLevel) -> Result<()> {
    if level.dim() != 3 {
        return Err(Error::Unsupported(format!(
            "quadrature oracle needs D = 3, got {}",
            level.label()
        )));
    }
    radial_density(level, 0.0).map(|_| ())
}

/// ∫₀^∞ |R_nl(r)|² r² f(r) dr.
pub fn quad_expectation<F: Fn(f64) -> f64>(level: &QuantumLevel, integrand: F, spec: &QuadratureSpec) -> Result<f64> {
    require_3d(level)?;
    let (n, l) = (level.n(), level.l());
    let q = integrate_semi_infinite(
        |r| {
            let rho = radial_density_unchecked(n, l, r);
            if rho == 0.0 {
                0.0
            } else {
                rho * integrand(r)
            }
        },
        spec,
    )?;
    Ok(q.value)
}

/// 1/√(r²+b²) − 1/r, written without the cancellation of the naive form.
pub fn smeared_minus_coulomb(r: f64, b: f64) -> f64 {
    let s = (r * r + b * b).sqrt();
    -b * b / (r * s * (r + s))
}

/// ⟨1/√(r²+b²) − 1/r⟩ by quadrature.
pub fn quad_smeared_difference(level: &QuantumLevel, b: f64, spec: &QuadratureSpec) -> Result<f64> {
    quad_expectation(level, |r| smeared_minus_coulomb(r, b), spec)
}

/// Quadrature-derived ⟨r^{−k}⟩ and the momentum moments they imply.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleMoments {
    pub inv_r: f64,
    pub inv_r2: f64,
    pub inv_r3: Option<f64>,
    pub p4: f64,
    pub mixed: f64,
}

pub fn oracle_moments(level: &QuantumLevel, spec: &QuadratureSpec) -> Result<OracleMoments> {
    require_3d(level)?;
    let e = energy(level).magnitude;
    let inv_r = quad_expectation(level, |r| 1.0 / r, spec)?;
    let inv_r2 = quad_expectation(level, |r| 1.0 / (r * r), spec)?;
    let inv_r3 = if level.l() > 0 {
        Some(quad_expectation(level, |r| 1.0 / (r * r * r), spec)?)
    } else {
        None
    };
    Ok(OracleMoments {
        inv_r,
        inv_r2,
        inv_r3,
        // ⟨p⁴⟩ = ‖p²ψ‖² = 4⟨(E + 1/r)²⟩
        p4: 4.0 * (e * e + 2.0 * e * inv_r + inv_r2),
        // ⟨(1/r)p² + p²(1/r)⟩ = 4⟨(E + 1/r)/r⟩
        mixed: 4.0 * (e * inv_r + inv_r2),
    })
}

/// Closed-form ⟨1/√(r²+b²)⟩₁ₛ against quadrature on each b.
pub fn verify_smeared_closed_form(b_grid: &[f64]) -> Result<VerificationReport> {
    verify_smeared_with(b_grid, smeared_coulomb_1s, &QuadratureSpec::default(), SMEARED_REL_TOL)
}

/// Same check with a caller-supplied closed form and pass threshold.
pub fn verify_smeared_with(
    b_grid: &[f64],
    closed_form: impl Fn(f64) -> f64,
    spec: &QuadratureSpec,
    tol: f64,
) -> Result<VerificationReport> {
    let ground = QuantumLevel::ground();
    let mut cases = Vec::with_capacity(b_grid.len());
    for &b in b_grid {
        if !(b > 0.0) {
            return Err(Error::OutOfDomain(format!("smeared check needs b > 0, got {b}")));
        }
        let oracle = quad_expectation(&ground, |r| 1.0 / (r * r + b * b).sqrt(), spec)?;
        cases.push(VerificationCase::compare(
            format!("smeared_coulomb_1s(b={b:e})"),
            closed_form(b),
            oracle,
            tol,
        ));
    }
    Ok(VerificationReport::new(cases))
}

/// Closed-form [`expectations`] against quadrature for a three-dimensional
/// level.
pub fn verify_expectation_set(level: &QuantumLevel) -> Result<VerificationReport> {
    verify_expectation_set_with(level, &QuadratureSpec::default(), EXPECTATION_REL_TOL)
}

pub fn verify_expectation_set_with(level: &QuantumLevel, spec: &QuadratureSpec, tol: f64) -> Result<VerificationReport> {
    let closed = expectations(level)?;
    let oracle = oracle_moments(level, spec)?;
    let tag = level.label();
    let mut cases = vec![
        VerificationCase::compare(format!("{tag} <1/r>"), closed.inv_r, oracle.inv_r, tol),
        VerificationCase::compare(format!("{tag} <1/r^2>"), closed.inv_r2, oracle.inv_r2, tol),
        VerificationCase::compare(format!("{tag} <p^4>"), closed.p4, oracle.p4, tol),
        VerificationCase::compare(format!("{tag} <(1/r)p^2+p^2(1/r)>"), closed.mixed, oracle.mixed, tol),
    ];
    if let (Moment::Finite(c), Some(o)) = (closed.inv_r3, oracle.inv_r3) {
        cases.push(VerificationCase::compare(format!("{tag} <1/r^3>"), c, o, tol));
    }
    Ok(VerificationReport::new(cases))
}

/// ⟨V⟩ of the shifted-expansion perturbation with every bracket taken from
/// quadrature:
///
/// β′⟨p⁴⟩/2 − ⟨1/√(r²+b²) − 1/r⟩ + ((2β−β′)/4)⟨(1/r)p² + p²(1/r)⟩.
pub fn assemble_correction(level: &QuantumLevel, p: &DeformationParams) -> Result<f64> {
    assemble_correction_with(level, p, &QuadratureSpec::default())
}

pub fn assemble_correction_with(level: &QuantumLevel, p: &DeformationParams, spec: &QuadratureSpec) -> Result<f64> {
    if !(level.dim() == 3 && level.l() == 0 && level.n() <= 2) {
        return Err(Error::OutOfDomain(format!(
            "assembly of the modified correction covers 1s and 2s only, got {}",
            level.label()
        )));
    }
    if !slevel_domain_check(p) {
        return Err(Error::OutOfDomain("2β < β′ outside modified-theory domain".into()));
    }
    let m = oracle_moments(level, spec)?;
    let b = p.b_shift(3)?;
    let smeared = if b == 0.0 {
        0.0
    } else {
        quad_smeared_difference(level, b, spec)?
    };
    let d = p.two_beta_minus_beta_prime();
    Ok(0.5 * p.beta_prime() * m.p4 - smeared + 0.25 * d * m.mixed)
}

/// ⟨V⟩ of the ordinary expansion
///
/// β′⟨p⁴⟩/2 + ((2β−β′)/4)(⟨(1/r)p² + p²(1/r)⟩ + (D−1)⟨1/r³⟩)
///
/// with quadrature inputs; only defined where ⟨1/r³⟩ is finite (l ≥ 1).
pub fn assemble_ordinal(level: &QuantumLevel, p: &DeformationParams) -> Result<f64> {
    assemble_ordinal_with(level, p, &QuadratureSpec::default())
}

pub fn assemble_ordinal_with(level: &QuantumLevel, p: &DeformationParams, spec: &QuadratureSpec) -> Result<f64> {
    let m = oracle_moments(level, spec)?;
    let Some(inv_r3) = m.inv_r3 else {
        return Err(Error::DivergentLevel {
            n: level.n(),
            l: level.l(),
            dim: level.dim(),
        });
    };
    let d = 2.0 * p.beta() - p.beta_prime();
    let dim = f64::from(level.dim());
    Ok(0.5 * p.beta_prime() * m.p4 + 0.25 * d * (m.mixed + (dim - 1.0) * inv_r3))
}
