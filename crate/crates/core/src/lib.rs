//! First-order hydrogen level shifts under a deformed Heisenberg algebra with
//! a minimal length, together with quadrature cross-checks and Lamb-shift
//! bounds on the minimal length.
//!
//! All internal quantities are in atomic units (ħ = m = e = 1, lengths in
//! Bohr radii, energies in Hartree).

// negated comparisons are used on purpose so NaN inputs are rejected
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod cli;
pub mod deformation;
pub mod error;
pub mod hydrogen;
pub mod oracle;
pub mod quadrature;
pub mod specfun;
pub mod spectrum;
pub mod units;

pub use deformation::DeformationParams;
pub use error::{Error, Result};
pub use hydrogen::QuantumLevel;
pub use spectrum::{CorrectionResult, Method};
pub use units::{EnergyUnit, EnergyValue};
