//! Physical constants and energy-unit conversion.
//!
//! Everything inside the crate runs in atomic units (ħ = m = e = a = 1, energy
//! in Hartree). Conversion to MHz, eV or multiples of the ground-state binding
//! energy E₀ = e²/2a happens only at the edges.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// CODATA 2018 values used by the whole crate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PhysConstants {
    /// Bohr radius in metres.
    pub bohr_radius_m: f64,
    /// Hartree energy expressed as a frequency, in MHz.
    pub hartree_mhz: f64,
    /// Hartree energy in eV.
    pub hartree_ev: f64,
}

pub const CODATA_2018: PhysConstants = PhysConstants {
    bohr_radius_m: 5.291_772_109_03e-11,
    hartree_mhz: 6.579_683_920_502e9,
    hartree_ev: 27.211_386_245_988,
};

/// Elementary charge over Planck constant, Hz per eV (exact in the 2019 SI).
pub const E_OVER_H_HZ_PER_EV: f64 = 1.602_176_634e-19 / 6.626_070_15e-34;

pub fn constants() -> PhysConstants {
    CODATA_2018
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EnergyUnit {
    Hartree,
    MHz,
    #[serde(rename = "eV")]
    EV,
    /// Multiples of E₀ = e²/2a, i.e. half a Hartree.
    E0Relative,
}

impl EnergyUnit {
    pub const ALL: [EnergyUnit; 4] = [
        EnergyUnit::Hartree,
        EnergyUnit::MHz,
        EnergyUnit::EV,
        EnergyUnit::E0Relative,
    ];

    /// Size of one unit, in Hartree.
    fn in_hartree(self) -> f64 {
        let c = constants();
        match self {
            EnergyUnit::Hartree => 1.0,
            EnergyUnit::MHz => 1.0 / c.hartree_mhz,
            EnergyUnit::EV => 1.0 / c.hartree_ev,
            EnergyUnit::E0Relative => 0.5,
        }
    }

    /// Number of this unit in one Hartree.
    fn per_hartree(self) -> f64 {
        let c = constants();
        match self {
            EnergyUnit::Hartree => 1.0,
            EnergyUnit::MHz => c.hartree_mhz,
            EnergyUnit::EV => c.hartree_ev,
            EnergyUnit::E0Relative => 2.0,
        }
    }
}

impl fmt::Display for EnergyUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EnergyUnit::Hartree => "Hartree",
            EnergyUnit::MHz => "MHz",
            EnergyUnit::EV => "eV",
            EnergyUnit::E0Relative => "E0Relative",
        };
        f.write_str(s)
    }
}

impl FromStr for EnergyUnit {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "hartree" | "au" | "a.u." => Ok(EnergyUnit::Hartree),
            "mhz" => Ok(EnergyUnit::MHz),
            "ev" => Ok(EnergyUnit::EV),
            "e0" | "e0relative" | "e0-relative" => Ok(EnergyUnit::E0Relative),
            other => Err(format!(
                "unknown unit '{other}' (expected hartree, MHz, eV or E0)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnergyValue {
    pub magnitude: f64,
    pub unit: EnergyUnit,
}

impl EnergyValue {
    pub fn new(magnitude: f64, unit: EnergyUnit) -> Self {
        Self { magnitude, unit }
    }

    pub fn hartree(magnitude: f64) -> Self {
        Self::new(magnitude, EnergyUnit::Hartree)
    }

    pub fn to_unit(self, target: EnergyUnit) -> Self {
        convert(self, target)
    }

    /// Magnitude expressed in `target`.
    pub fn value_in(self, target: EnergyUnit) -> f64 {
        convert(self, target).magnitude
    }
}

/// Re-express `x` in the `target` unit.
///
/// Same-unit conversion is the identity, and conversion between Hartree and
/// E₀ is a multiplication by a power of two, so both are exact.
pub fn convert(x: EnergyValue, target: EnergyUnit) -> EnergyValue {
    if x.unit == target {
        return x;
    }
    let hartree = match x.unit {
        EnergyUnit::MHz | EnergyUnit::EV => x.magnitude / x.unit.per_hartree(),
        _ => x.magnitude * x.unit.in_hartree(),
    };
    let magnitude = match target {
        EnergyUnit::MHz | EnergyUnit::EV => hartree * target.per_hartree(),
        _ => hartree / target.in_hartree(),
    };
    EnergyValue::new(magnitude, target)
}
