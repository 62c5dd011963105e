//! Unit tags for the handful of units scenario inputs use, and
//! conversion between them.
//!
//! Frequencies are normalised to angular frequency (rad/s): a value in Hz
//! converts to rad/s with a factor 2π. Temperatures may also be read as
//! energies (`KelvinEnergy`, i.e. a temperature times k_B), which is how
//! Debye temperatures are quoted.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use super::constants::{AMU, BOHR_MAGNETON, E_CHARGE, HBAR, KB, PLANCK};
use super::quantity::{Dimension, Quantity};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Unit {
    Metre,
    Millimetre,
    Micrometre,
    Nanometre,
    Kilogram,
    Amu,
    Kelvin,
    Joule,
    /// Energy quoted as a temperature: x K ↦ x·k_B J.
    KelvinEnergy,
    ElectronVolt,
    RadPerSecond,
    Hertz,
    Kilohertz,
    Megahertz,
    Ohm,
    OhmMetre,
    OhmCentimetre,
    Coulomb,
    ElementaryCharge,
    Tesla,
    Gauss,
    JoulePerTesla,
    BohrMagneton,
    /// Magnetic moment quoted as μ/(2πħ) in MHz/G.
    MegahertzPerGauss,
    JouleCubicMetre,
    /// van-der-Waals coefficient quoted as c₃/(2πħ) in kHz·µm³.
    KilohertzCubicMicrometre,
}

impl Unit {
    pub const ALL: [Unit; 26] = [
        Unit::Metre,
        Unit::Millimetre,
        Unit::Micrometre,
        Unit::Nanometre,
        Unit::Kilogram,
        Unit::Amu,
        Unit::Kelvin,
        Unit::Joule,
        Unit::KelvinEnergy,
        Unit::ElectronVolt,
        Unit::RadPerSecond,
        Unit::Hertz,
        Unit::Kilohertz,
        Unit::Megahertz,
        Unit::Ohm,
        Unit::OhmMetre,
        Unit::OhmCentimetre,
        Unit::Coulomb,
        Unit::ElementaryCharge,
        Unit::Tesla,
        Unit::Gauss,
        Unit::JoulePerTesla,
        Unit::BohrMagneton,
        Unit::MegahertzPerGauss,
        Unit::JouleCubicMetre,
        Unit::KilohertzCubicMicrometre,
    ];

    pub fn dimension(self) -> Dimension {
        use Unit::*;
        match self {
            Metre | Millimetre | Micrometre | Nanometre => Dimension::LENGTH,
            Kilogram | Amu => Dimension::MASS,
            Kelvin => Dimension::TEMPERATURE,
            Joule | KelvinEnergy | ElectronVolt => Dimension::ENERGY,
            RadPerSecond | Hertz | Kilohertz | Megahertz => Dimension::FREQUENCY,
            Ohm => Dimension::RESISTANCE,
            OhmMetre | OhmCentimetre => Dimension::RESISTIVITY,
            Coulomb | ElementaryCharge => Dimension::CHARGE,
            Tesla | Gauss => Dimension::MAGNETIC_FIELD,
            JoulePerTesla | BohrMagneton | MegahertzPerGauss => Dimension::MAGNETIC_MOMENT,
            JouleCubicMetre | KilohertzCubicMicrometre => Dimension::VDW_COEFFICIENT,
        }
    }

    /// Multiplier taking a value in this unit to the SI value.
    pub fn si_factor(self) -> f64 {
        use Unit::*;
        match self {
            Metre | Kilogram | Kelvin | Joule | RadPerSecond | Ohm | OhmMetre | Coulomb
            | Tesla | JoulePerTesla | JouleCubicMetre => 1.0,
            Millimetre => 1e-3,
            Micrometre => 1e-6,
            Nanometre => 1e-9,
            Amu => AMU,
            KelvinEnergy => KB,
            ElectronVolt => E_CHARGE,
            Hertz => 2.0 * PI,
            Kilohertz => 2.0 * PI * 1e3,
            Megahertz => 2.0 * PI * 1e6,
            OhmCentimetre => 1e-2,
            ElementaryCharge => E_CHARGE,
            Gauss => 1e-4,
            BohrMagneton => BOHR_MAGNETON,
            // h · 1 MHz / 1 G
            MegahertzPerGauss => PLANCK * 1e6 / 1e-4,
            // h · 1 kHz · (1 µm)³
            KilohertzCubicMicrometre => 2.0 * PI * HBAR * 1e3 * 1e-18,
        }
    }

    pub fn symbol(self) -> &'static str {
        use Unit::*;
        match self {
            Metre => "m",
            Millimetre => "mm",
            Micrometre => "um",
            Nanometre => "nm",
            Kilogram => "kg",
            Amu => "amu",
            Kelvin => "K",
            Joule => "J",
            KelvinEnergy => "K*kB",
            ElectronVolt => "eV",
            RadPerSecond => "rad/s",
            Hertz => "Hz",
            Kilohertz => "kHz",
            Megahertz => "MHz",
            Ohm => "ohm",
            OhmMetre => "ohm*m",
            OhmCentimetre => "ohm*cm",
            Coulomb => "C",
            ElementaryCharge => "e",
            Tesla => "T",
            Gauss => "G",
            JoulePerTesla => "J/T",
            BohrMagneton => "muB",
            MegahertzPerGauss => "MHz/G",
            JouleCubicMetre => "J*m^3",
            KilohertzCubicMicrometre => "kHz*um^3",
        }
    }

    pub fn quantity(self, value: f64) -> Quantity {
        Quantity::new(value * self.si_factor(), self.dimension())
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Unit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Unit> {
        let normalized = s.trim().replace(['·', '×'], "*").replace('Ω', "ohm").replace('µ', "u");
        Unit::ALL
            .into_iter()
            .find(|u| u.symbol().eq_ignore_ascii_case(&normalized))
            .ok_or_else(|| Error::invalid("unit", format!("unrecognised unit tag `{s}`")))
    }
}

/// Converts `value` from one unit to another of the same dimension.
pub fn convert(value: f64, from: Unit, to: Unit) -> Result<f64> {
    if from.dimension() != to.dimension() {
        return Err(Error::DimensionMismatch {
            left: from.dimension(),
            right: to.dimension(),
        });
    }
    Ok(value * from.si_factor() / to.si_factor())
}

/// k_B·T in joule.
pub fn thermal_energy(temperature: f64) -> Result<f64> {
    if temperature.is_nan() || temperature < 0.0 {
        return Err(Error::invalid(
            "temperature",
            format!("must be >= 0 K, got {temperature}"),
        ));
    }
    Ok(KB * temperature)
}
