//! Physical constants in SI units (CODATA 2018).
//!
//! The Boltzmann constant is kept explicit; temperatures are in kelvin and
//! energies in joule throughout the crate.

/// Reduced Planck constant (J·s)
pub const HBAR: f64 = 1.054_571_817e-34;

/// Planck constant (J·s)
pub const PLANCK: f64 = 6.626_070_15e-34;

/// Boltzmann constant (J/K)
pub const KB: f64 = 1.380_649e-23;

/// Vacuum permittivity (F/m)
pub const EPS0: f64 = 8.854_187_812_8e-12;

/// Vacuum permeability (H/m)
pub const MU0: f64 = 1.256_637_062_12e-6;

/// Speed of light (m/s)
pub const C: f64 = 299_792_458.0;

/// Elementary charge (C)
pub const E_CHARGE: f64 = 1.602_176_634e-19;

/// Atomic mass unit (kg)
pub const AMU: f64 = 1.660_539_066_60e-27;

/// Bohr magneton (J/T)
pub const BOHR_MAGNETON: f64 = 9.274_010_078_3e-24;
