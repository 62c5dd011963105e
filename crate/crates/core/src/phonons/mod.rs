//! Heating of neutral, spinless particles through Rayleigh surface phonons.
//!
//! Thermal Rayleigh waves corrugate the surface and modulate the
//! van-der-Waals image potential −c₃/z³. To first order in the displacement
//! u_Q the potential picks up g(Q; z)·u_Q·e^{iQ·R} with
//! g(Q; z) = −(3c₃Q²/(2z²))·K₂(Qz). In the long-wavelength limit Qz ≪ 1
//! this becomes −3c₃/z⁴ and the heating rate takes a closed z⁻¹⁰ form.

pub mod bessel;

use std::f64::consts::PI;

use crate::error::{require_positive, Error, Result};
use crate::materials::Material;
use crate::physcore::constants::{HBAR, KB};
use crate::physcore::{Dimension, Quantity};
use crate::trap::{Particle, TrapConfig};
use crate::validity::Validity;

pub use bessel::{bessel_k0, bessel_k0_k1, bessel_k1, bessel_k2};

/// Qz above which the long-wavelength phonon rate is flagged.
pub const LONG_WAVELENGTH_LIMIT: f64 = 0.1;

/// Corrugation coupling g(Q; z) in J/m.
pub fn coupling_g(q: f64, z: f64, c3: f64) -> Result<f64> {
    require_positive("Q", q)?;
    require_positive("z", z)?;
    if !(c3.is_finite() && c3 >= 0.0) {
        return Err(Error::invalid("c3", format!("must be non-negative, got {c3}")));
    }
    Ok(-(3.0 * c3 * q * q / (2.0 * z * z)) * bessel_k2(q * z)?)
}

/// Van-der-Waals coupling of one particle to the resonant Rayleigh mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhononChannel {
    pub c3: f64,
    /// Resonant wave vector ω_t/v_R, when v_R is known.
    pub q: Option<f64>,
}

impl PhononChannel {
    pub fn resonant(material: &Material, trap: &TrapConfig, c3: f64) -> Result<Self> {
        if !(c3.is_finite() && c3 >= 0.0) {
            return Err(Error::invalid("c3", format!("must be non-negative, got {c3}")));
        }
        Ok(PhononChannel {
            c3,
            q: material.rayleigh_velocity().map(|v| trap.omega_t() / v),
        })
    }

    pub fn coupling(&self, z: f64) -> Option<Result<f64>> {
        self.q.map(|q| coupling_g(q, z, self.c3))
    }

    pub fn validity(&self, z: f64) -> Option<Validity> {
        let qz = self.q? * z;
        (qz > LONG_WAVELENGTH_LIMIT).then_some(Validity::LongWavelength { qz })
    }
}

/// Closed-form Rayleigh-phonon heating rate (1/s):
/// Γ = k_BT·c₃²/(ħω_tω_D³MM_s) · 72π³η(1+η²)/z¹⁰.
pub fn rayleigh_heating_rate(trap: &TrapConfig, particle: &Particle, material: &Material) -> Result<f64> {
    let c3 = particle.c3();
    if c3 == 0.0 {
        return Ok(0.0);
    }
    let debye = material.debye_freq()?;
    let ms = material.surface_atom_mass()?;
    let eta = material.eta()?;

    let kt = Quantity::new(KB * trap.temperature(), Dimension::ENERGY);
    let c3 = Quantity::new(c3, Dimension::VDW_COEFFICIENT);
    let hbar = Quantity::new(HBAR, Dimension::ENERGY * Dimension::TIME);
    let omega_t = Quantity::new(trap.omega_t(), Dimension::FREQUENCY);
    let omega_d = Quantity::new(debye, Dimension::FREQUENCY);
    let mass = Quantity::new(particle.mass(), Dimension::MASS);
    let surface_mass = Quantity::new(ms, Dimension::MASS);
    let z = Quantity::new(trap.distance(), Dimension::LENGTH);

    let rate = kt * c3.powi(2) / (hbar * omega_t * omega_d.powi(3) * mass * surface_mass)
        * (72.0 * PI.powi(3) * eta * (1.0 + eta * eta))
        / z.powi(10);
    rate.value_as(Dimension::FREQUENCY)
}
