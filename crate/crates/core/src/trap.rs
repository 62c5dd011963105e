//! Trap geometry, particle properties and the harmonic matrix element.

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::error::{require_non_negative, require_positive, Error, Result};
use crate::physcore::constants::HBAR;

/// One-dimensional harmonic trap above a flat surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapConfig {
    omega_t: f64,
    axis: Vector3<f64>,
    distance: f64,
    temperature: f64,
}

impl TrapConfig {
    /// `omega_t` in rad/s, `axis` a unit vector, `distance` in m, `temperature` in K.
    pub fn new(omega_t: f64, axis: [f64; 3], distance: f64, temperature: f64) -> Result<Self> {
        require_positive("omega_t", omega_t)?;
        require_positive("distance", distance)?;
        require_non_negative("temperature", temperature)?;
        let axis = Vector3::from(axis);
        if (axis.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::invalid(
                "axis",
                format!("must be a unit vector, |n| = {}", axis.norm()),
            ));
        }
        Ok(TrapConfig {
            omega_t,
            axis,
            distance,
            temperature,
        })
    }

    /// Trap axis perpendicular to the surface.
    pub fn perpendicular(omega_t: f64, distance: f64, temperature: f64) -> Result<Self> {
        TrapConfig::new(omega_t, [0.0, 0.0, 1.0], distance, temperature)
    }

    pub fn omega_t(&self) -> f64 {
        self.omega_t
    }

    pub fn axis(&self) -> Vector3<f64> {
        self.axis
    }

    pub fn distance(&self) -> f64 {
        self.distance
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn is_perpendicular(&self) -> bool {
        (self.axis.z.abs() - 1.0).abs() <= 1e-12
    }

    pub fn with_distance(self, distance: f64) -> Result<Self> {
        TrapConfig::new(self.omega_t, self.axis.into(), distance, self.temperature)
    }

    pub fn with_omega_t(self, omega_t: f64) -> Result<Self> {
        TrapConfig::new(omega_t, self.axis.into(), self.distance, self.temperature)
    }

    pub fn with_temperature(self, temperature: f64) -> Result<Self> {
        TrapConfig::new(self.omega_t, self.axis.into(), self.distance, temperature)
    }
}

/// The trapped particle. Unset couplings are zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Particle {
    mass: f64,
    charge: f64,
    moment_expect: f64,
    c3: f64,
}

impl Particle {
    /// Neutral, spinless particle of the given mass (kg).
    pub fn new(mass: f64) -> Result<Self> {
        require_positive("mass", mass)?;
        Ok(Particle {
            mass,
            charge: 0.0,
            moment_expect: 0.0,
            c3: 0.0,
        })
    }

    /// Charge in coulomb.
    pub fn with_charge(mut self, charge: f64) -> Result<Self> {
        if !charge.is_finite() {
            return Err(Error::invalid("charge", "must be finite"));
        }
        self.charge = charge;
        Ok(self)
    }

    /// ⟨3μ² − μ_z²⟩ in J²/T².
    pub fn with_moment_expect(mut self, moment_expect: f64) -> Result<Self> {
        self.moment_expect = require_non_negative("moment_expect", moment_expect)?;
        Ok(self)
    }

    pub fn with_spin(self, spin: &SpinSpec) -> Result<Self> {
        self.with_moment_expect(moment_expectation(spin)?)
    }

    /// van-der-Waals coefficient in J·m³.
    pub fn with_c3(mut self, c3: f64) -> Result<Self> {
        self.c3 = require_non_negative("c3", c3)?;
        Ok(self)
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn charge(&self) -> f64 {
        self.charge
    }

    pub fn moment_expect(&self) -> f64 {
        self.moment_expect
    }

    pub fn c3(&self) -> f64 {
        self.c3
    }
}

/// How ⟨3μ² − μ_z²⟩ is evaluated from a moment magnitude.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MomentConvention {
    /// μ_i = 2|μ|·S_i/ħ with ⟨S_i²⟩ = ħ²/4, giving 8|μ|².
    #[default]
    OperatorSpinHalf,
    /// Classical vector with random orientation, μ_z² = μ²/3, giving (8/3)|μ|².
    ClassicalIsotropic,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpinSpec {
    /// J/T
    pub moment_magnitude: f64,
    pub spin: f64,
    pub convention: MomentConvention,
}

/// Evaluates ⟨3μ² − μ_z²⟩ (J²/T²) under the chosen convention.
pub fn moment_expectation(s: &SpinSpec) -> Result<f64> {
    require_non_negative("moment_magnitude", s.moment_magnitude)?;
    let twice = 2.0 * s.spin;
    if !(s.spin > 0.0 && (twice - twice.round()).abs() < 1e-12) {
        return Err(Error::invalid(
            "spin",
            format!("must be a positive half-integer, got {}", s.spin),
        ));
    }
    let mu2 = s.moment_magnitude * s.moment_magnitude;
    match s.convention {
        MomentConvention::OperatorSpinHalf => {
            if (s.spin - 0.5).abs() > 1e-12 {
                return Err(Error::invalid(
                    "spin",
                    format!(
                        "operator_spin_half convention requires spin 1/2, got {}",
                        s.spin
                    ),
                ));
            }
            // ⟨μ²⟩ = 4|μ|²·3/4, ⟨μ_z²⟩ = 4|μ|²·1/4
            Ok(3.0 * (3.0 * mu2) - mu2)
        }
        MomentConvention::ClassicalIsotropic => Ok(3.0 * mu2 - mu2 / 3.0),
    }
}

/// Ground-state size a = √(ħ/(2Mω_t)), equal to ⟨1|x|0⟩.
pub fn ground_state_size(trap: &TrapConfig, particle: &Particle) -> f64 {
    (HBAR / (2.0 * particle.mass * trap.omega_t)).sqrt()
}
