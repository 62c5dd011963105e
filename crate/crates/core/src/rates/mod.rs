//! Golden-rule heating rates.
//!
//! Γ₁←₀ = a²/ħ² · Σ n_i n_j S_F^{ij}(−ω_t), with a the ground-state size.
//! Each channel exists as a closed form (high-temperature Bose factor, as
//! usually quoted) and, where the noise spectrum is available, as a pipeline
//! that assembles the golden rule from `em_noise` with the exact occupation.
//! The same rate also sets the decay of coherences between trap levels.

mod mechanisms;
mod registry;

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::em_noise::{
    electric_field_spectrum, magnetic_force_kernel_zz, quasi_static_check, FieldSources,
    SpectralTensor, SpectralUnit, MAGNETIC_ANISOTROPY,
};
use crate::error::{require_positive, Error, Result};
use crate::materials::Material;
use crate::physcore::constants::{HBAR, KB, MU0};
use crate::physcore::{Dimension, Quantity};
use crate::trap::{ground_state_size, Particle, TrapConfig};
use crate::validity::Validity;

pub use mechanisms::{IonBlackbody, IonEndcap, IonSurface, PhononVdw, SpinSurface};
pub use registry::{compute_all, Applicability, HeatingMechanism, MechanismRegistry, Selection, Setup};

/// ħω_t/(k_BT) above which closed forms carry a high-temperature warning.
pub const HIGH_TEMPERATURE_LIMIT: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mechanism {
    IonSurface,
    IonBlackbody,
    IonEndcap,
    SpinSurface,
    PhononVdw,
}

impl Mechanism {
    pub const ALL: [Mechanism; 5] = [
        Mechanism::IonSurface,
        Mechanism::IonBlackbody,
        Mechanism::IonEndcap,
        Mechanism::SpinSurface,
        Mechanism::PhononVdw,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mechanism::IonSurface => "ion_surface",
            Mechanism::IonBlackbody => "ion_blackbody",
            Mechanism::IonEndcap => "ion_endcap",
            Mechanism::SpinSurface => "spin_surface",
            Mechanism::PhononVdw => "phonon_vdw",
        }
    }
}

impl fmt::Display for Mechanism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    #[default]
    ClosedForm,
    Pipeline,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Pipeline => "pipeline",
        }
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed_form" => Ok(Method::ClosedForm),
            "pipeline" => Ok(Method::Pipeline),
            other => Err(Error::Config(format!(
                "unknown method `{other}` (expected closed_form or pipeline)"
            ))),
        }
    }
}

/// Lumped endcap circuit: resistance (Ω) and electrode separation (m).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Endcap {
    pub resistance: f64,
    pub separation: f64,
}

/// Parameters a rate was computed from.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InputsEcho {
    pub material: String,
    pub resistivity: f64,
    pub omega_t: f64,
    pub axis: [f64; 3],
    pub distance: f64,
    pub temperature: f64,
    pub mass: f64,
    pub charge: f64,
    pub moment_expect: f64,
    pub c3: f64,
    pub endcap: Option<Endcap>,
}

impl InputsEcho {
    pub fn new(setup: &Setup<'_>) -> Self {
        let axis = setup.trap.axis();
        InputsEcho {
            material: setup.material.name().to_string(),
            resistivity: setup.material.resistivity(),
            omega_t: setup.trap.omega_t(),
            axis: [axis.x, axis.y, axis.z],
            distance: setup.trap.distance(),
            temperature: setup.trap.temperature(),
            mass: setup.particle.mass(),
            charge: setup.particle.charge(),
            moment_expect: setup.particle.moment_expect(),
            c3: setup.particle.c3(),
            endcap: setup.endcap,
        }
    }
}

/// Heating rate Γ₁←₀ of one mechanism.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RateResult {
    pub mechanism: Mechanism,
    /// 1/s
    pub rate: f64,
    pub method: Method,
    pub inputs: InputsEcho,
    pub warnings: Vec<Validity>,
}

/// A rate together with the validity flags raised while computing it.
#[derive(Debug, Clone, PartialEq)]
pub struct Rated {
    pub rate: f64,
    pub warnings: Vec<Validity>,
}

/// Golden-rule rate a²/ħ²·nᵀS_F n for a force spectrum taken at −ω_t.
pub fn golden_rule_rate(trap: &TrapConfig, particle: &Particle, spectrum: &SpectralTensor) -> Result<f64> {
    if spectrum.unit != SpectralUnit::Force {
        return Err(Error::SpectrumUnits {
            found: spectrum.unit.to_string(),
            expected: SpectralUnit::Force.to_string(),
        });
    }
    let omega_t = trap.omega_t();
    if ((spectrum.omega + omega_t) / omega_t).abs() > 1e-12 {
        return Err(Error::invalid(
            "spectrum frequency",
            format!(
                "golden rule needs the spectrum at -omega_t = {:.6e}, got {:.6e}",
                -omega_t, spectrum.omega
            ),
        ));
    }
    let a = ground_state_size(trap, particle);
    let n = trap.axis();
    let projected = n.dot(&(spectrum.components * n));
    Ok(a * a / (HBAR * HBAR) * projected)
}

fn high_temperature_check(trap: &TrapConfig) -> Option<Validity> {
    let ratio = HBAR * trap.omega_t() / (KB * trap.temperature());
    (ratio > HIGH_TEMPERATURE_LIMIT).then_some(Validity::HighTemperature {
        hbar_omega_over_kt: ratio,
    })
}

fn require_charge(particle: &Particle, mechanism: Mechanism) -> Result<()> {
    if particle.charge() == 0.0 {
        Err(Error::Inapplicable {
            mechanism: mechanism.name().to_string(),
            reason: "particle is neutral".into(),
        })
    } else {
        Ok(())
    }
}

fn require_perpendicular(trap: &TrapConfig) -> Result<()> {
    if trap.is_perpendicular() {
        Ok(())
    } else {
        Err(Error::Inapplicable {
            mechanism: Mechanism::SpinSurface.name().to_string(),
            reason: "the magnetic force kernel is only available for a trap axis perpendicular \
                     to the surface (n = ±e_z)"
                .into(),
        })
    }
}

/// Ion rate from electric proximity fields, closed form:
/// q²k_BTρ(1 + n_z²)/(16πħω_tMz³).
pub fn ion_rate_closed(trap: &TrapConfig, particle: &Particle, material: &Material) -> Result<f64> {
    require_charge(particle, Mechanism::IonSurface)?;
    let q = Quantity::new(particle.charge(), Dimension::CHARGE);
    let rho = Quantity::new(material.resistivity(), Dimension::RESISTIVITY);
    let z = Quantity::new(trap.distance(), Dimension::LENGTH);
    ion_prefactor(trap, particle, q, rho / z.powi(3))
}

/// Endcap baseline: the ion closed form with ρ/z → R and z → endcap separation.
pub fn ion_rate_endcap(trap: &TrapConfig, particle: &Particle, endcap: &Endcap) -> Result<f64> {
    require_charge(particle, Mechanism::IonEndcap)?;
    require_positive("endcap resistance", endcap.resistance)?;
    require_positive("endcap separation", endcap.separation)?;
    let q = Quantity::new(particle.charge(), Dimension::CHARGE);
    let r = Quantity::new(endcap.resistance, Dimension::RESISTANCE);
    let d = Quantity::new(endcap.separation, Dimension::LENGTH);
    ion_prefactor(trap, particle, q, r / d.powi(2))
}

/// q²k_BT(1 + n_z²)/(16πħω_tM) · (ρ/z³ or R/d²)
fn ion_prefactor(trap: &TrapConfig, particle: &Particle, q: Quantity, geometry: Quantity) -> Result<f64> {
    let kt = Quantity::new(KB * trap.temperature(), Dimension::ENERGY);
    let hbar = Quantity::new(HBAR, Dimension::ENERGY * Dimension::TIME);
    let omega_t = Quantity::new(trap.omega_t(), Dimension::FREQUENCY);
    let mass = Quantity::new(particle.mass(), Dimension::MASS);
    let nz = trap.axis().z;
    let rate = q.powi(2) * kt * geometry * (1.0 + nz * nz) / (hbar * omega_t * mass) / (16.0 * PI);
    rate.value_as(Dimension::FREQUENCY)
}

/// Ion rate assembled from q²·S_E(−ω_t) and the golden rule.
pub fn ion_rate_pipeline(
    trap: &TrapConfig,
    particle: &Particle,
    material: &Material,
    sources: FieldSources,
) -> Result<Rated> {
    require_charge(particle, Mechanism::IonSurface)?;
    let q = particle.charge();
    let spectrum = electric_field_spectrum(
        material,
        trap.distance(),
        -trap.omega_t(),
        trap.temperature(),
        sources,
    )?
    .rescaled(q * q, SpectralUnit::Force);
    let rate = golden_rule_rate(trap, particle, &spectrum)?;
    Ok(Rated {
        rate,
        warnings: spectrum.warnings,
    })
}

/// Spin rate from magnetic proximity fields, closed form:
/// μ₀²k_BT/(ħω_tMρ) · ⟨3μ² − μ_z²⟩/(128πz³).
pub fn zeeman_rate_closed(trap: &TrapConfig, particle: &Particle, material: &Material) -> Result<f64> {
    require_perpendicular(trap)?;
    let mu0 = Quantity::new(MU0, Dimension::new(1, 1, -2, -2, 0));
    let kt = Quantity::new(KB * trap.temperature(), Dimension::ENERGY);
    let hbar = Quantity::new(HBAR, Dimension::ENERGY * Dimension::TIME);
    let omega_t = Quantity::new(trap.omega_t(), Dimension::FREQUENCY);
    let mass = Quantity::new(particle.mass(), Dimension::MASS);
    let rho = Quantity::new(material.resistivity(), Dimension::RESISTIVITY);
    let moment = Quantity::new(particle.moment_expect(), Dimension::MAGNETIC_MOMENT.powi(2));
    let z = Quantity::new(trap.distance(), Dimension::LENGTH);
    let rate = mu0.powi(2) * kt / (hbar * omega_t * mass * rho) * moment / z.powi(3) / (128.0 * PI);
    rate.value_as(Dimension::FREQUENCY)
}

/// Spin rate from the magnetic force kernel and the golden rule.
///
/// For a perpendicular trap S_F^{zz} = Σ_i μ_i² t_ii · K, and with
/// t = diag(3/2, 3/2, 1) the moment sum equals ½⟨3μ² − μ_z²⟩.
pub fn zeeman_rate_pipeline(trap: &TrapConfig, particle: &Particle, material: &Material) -> Result<Rated> {
    require_perpendicular(trap)?;
    debug_assert_eq!(MAGNETIC_ANISOTROPY, [1.5, 1.5, 1.0]);
    let z = trap.distance();
    let omega = -trap.omega_t();
    let kernel = magnetic_force_kernel_zz(material, z, omega, trap.temperature())?;
    let szz = 0.5 * particle.moment_expect() * kernel;
    let mut components = nalgebra::Matrix3::zeros();
    components[(2, 2)] = szz;
    let warnings: Vec<Validity> = quasi_static_check(omega, z)
        .into_iter()
        .chain(material.low_frequency_check(trap.omega_t()))
        .collect();
    let spectrum = SpectralTensor {
        components,
        unit: SpectralUnit::Force,
        omega,
        position_z: z,
        warnings,
    };
    let rate = golden_rule_rate(trap, particle, &spectrum)?;
    Ok(Rated {
        rate,
        warnings: spectrum.warnings,
    })
}
