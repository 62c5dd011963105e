//! Scenario files: material, particle, trap, sweep and channel selection.
//!
//! Scenarios are TOML. Every physical input carries its unit in the key
//! (`omega_t_hz`, `distance_um`, `temperature_k`, `resistivity_ohm_cm`, ...);
//! values are converted to SI once, here.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::materials::{Material, MaterialDb, MaterialRecord};
use crate::physcore::{convert, Unit};
use crate::rates::{Endcap, Mechanism, MechanismRegistry, Method, Selection};
use crate::trap::{MomentConvention, Particle, SpinSpec, TrapConfig};

/// Compiled-in scenarios reproducing the reference figures.
pub const PRESETS: [(&str, &str); 2] = [
    ("fig2-ion-ag", include_str!("../presets/fig2-ion-ag.toml")),
    ("fig3-spin-phonon", include_str!("../presets/fig3-spin-phonon.toml")),
];

pub fn preset(name: &str) -> Option<&'static str> {
    PRESETS.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioFile {
    name: Option<String>,
    materials: Vec<String>,
    #[serde(default)]
    material: Vec<MaterialRecord>,
    #[serde(default)]
    method: Option<String>,
    #[serde(default)]
    channels: Option<ChannelsFile>,
    trap: TrapFile,
    particle: ParticleFile,
    endcap: Option<EndcapFile>,
    sweep: SweepFile,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ChannelsFile {
    Keyword(String),
    List(Vec<String>),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TrapFile {
    /// ω_t/2π
    omega_t_hz: f64,
    #[serde(default = "default_axis")]
    axis: [f64; 3],
    temperature_k: f64,
    distance_um: Option<f64>,
}

fn default_axis() -> [f64; 3] {
    [0.0, 0.0, 1.0]
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParticleFile {
    mass_amu: f64,
    #[serde(default)]
    charge_e: f64,
    /// c₃/(2πħ) in kHz·µm³
    #[serde(default)]
    c3_khz_um3: f64,
    spin: Option<SpinFile>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpinFile {
    moment_bohr: Option<f64>,
    /// μ/(2πħ) in MHz/G
    moment_mhz_per_g: Option<f64>,
    #[serde(default = "default_spin")]
    spin: f64,
    #[serde(default)]
    convention: MomentConvention,
}

fn default_spin() -> f64 {
    0.5
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct EndcapFile {
    resistance_ohm: f64,
    distance_mm: f64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SweepFile {
    variable: String,
    min: f64,
    max: f64,
    points: usize,
    #[serde(default)]
    spacing: Spacing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Spacing {
    #[default]
    Log,
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepVariable {
    Distance,
    OmegaT,
    Temperature,
}

impl SweepVariable {
    /// Scenario key naming the variable and its config unit.
    pub fn config_key(self) -> &'static str {
        match self {
            SweepVariable::Distance => "distance_um",
            SweepVariable::OmegaT => "omega_t_hz",
            SweepVariable::Temperature => "temperature_k",
        }
    }

    /// CSV column name; values are written in SI.
    pub fn column(self) -> &'static str {
        match self {
            SweepVariable::Distance => "z_m",
            SweepVariable::OmegaT => "omega_t_rad_s",
            SweepVariable::Temperature => "temperature_k",
        }
    }

    pub fn si_unit(self) -> &'static str {
        match self {
            SweepVariable::Distance => "m",
            SweepVariable::OmegaT => "rad/s",
            SweepVariable::Temperature => "K",
        }
    }

    fn config_unit(self) -> Unit {
        match self {
            SweepVariable::Distance => Unit::Micrometre,
            SweepVariable::OmegaT => Unit::Hertz,
            SweepVariable::Temperature => Unit::Kelvin,
        }
    }

    pub fn from_si(self, si: f64) -> f64 {
        si / self.config_unit().si_factor()
    }

    /// Axis label in the config unit, used for plots.
    pub fn axis_label(self) -> &'static str {
        match self {
            SweepVariable::Distance => "trap distance z (um)",
            SweepVariable::OmegaT => "trap frequency omega_t/2pi (Hz)",
            SweepVariable::Temperature => "temperature T (K)",
        }
    }

    fn parse(key: &str) -> Result<Self> {
        [
            SweepVariable::Distance,
            SweepVariable::OmegaT,
            SweepVariable::Temperature,
        ]
        .into_iter()
        .find(|v| v.config_key() == key)
        .ok_or_else(|| {
            Error::Config(format!(
                "sweep.variable: unknown `{key}` (expected distance_um, omega_t_hz or temperature_k)"
            ))
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Sweep {
    pub variable: SweepVariable,
    /// In the config unit of `variable`.
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub spacing: Spacing,
}

impl Sweep {
    pub fn new(variable: SweepVariable, min: f64, max: f64, points: usize, spacing: Spacing) -> Result<Self> {
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(Error::Config(format!("sweep: need min < max, got min = {min}, max = {max}")));
        }
        if points < 2 {
            return Err(Error::Config(format!("sweep.points: need at least 2, got {points}")));
        }
        if spacing == Spacing::Log && min <= 0.0 {
            return Err(Error::Config(format!("sweep.min: log spacing needs min > 0, got {min}")));
        }
        Ok(Sweep {
            variable,
            min,
            max,
            points,
            spacing,
        })
    }

    /// Grid values in SI, endpoints included exactly.
    pub fn grid_si(&self) -> Vec<f64> {
        let last = self.points - 1;
        let factor = self.variable.config_unit().si_factor();
        (0..self.points)
            .map(|i| {
                let v = if i == 0 {
                    self.min
                } else if i == last {
                    self.max
                } else {
                    let t = i as f64 / last as f64;
                    match self.spacing {
                        Spacing::Linear => self.min + t * (self.max - self.min),
                        Spacing::Log => (self.min.ln() + t * (self.max.ln() - self.min.ln())).exp(),
                    }
                };
                v * factor
            })
            .collect()
    }
}

/// A validated scenario in SI units.
#[derive(Debug, Clone)]
pub struct Scenario {
    pub name: Option<String>,
    pub materials: Vec<Material>,
    /// Base trap; the swept quantity is overwritten per grid point.
    pub trap: TrapConfig,
    pub particle: Particle,
    pub endcap: Option<Endcap>,
    pub sweep: Sweep,
    pub selection: Selection,
    pub method: Method,
}

impl Scenario {
    /// Parses and validates a scenario. Material names resolve against
    /// inline `[[material]]` tables first, then `db`.
    pub fn from_toml_str(text: &str, db: &MaterialDb) -> Result<Self> {
        let file: ScenarioFile =
            toml::from_str(text).map_err(|e| Error::Config(format!("scenario: {e}")))?;
        Scenario::from_file(file, db)
    }

    pub fn from_preset(name: &str, db: &MaterialDb) -> Result<Self> {
        let text = preset(name).ok_or_else(|| {
            let names: Vec<_> = PRESETS.iter().map(|(n, _)| *n).collect();
            Error::Config(format!("unknown preset `{name}` (available: {})", names.join(", ")))
        })?;
        Scenario::from_toml_str(text, db)
    }

    fn from_file(file: ScenarioFile, db: &MaterialDb) -> Result<Self> {
        let field = |name: &str, e: Error| Error::Config(format!("{name}: {e}"));

        let mut local = MaterialDb::default();
        for record in file.material {
            local.insert(record.into_material().map_err(|e| field("material", e))?);
        }
        if file.materials.is_empty() {
            return Err(Error::Config("materials: list is empty".into()));
        }
        let materials = file
            .materials
            .iter()
            .map(|name| local.get(name).or_else(|_| db.get(name)).cloned())
            .collect::<Result<Vec<_>>>()?;

        let sweep_var = SweepVariable::parse(&file.sweep.variable)?;
        let sweep = Sweep::new(
            sweep_var,
            file.sweep.min,
            file.sweep.max,
            file.sweep.points,
            file.sweep.spacing,
        )?;

        let t = &file.trap;
        let distance = match (t.distance_um, sweep_var) {
            (Some(d), _) => d,
            (None, SweepVariable::Distance) => sweep.min,
            (None, _) => {
                return Err(Error::Config(
                    "trap.distance_um: required unless the sweep variable is distance_um".into(),
                ))
            }
        };
        let trap = TrapConfig::new(
            convert(t.omega_t_hz, Unit::Hertz, Unit::RadPerSecond)?,
            t.axis,
            convert(distance, Unit::Micrometre, Unit::Metre)?,
            t.temperature_k,
        )
        .map_err(|e| field("trap", e))?;

        let p = &file.particle;
        let mut particle = Particle::new(convert(p.mass_amu, Unit::Amu, Unit::Kilogram)?)
            .and_then(|x| x.with_charge(convert(p.charge_e, Unit::ElementaryCharge, Unit::Coulomb)?))
            .and_then(|x| {
                x.with_c3(convert(p.c3_khz_um3, Unit::KilohertzCubicMicrometre, Unit::JouleCubicMetre)?)
            })
            .map_err(|e| field("particle", e))?;
        if let Some(spin) = &p.spin {
            let moment = match (spin.moment_bohr, spin.moment_mhz_per_g) {
                (Some(b), None) => convert(b, Unit::BohrMagneton, Unit::JoulePerTesla)?,
                (None, Some(m)) => convert(m, Unit::MegahertzPerGauss, Unit::JoulePerTesla)?,
                _ => {
                    return Err(Error::Config(
                        "particle.spin: give exactly one of moment_bohr or moment_mhz_per_g".into(),
                    ))
                }
            };
            let spec = SpinSpec {
                moment_magnitude: moment,
                spin: spin.spin,
                convention: spin.convention,
            };
            particle = particle.with_spin(&spec).map_err(|e| field("particle.spin", e))?;
        }

        let endcap = match file.endcap {
            Some(e) => {
                if !(e.resistance_ohm > 0.0 && e.distance_mm > 0.0) {
                    return Err(Error::Config(
                        "endcap: resistance_ohm and distance_mm must be positive".into(),
                    ));
                }
                Some(Endcap {
                    resistance: e.resistance_ohm,
                    separation: convert(e.distance_mm, Unit::Millimetre, Unit::Metre)?,
                })
            }
            None => None,
        };

        let selection = match file.channels {
            None => Selection::Auto,
            Some(ChannelsFile::Keyword(k)) if k == "auto" => Selection::Auto,
            Some(ChannelsFile::Keyword(k)) => {
                return Err(Error::Config(format!(
                    "channels: expected \"auto\" or a list of mechanism names, got `{k}`"
                )))
            }
            Some(ChannelsFile::List(names)) => {
                let registry = MechanismRegistry::builtin();
                let list = names
                    .iter()
                    .map(|n| registry.get(n).map(|m| m.mechanism()))
                    .collect::<Result<Vec<Mechanism>>>()?;
                Selection::Only(list)
            }
        };

        let method = match file.method {
            Some(m) => m.parse()?,
            None => Method::ClosedForm,
        };

        Ok(Scenario {
            name: file.name,
            materials,
            trap,
            particle,
            endcap,
            sweep,
            selection,
            method,
        })
    }

    /// The base trap with the swept variable set to `value` (SI).
    pub fn trap_at(&self, value: f64) -> Result<TrapConfig> {
        match self.sweep.variable {
            SweepVariable::Distance => self.trap.with_distance(value),
            SweepVariable::OmegaT => self.trap.with_omega_t(value),
            SweepVariable::Temperature => self.trap.with_temperature(value),
        }
    }
}
