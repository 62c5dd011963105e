//! Substrate models: dielectric response, quasi-static reflection factor and
//! the surface-phonon parameters of the solid.
//!
//! A material always has a resistivity. When Drude parameters are supplied,
//! ε(ω) follows the Drude form; otherwise the constant-resistivity limit
//! ε = 1 + i/(ε₀ωρ) is used. Phonon parameters are optional and only needed
//! by the van-der-Waals channel.

use std::collections::BTreeMap;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};
use crate::physcore::constants::{AMU, EPS0, HBAR, KB};
use crate::validity::Validity;

/// Drude model parameters (rad/s).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Drude {
    pub plasma_freq: f64,
    pub damping: f64,
}

impl Drude {
    /// DC resistivity γ/(ε₀ωp²) implied by the parameters.
    pub fn dc_resistivity(&self) -> f64 {
        self.damping / (EPS0 * self.plasma_freq * self.plasma_freq)
    }
}

/// Relative tolerance between a stated resistivity and the Drude DC value.
pub const DRUDE_RESISTIVITY_TOLERANCE: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Material {
    name: String,
    /// Ω·m
    resistivity: f64,
    drude: Option<Drude>,
    /// rad/s
    debye_freq: Option<f64>,
    /// kg
    surface_atom_mass: Option<f64>,
    eta: Option<f64>,
    /// atoms/m²; recorded, not used by the rate formulas
    surface_density: Option<f64>,
    /// m/s
    rayleigh_velocity: Option<f64>,
}

impl Material {
    pub fn new(name: impl Into<String>, resistivity: f64) -> Result<Self> {
        let name = name.into();
        if name.trim().is_empty() {
            return Err(Error::invalid("name", "material name is empty"));
        }
        require_positive("resistivity", resistivity)?;
        Ok(Material {
            name,
            resistivity,
            drude: None,
            debye_freq: None,
            surface_atom_mass: None,
            eta: None,
            surface_density: None,
            rayleigh_velocity: None,
        })
    }

    pub fn with_drude(mut self, plasma_freq: f64, damping: f64) -> Result<Self> {
        require_positive("plasma_freq", plasma_freq)?;
        require_positive("damping", damping)?;
        let drude = Drude {
            plasma_freq,
            damping,
        };
        let implied = drude.dc_resistivity();
        if ((implied - self.resistivity) / self.resistivity).abs() > DRUDE_RESISTIVITY_TOLERANCE {
            return Err(Error::invalid(
                "drude parameters",
                format!(
                    "{}: implied DC resistivity {implied:.4e} ohm*m differs from stated {:.4e} ohm*m by more than 5%",
                    self.name, self.resistivity
                ),
            ));
        }
        self.drude = Some(drude);
        Ok(self)
    }

    /// Debye frequency (rad/s), surface atom mass (kg) and the Rayleigh
    /// decay parameter η ∈ (0, 2].
    pub fn with_phonons(mut self, debye_freq: f64, surface_atom_mass: f64, eta: f64) -> Result<Self> {
        require_positive("debye_freq", debye_freq)?;
        require_positive("surface_atom_mass", surface_atom_mass)?;
        if !(eta > 0.0 && eta <= 2.0) {
            return Err(Error::invalid("eta", format!("must lie in (0, 2], got {eta}")));
        }
        self.debye_freq = Some(debye_freq);
        self.surface_atom_mass = Some(surface_atom_mass);
        self.eta = Some(eta);
        Ok(self)
    }

    pub fn with_surface_density(mut self, per_m2: f64) -> Result<Self> {
        self.surface_density = Some(require_positive("surface_density", per_m2)?);
        Ok(self)
    }

    pub fn with_rayleigh_velocity(mut self, m_per_s: f64) -> Result<Self> {
        self.rayleigh_velocity = Some(require_positive("rayleigh_velocity", m_per_s)?);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn resistivity(&self) -> f64 {
        self.resistivity
    }

    pub fn drude(&self) -> Option<Drude> {
        self.drude
    }

    pub fn surface_density(&self) -> Option<f64> {
        self.surface_density
    }

    pub fn rayleigh_velocity(&self) -> Option<f64> {
        self.rayleigh_velocity
    }

    pub fn has_phonons(&self) -> bool {
        self.debye_freq.is_some() && self.surface_atom_mass.is_some() && self.eta.is_some()
    }

    fn required(&self, value: Option<f64>, parameter: &'static str) -> Result<f64> {
        value.ok_or_else(|| Error::MissingParameter {
            material: self.name.clone(),
            parameter,
        })
    }

    pub fn debye_freq(&self) -> Result<f64> {
        self.required(self.debye_freq, "debye_freq")
    }

    pub fn surface_atom_mass(&self) -> Result<f64> {
        self.required(self.surface_atom_mass, "surface_atom_mass")
    }

    pub fn eta(&self) -> Result<f64> {
        self.required(self.eta, "eta")
    }

    /// Relative permittivity at angular frequency `omega` > 0.
    pub fn epsilon(&self, omega: f64) -> Result<Complex64> {
        require_positive("omega", omega)?;
        Ok(match self.drude {
            Some(Drude {
                plasma_freq,
                damping,
            }) => {
                let denom = Complex64::new(omega, 0.0) * Complex64::new(omega, damping);
                Complex64::new(1.0, 0.0) - plasma_freq * plasma_freq / denom
            }
            None => Complex64::new(1.0, 1.0 / (EPS0 * omega * self.resistivity)),
        })
    }

    /// Im[(ε − 1)/(ε + 1)], the electrostatic image factor.
    pub fn im_reflection_quasistatic(&self, omega: f64) -> Result<f64> {
        let eps = self.epsilon(omega)?;
        Ok(im_image_factor(eps))
    }

    /// Flags a Drude material probed above a tenth of its damping rate.
    pub fn low_frequency_check(&self, omega: f64) -> Option<Validity> {
        let drude = self.drude?;
        (omega > drude.damping / 10.0).then_some(Validity::DrudeDamping {
            omega,
            damping: drude.damping,
        })
    }

    /// Parses a single-material config file.
    pub fn from_config_str(text: &str) -> Result<Self> {
        let record: MaterialRecord =
            toml::from_str(text).map_err(|e| Error::Config(format!("material file: {e}")))?;
        record.into_material()
    }
}

pub(crate) fn im_image_factor(eps: Complex64) -> f64 {
    ((eps - 1.0) / (eps + 1.0)).im
}

/// On-disk form of a material, with explicit units in every key.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MaterialRecord {
    pub name: String,
    pub resistivity_ohm_cm: f64,
    #[serde(rename = "debye_temp_K", default, skip_serializing_if = "Option::is_none")]
    pub debye_temp_k: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surface_atom_mass_amu: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plasma_freq_rad_s: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub damping_rad_s: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surface_density_per_m2: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rayleigh_velocity_m_s: Option<f64>,
}

impl MaterialRecord {
    pub fn into_material(self) -> Result<Material> {
        let mut m = Material::new(self.name, self.resistivity_ohm_cm * 1e-2)?;
        match (self.plasma_freq_rad_s, self.damping_rad_s) {
            (Some(wp), Some(gamma)) => m = m.with_drude(wp, gamma)?,
            (None, None) => {}
            _ => {
                return Err(Error::Config(format!(
                    "material `{}`: plasma_freq_rad_s and damping_rad_s must be given together",
                    m.name
                )))
            }
        }
        match (self.debye_temp_k, self.surface_atom_mass_amu, self.eta) {
            (Some(td), Some(ms), Some(eta)) => m = m.with_phonons(td * KB / HBAR, ms * AMU, eta)?,
            (None, None, None) => {}
            _ => {
                return Err(Error::Config(format!(
                    "material `{}`: debye_temp_K, surface_atom_mass_amu and eta must be given together",
                    m.name
                )))
            }
        }
        if let Some(ns) = self.surface_density_per_m2 {
            m = m.with_surface_density(ns)?;
        }
        if let Some(vr) = self.rayleigh_velocity_m_s {
            m = m.with_rayleigh_velocity(vr)?;
        }
        Ok(m)
    }
}

impl From<&Material> for MaterialRecord {
    fn from(m: &Material) -> Self {
        MaterialRecord {
            name: m.name.clone(),
            resistivity_ohm_cm: m.resistivity * 1e2,
            debye_temp_k: m.debye_freq.map(|w| w * HBAR / KB),
            surface_atom_mass_amu: m.surface_atom_mass.map(|ms| ms / AMU),
            eta: m.eta,
            plasma_freq_rad_s: m.drude.map(|d| d.plasma_freq),
            damping_rad_s: m.drude.map(|d| d.damping),
            surface_density_per_m2: m.surface_density,
            rayleigh_velocity_m_s: m.rayleigh_velocity,
        }
    }
}

#[derive(Debug, Default, Serialize, Deserialize)]
struct DbFile {
    #[serde(default)]
    material: Vec<MaterialRecord>,
}

/// Named collection of materials.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct MaterialDb {
    entries: BTreeMap<String, Material>,
}

impl MaterialDb {
    /// Silver and glass with the parameters of the reference figures.
    pub fn builtin() -> Self {
        let silver = Material::new("Ag", 1.6e-8)
            .and_then(|m| m.with_phonons(225.0 * KB / HBAR, 108.0 * AMU, 0.75))
            .expect("builtin Ag parameters are valid");
        let glass = Material::new("glass", 1e9).expect("builtin glass parameters are valid");
        let mut db = MaterialDb::default();
        db.insert(silver);
        db.insert(glass);
        db
    }

    pub fn insert(&mut self, material: Material) {
        self.entries.insert(material.name.clone(), material);
    }

    pub fn get(&self, name: &str) -> Result<&Material> {
        self.entries
            .get(name)
            .ok_or_else(|| Error::UnknownMaterial(name.to_string()))
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Adds every entry of `other`, replacing same-named materials.
    pub fn merge(&mut self, other: MaterialDb) {
        self.entries.extend(other.entries);
    }

    /// Parses a database file: an array of `[[material]]` tables.
    pub fn from_toml_str(text: &str) -> Result<Self> {
        let file: DbFile =
            toml::from_str(text).map_err(|e| Error::Config(format!("material database: {e}")))?;
        let mut db = MaterialDb::default();
        for record in file.material {
            db.insert(record.into_material()?);
        }
        Ok(db)
    }

    pub fn to_toml_string(&self) -> String {
        let file = DbFile {
            material: self.entries.values().map(MaterialRecord::from).collect(),
        };
        toml::to_string(&file).expect("material records always serialize")
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        MaterialDb::from_toml_str(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn silver_im_epsilon_at_one_megahertz() {
        let ag = MaterialDb::builtin().get("Ag").unwrap().clone();
        let w = 2.0 * PI * 1e6;
        let eps = ag.epsilon(w).unwrap();
        assert!((eps.im - 1.124e12).abs() < 1e9, "{}", eps.im);
        assert_eq!(eps.re, 1.0);
    }

    #[test]
    fn drude_low_frequency_matches_constant_resistivity() {
        let gamma = 2.7e13_f64;
        let rho = 1.6e-8;
        let wp = (gamma / (EPS0 * rho)).sqrt();
        let drude = Material::new("d", rho).unwrap().with_drude(wp, gamma).unwrap();
        let plain = Material::new("p", rho).unwrap();
        let w = gamma / 1000.0;
        let a = drude.epsilon(w).unwrap().im;
        let b = plain.epsilon(w).unwrap().im;
        assert!(rel(a, b) < 0.01);
        assert!(drude.low_frequency_check(w).is_none());
        assert!(drude.low_frequency_check(gamma).is_some());
    }

    #[test]
    fn drude_high_frequency_is_vacuum() {
        let gamma = 1e13;
        let rho = 1e-8;
        let wp = (gamma / (EPS0 * rho)).sqrt();
        let m = Material::new("d", rho).unwrap().with_drude(wp, gamma).unwrap();
        let eps = m.epsilon(wp * 1e4).unwrap();
        assert!((eps - 1.0).norm() < 1e-7);
    }

    #[test]
    fn drude_resistivity_mismatch_rejected() {
        let gamma = 1e13;
        let wp = (gamma / (EPS0 * 1e-8)).sqrt();
        let err = Material::new("d", 2e-8).unwrap().with_drude(wp, gamma);
        assert!(err.is_err());
        assert!(Material::new("d", 1.04e-8).unwrap().with_drude(wp, gamma).is_ok());
    }

    #[test]
    fn reflection_low_frequency_silver() {
        let ag = MaterialDb::builtin().get("Ag").unwrap().clone();
        let w = 2.0 * PI * 1e6;
        let r = ag.im_reflection_quasistatic(w).unwrap();
        let hand = 2.0 * w * 1.6e-8 * 8.854_187_812_8e-12;
        assert!((r - 1.780e-12).abs() < 1e-15);
        assert!(rel(r, hand) < 1e-6);
    }

    #[test]
    fn reflection_real_epsilon_is_zero() {
        assert_eq!(im_image_factor(Complex64::new(3.7, 0.0)), 0.0);
    }

    #[test]
    fn reflection_glass_uses_full_image_factor() {
        // Im ε ≪ 1 for glass, so the low-frequency 2ωρε₀ form does not apply;
        // the exact factor is 2y/(4 + y²) with y = 1/(ε₀ωρ).
        let glass = MaterialDb::builtin().get("glass").unwrap().clone();
        let w = 2.0 * PI * 1e5;
        let y = 1.0 / (8.854_187_812_8e-12 * w * 1e9);
        let r = glass.im_reflection_quasistatic(w).unwrap();
        assert!(rel(r, 2.0 * y / (4.0 + y * y)) < 1e-12);
    }

    #[test]
    fn reflection_converges_to_low_frequency_form() {
        let ag = MaterialDb::builtin().get("Ag").unwrap().clone();
        for w in [1e3, 1e4, 1e5, 1e6, 1e7] {
            let r = ag.im_reflection_quasistatic(w).unwrap();
            assert!(rel(r, 2.0 * w * ag.resistivity() * EPS0) < 1e-4);
        }
    }

    #[test]
    fn nonpositive_frequency_rejected() {
        let ag = MaterialDb::builtin().get("Ag").unwrap().clone();
        assert!(ag.epsilon(0.0).is_err());
        assert!(ag.im_reflection_quasistatic(-1.0).is_err());
    }

    #[test]
    fn builtin_database_contents() {
        let db = MaterialDb::builtin();
        let ag = db.get("Ag").unwrap();
        assert!(rel(ag.resistivity(), 1.6e-8) < 1e-15);
        assert!(rel(ag.debye_freq().unwrap() * HBAR, 225.0 * KB) < 1e-14);
        assert!(rel(ag.surface_atom_mass().unwrap(), 108.0 * AMU) < 1e-15);
        assert_eq!(ag.eta().unwrap(), 0.75);
        let glass = db.get("glass").unwrap();
        assert!(rel(glass.resistivity(), 1e9) < 1e-15);
        assert!(matches!(
            glass.eta(),
            Err(Error::MissingParameter { parameter: "eta", .. })
        ));
        assert!(matches!(db.get("Cu"), Err(Error::UnknownMaterial(_))));
    }

    #[test]
    fn invariant_violations_rejected() {
        assert!(Material::new("x", 0.0).is_err());
        assert!(Material::new("x", 1.0).unwrap().with_phonons(1.0, 1.0, 2.5).is_err());
        assert!(Material::new("x", 1.0).unwrap().with_phonons(1.0, 1.0, 0.0).is_err());
        assert!(Material::new("x", 1.0).unwrap().with_phonons(1.0, 1.0, 2.0).is_ok());
        assert!(Material::new("x", 1.0).unwrap().with_phonons(-1.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn config_file_parses_with_units() {
        let text = r#"
            name = "Cu"
            resistivity_ohm_cm = 1.7e-6
            debye_temp_K = 343.0
            surface_atom_mass_amu = 63.5
            eta = 0.8
            rayleigh_velocity_m_s = 2000.0
        "#;
        let cu = Material::from_config_str(text).unwrap();
        assert!(rel(cu.resistivity(), 1.7e-8) < 1e-12);
        assert!(rel(cu.debye_freq().unwrap(), 343.0 * KB / HBAR) < 1e-12);
        assert_eq!(cu.rayleigh_velocity(), Some(2000.0));
    }

    #[test]
    fn config_file_unknown_key_is_hard_error() {
        let text = "name = \"Cu\"\nresistivity_ohm_cm = 1.7e-6\ncolour = \"red\"\n";
        let err = Material::from_config_str(text).unwrap_err();
        assert!(err.to_string().contains("colour"), "{err}");
    }

    #[test]
    fn config_file_missing_required_key() {
        assert!(Material::from_config_str("name = \"Cu\"\n").is_err());
    }

    #[test]
    fn database_round_trip() {
        let mut db = MaterialDb::builtin();
        let gamma = 4e13_f64;
        let wp = (gamma / (EPS0 * 2e-8)).sqrt();
        db.insert(
            Material::new("drudey", 2e-8)
                .unwrap()
                .with_drude(wp, gamma)
                .unwrap()
                .with_surface_density(1.4e19)
                .unwrap(),
        );
        let back = MaterialDb::from_toml_str(&db.to_toml_string()).unwrap();
        assert_eq!(back.len(), db.len());
        for name in db.names() {
            let (a, b) = (db.get(name).unwrap(), back.get(name).unwrap());
            assert!(rel(a.resistivity(), b.resistivity()) < 1e-12);
            assert_eq!(a.drude(), b.drude());
            assert_eq!(a.has_phonons(), b.has_phonons());
            if a.has_phonons() {
                assert!(rel(a.debye_freq().unwrap(), b.debye_freq().unwrap()) < 1e-12);
                assert!(rel(a.surface_atom_mass().unwrap(), b.surface_atom_mass().unwrap()) < 1e-12);
            }
        }
        // SI form is bit-exact through serde
        let json = serde_json::to_string(&db).unwrap();
        assert_eq!(serde_json::from_str::<MaterialDb>(&json).unwrap(), db);
    }
}
