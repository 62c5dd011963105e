//! Heating rates of harmonically trapped particles above room-temperature
//! solid surfaces.
//!
//! Mechanisms: electric proximity fields (ions), magnetic proximity fields
//! (spins), Rayleigh-phonon modulation of the van-der-Waals potential
//! (neutral atoms), and blackbody and endcap-circuit baselines. Every
//! mechanism implements [`rates::HeatingMechanism`] and is looked up by name
//! in a [`rates::MechanismRegistry`].

pub mod em_noise;
pub mod error;
pub mod materials;
pub mod output;
pub mod phonons;
pub mod physcore;
pub mod rates;
pub mod scenario;
pub mod sweep;
pub mod trap;
pub mod validity;

pub use error::{Error, ErrorCategory, Result};
pub use materials::{Material, MaterialDb};
pub use rates::{compute_all, Mechanism, MechanismRegistry, Method, RateResult, Setup};
pub use scenario::Scenario;
pub use sweep::{run_scenario, SweepTable};
pub use trap::{Particle, SpinSpec, TrapConfig};
