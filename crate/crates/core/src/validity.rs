//! Soft validity flags attached to computed spectra and rates.
//!
//! None of these abort a computation; they record where an approximation
//! behind a formula is being stretched.

use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Validity {
    /// ω·z/c is not small; retardation is neglected by the quasi-static Green tensor.
    QuasiStatic { omega_z_over_c: f64 },
    /// Trap frequency above γ/10 of a Drude material; the low-frequency
    /// reflection limit is no longer guaranteed.
    DrudeDamping { omega: f64, damping: f64 },
    /// ħω_t/(k_B T) large enough that the high-temperature Bose factor used
    /// by a closed form deviates from the exact occupation.
    HighTemperature { hbar_omega_over_kt: f64 },
    /// Q·z not small; the K₂(Qz) → 2/(Qz)² asymptote behind the phonon rate is stretched.
    LongWavelength { qz: f64 },
    /// Endcap baseline is only defined up to a geometry factor of order unity.
    EndcapGeometry,
}

impl Validity {
    /// Short comma-free code, suitable for a CSV cell.
    pub fn code(&self) -> String {
        match self {
            Validity::QuasiStatic { omega_z_over_c } => {
                format!("quasistatic(wz/c={omega_z_over_c:.2e})")
            }
            Validity::DrudeDamping { omega, damping } => {
                format!("drude_damping(w/gamma={:.2e})", omega / damping)
            }
            Validity::HighTemperature { hbar_omega_over_kt } => {
                format!("high_t(hw/kT={hbar_omega_over_kt:.2e})")
            }
            Validity::LongWavelength { qz } => format!("long_wavelength(Qz={qz:.2e})"),
            Validity::EndcapGeometry => "endcap_geometry_factor".to_string(),
        }
    }
}

impl fmt::Display for Validity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Validity::QuasiStatic { omega_z_over_c } => write!(
                f,
                "quasi-static approximation stretched: omega*z/c = {omega_z_over_c:.3e} (>= 0.01)"
            ),
            Validity::DrudeDamping { omega, damping } => write!(
                f,
                "trap frequency {omega:.3e} rad/s exceeds a tenth of the Drude damping {damping:.3e} rad/s"
            ),
            Validity::HighTemperature { hbar_omega_over_kt } => write!(
                f,
                "high-temperature Bose factor used with hbar*omega/kT = {hbar_omega_over_kt:.3e} (> 1e-3)"
            ),
            Validity::LongWavelength { qz } => {
                write!(f, "Rayleigh wave vector not long-wavelength: Q*z = {qz:.3e} (> 0.1)")
            }
            Validity::EndcapGeometry => {
                f.write_str("endcap model holds only up to a geometrical factor of order unity")
            }
        }
    }
}
