//! Thermal electromagnetic noise above a half-space.
//!
//! Spectra follow the convention S(ω) = ∫dt ⟨F(t)F(0)⟩ e^{iωt}: positive
//! frequencies describe emission into the field, negative frequencies
//! absorption from it. The fluctuation-dissipation factor
//! 2ħ/(1 − e^{−ħω/k_BT}) is applied to Green tensors that are odd in ω, so
//! S(−ω) = 2ħ n̄(ω)·Im G(ω) with n̄ the Bose occupation.

use nalgebra::Matrix3;
use std::f64::consts::PI;
use std::fmt;

use crate::error::{require_positive, Error, Result};
use crate::materials::Material;
use crate::physcore::constants::{C, EPS0, HBAR, KB, MU0};
use crate::validity::Validity;

/// Diagonal of s_ij in the quasi-static surface Green tensor.
pub const SURFACE_ANISOTROPY: [f64; 3] = [0.5, 0.5, 1.0];

/// Diagonal of t_ij in the magnetic correlation tensor.
pub const MAGNETIC_ANISOTROPY: [f64; 3] = [1.5, 1.5, 1.0];

/// ω·z/c above which the quasi-static Green tensor is flagged.
pub const QUASI_STATIC_LIMIT: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectralUnit {
    /// V²·s/m²
    ElectricField,
    /// T²·s
    MagneticField,
    /// N²·s
    Force,
}

impl fmt::Display for SpectralUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpectralUnit::ElectricField => "V^2*s/m^2",
            SpectralUnit::MagneticField => "T^2*s",
            SpectralUnit::Force => "N^2*s",
        })
    }
}

/// Cross-correlation spectral density of a field or force at one frequency
/// and one height above the surface.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralTensor {
    pub components: Matrix3<f64>,
    pub unit: SpectralUnit,
    /// Signed angular frequency (rad/s).
    pub omega: f64,
    pub position_z: f64,
    pub warnings: Vec<Validity>,
}

impl SpectralTensor {
    /// Multiplies every component by `factor` and relabels the unit, e.g.
    /// q²·S_E → S_F.
    pub fn rescaled(mut self, factor: f64, unit: SpectralUnit) -> Self {
        self.components *= factor;
        self.unit = unit;
        self
    }

    pub fn is_symmetric(&self) -> bool {
        let scale = self.components.abs().max().max(f64::MIN_POSITIVE);
        (self.components - self.components.transpose()).abs().max() <= 1e-12 * scale
    }
}

/// Imaginary part of a Green tensor, in 1/(F·m²).
#[derive(Debug, Clone, PartialEq)]
pub struct ImGreen {
    pub components: Matrix3<f64>,
    pub warnings: Vec<Validity>,
}

fn diagonal(d: [f64; 3]) -> Matrix3<f64> {
    Matrix3::from_diagonal(&d.into())
}

fn require_nonzero_frequency(omega: f64) -> Result<()> {
    if omega.is_finite() && omega != 0.0 {
        Ok(())
    } else {
        Err(Error::invalid("omega", format!("must be finite and nonzero, got {omega}")))
    }
}

/// Fluctuation-dissipation factor 2ħ/(1 − e^{−ħω/k_BT}) in J·s.
///
/// At T = 0 it is 2ħ for ω > 0 and 0 for ω < 0.
pub fn thermal_factor(omega: f64, temperature: f64) -> Result<f64> {
    if temperature.is_nan() || temperature < 0.0 {
        return Err(Error::invalid("temperature", format!("must be >= 0 K, got {temperature}")));
    }
    require_nonzero_frequency(omega)?;
    if temperature == 0.0 {
        return Ok(if omega > 0.0 { 2.0 * HBAR } else { 0.0 });
    }
    let x = HBAR * omega / (KB * temperature);
    Ok(2.0 * HBAR / -(-x).exp_m1())
}

/// Bose occupation n̄(ω) = 1/(e^{ħω/k_BT} − 1) for ω > 0.
pub fn bose_occupation(omega: f64, temperature: f64) -> Result<f64> {
    require_positive("omega", omega)?;
    if temperature.is_nan() || temperature < 0.0 {
        return Err(Error::invalid("temperature", format!("must be >= 0 K, got {temperature}")));
    }
    if temperature == 0.0 {
        return Ok(0.0);
    }
    Ok(1.0 / (HBAR * omega / (KB * temperature)).exp_m1())
}

/// Free-space term Im G^(bb) = ω³/(6πε₀c³)·δ_ij. Odd in ω.
pub fn im_green_blackbody(omega: f64) -> Result<Matrix3<f64>> {
    require_nonzero_frequency(omega)?;
    let value = omega.powi(3) / (6.0 * PI * EPS0 * C.powi(3));
    Ok(Matrix3::identity() * value)
}

pub(crate) fn quasi_static_check(omega: f64, z: f64) -> Option<Validity> {
    let ratio = omega.abs() * z / C;
    (ratio >= QUASI_STATIC_LIMIT).then_some(Validity::QuasiStatic { omega_z_over_c: ratio })
}

/// Quasi-static surface term s_ij/(16πε₀z³)·Im[(ε−1)/(ε+1)]. Odd in ω.
pub fn im_green_surface(material: &Material, z: f64, omega: f64) -> Result<ImGreen> {
    require_positive("z", z)?;
    require_nonzero_frequency(omega)?;
    let w = omega.abs();
    let reflection = material.im_reflection_quasistatic(w)?;
    let scale = omega.signum() * reflection / (16.0 * PI * EPS0 * z.powi(3));
    let warnings = quasi_static_check(w, z)
        .into_iter()
        .chain(material.low_frequency_check(w))
        .collect();
    Ok(ImGreen {
        components: diagonal(SURFACE_ANISOTROPY) * scale,
        warnings,
    })
}

/// Which terms of the Green tensor enter the electric noise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSources {
    Surface,
    Blackbody,
    SurfaceAndBlackbody,
}

impl FieldSources {
    pub fn new(include_surface: bool, include_blackbody: bool) -> Option<Self> {
        match (include_surface, include_blackbody) {
            (true, false) => Some(FieldSources::Surface),
            (false, true) => Some(FieldSources::Blackbody),
            (true, true) => Some(FieldSources::SurfaceAndBlackbody),
            (false, false) => None,
        }
    }

    fn surface(self) -> bool {
        matches!(self, FieldSources::Surface | FieldSources::SurfaceAndBlackbody)
    }

    fn blackbody(self) -> bool {
        matches!(self, FieldSources::Blackbody | FieldSources::SurfaceAndBlackbody)
    }
}

/// Electric-field spectrum S_E^{ij}(z, z; ω) in V²·s/m².
pub fn electric_field_spectrum(
    material: &Material,
    z: f64,
    omega: f64,
    temperature: f64,
    sources: FieldSources,
) -> Result<SpectralTensor> {
    require_positive("z", z)?;
    let factor = thermal_factor(omega, temperature)?;
    let mut im_g = Matrix3::zeros();
    let mut warnings = Vec::new();
    if sources.surface() {
        let surface = im_green_surface(material, z, omega)?;
        im_g += surface.components;
        warnings.extend(surface.warnings);
    }
    if sources.blackbody() {
        im_g += im_green_blackbody(omega)?;
    }
    Ok(SpectralTensor {
        components: im_g * factor,
        unit: SpectralUnit::ElectricField,
        omega,
        position_z: z,
        warnings,
    })
}

/// μ₀²ω²ħε₀·Im ε(ω)/(1 − e^{−ħω/k_BT}), with Im ε odd in ω.
fn magnetic_prefactor(material: &Material, omega: f64, temperature: f64) -> Result<f64> {
    let factor = thermal_factor(omega, temperature)?;
    let im_eps = omega.signum() * material.epsilon(omega.abs())?.im;
    Ok(MU0 * MU0 * omega * omega * EPS0 * im_eps * factor / 2.0)
}

/// Magnetic-field cross-correlation S_B^{ij}(R, z1; R, z2; ω) in T²·s.
pub fn magnetic_field_correlation(
    material: &Material,
    z1: f64,
    z2: f64,
    omega: f64,
    temperature: f64,
) -> Result<SpectralTensor> {
    require_positive("z1", z1)?;
    require_positive("z2", z2)?;
    let prefactor = magnetic_prefactor(material, omega, temperature)?;
    let scale = prefactor / (8.0 * PI * (z1 + z2));
    let warnings = quasi_static_check(omega, z1.max(z2))
        .into_iter()
        .chain(material.low_frequency_check(omega.abs()))
        .collect();
    Ok(SpectralTensor {
        components: diagonal(MAGNETIC_ANISOTROPY) * scale,
        unit: SpectralUnit::MagneticField,
        omega,
        position_z: 0.5 * (z1 + z2),
        warnings,
    })
}

/// Kernel K(z, ω) with S_F^{zz} = Σ_i μ_i² t_ii · K, obtained from
/// ∂_{z1}∂_{z2} (8π(z1 + z2))⁻¹ at z1 = z2 = z, i.e. (32πz³)⁻¹.
pub fn magnetic_force_kernel_zz(
    material: &Material,
    z: f64,
    omega: f64,
    temperature: f64,
) -> Result<f64> {
    require_positive("z", z)?;
    let prefactor = magnetic_prefactor(material, omega, temperature)?;
    Ok(prefactor / (32.0 * PI * z.powi(3)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::materials::MaterialDb;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn silver() -> Material {
        MaterialDb::builtin().get("Ag").unwrap().clone()
    }

    const W_MHZ: f64 = 2.0 * PI * 1e6;

    #[test]
    fn thermal_factor_zero_temperature() {
        assert_eq!(thermal_factor(1.0, 0.0).unwrap(), 2.0 * HBAR);
        assert_eq!(thermal_factor(-1.0, 0.0).unwrap(), 0.0);
        assert!((thermal_factor(1e12, 1e-6).unwrap() / (2.0 * HBAR) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn thermal_factor_high_temperature() {
        let f = thermal_factor(-W_MHZ, 300.0).unwrap();
        // n̄ ≈ kT/ħω, so |f| ≈ 2kT/ω = 1.3184e-27 J·s
        let high_t = 2.0 * KB * 300.0 / W_MHZ;
        assert!((high_t - 1.3184e-27).abs() < 1e-31);
        assert!(rel(-f, high_t) < 1e-3);
        let n = bose_occupation(W_MHZ, 300.0).unwrap();
        assert!(rel(-f, 2.0 * HBAR * n) < 1e-12);
    }

    #[test]
    fn thermal_factor_detailed_balance() {
        for (w, t) in [(W_MHZ, 300.0), (1e13, 50.0), (3e12, 300.0)] {
            let ratio = thermal_factor(w, t).unwrap() / thermal_factor(-w, t).unwrap();
            // ratio of signed factors is −e^{ħω/kT}; the spectra carry an extra sign from odd Im G
            assert!(rel(-ratio, (HBAR * w / (KB * t)).exp()) < 1e-12);
        }
    }

    #[test]
    fn thermal_factor_rejects() {
        assert!(thermal_factor(1.0, -1.0).is_err());
        assert!(thermal_factor(0.0, 300.0).is_err());
    }

    #[test]
    fn blackbody_green() {
        let g = im_green_blackbody(W_MHZ).unwrap();
        let hand = W_MHZ.powi(3) / (6.0 * PI * 8.854_187_812_8e-12 * 299_792_458f64.powi(3));
        assert!(rel(g[(0, 0)], hand) < 1e-14);
        assert!(rel(g[(0, 0)], 5.516e4) < 1e-3);
        assert_eq!(g[(0, 1)], 0.0);
        assert_eq!(g[(1, 2)], 0.0);
        let g2 = im_green_blackbody(2.0 * W_MHZ).unwrap();
        assert!(rel(g2[(2, 2)], 8.0 * g[(2, 2)]) < 1e-14);
        assert_eq!(im_green_blackbody(-W_MHZ).unwrap(), -g);
    }

    #[test]
    fn surface_green() {
        let z = 1e-5;
        let g = im_green_surface(&silver(), z, W_MHZ).unwrap();
        let hand = 1.780_240_088_7e-12 / (16.0 * PI * EPS0 * z.powi(3));
        assert!(rel(g.components[(2, 2)], hand) < 1e-6);
        assert!(rel(g.components[(0, 0)], 0.5 * g.components[(2, 2)]) < 1e-15);
        assert!(rel(g.components[(1, 1)], 0.5 * g.components[(2, 2)]) < 1e-15);
        let g2 = im_green_surface(&silver(), 2.0 * z, W_MHZ).unwrap();
        assert!(rel(g2.components[(2, 2)], g.components[(2, 2)] / 8.0) < 1e-14);
        assert!(g.warnings.is_empty());
        assert!(im_green_surface(&silver(), 0.0, W_MHZ).is_err());
        let neg = im_green_surface(&silver(), z, -W_MHZ).unwrap();
        assert_eq!(neg.components, -g.components);
    }

    #[test]
    fn surface_green_flags_retardation() {
        let g = im_green_surface(&silver(), 1.0, W_MHZ).unwrap();
        assert!(matches!(g.warnings[0], Validity::QuasiStatic { .. }));
    }

    #[test]
    fn electric_spectrum_silver_ten_microns() {
        let z = 1e-5;
        let s = electric_field_spectrum(&silver(), z, -W_MHZ, 300.0, FieldSources::Surface).unwrap();
        let high_t = KB * 300.0 * 1.6e-8 / (4.0 * PI * z.powi(3));
        assert!(rel(high_t, 5.2737e-15) < 1e-4);
        assert!(rel(s.components[(2, 2)], high_t) < 5e-3);
        assert_eq!(s.unit, SpectralUnit::ElectricField);
        assert!(s.is_symmetric());
    }

    #[test]
    fn electric_spectrum_zero_temperature_absorption_vanishes() {
        let s = electric_field_spectrum(&silver(), 1e-6, -W_MHZ, 0.0, FieldSources::SurfaceAndBlackbody)
            .unwrap();
        assert_eq!(s.components, Matrix3::zeros());
    }

    #[test]
    fn electric_spectrum_blackbody_only() {
        let s = electric_field_spectrum(&silver(), 1e-6, -W_MHZ, 300.0, FieldSources::Blackbody).unwrap();
        let high_t = 2.0 * KB * 300.0 / W_MHZ * W_MHZ.powi(3) / (6.0 * PI * EPS0 * C.powi(3));
        for i in 0..3 {
            assert!(rel(s.components[(i, i)], high_t) < 1e-6);
        }
        assert_eq!(s.components[(0, 2)], 0.0);
    }

    #[test]
    fn magnetic_correlation_shape() {
        let s = magnetic_field_correlation(&silver(), 1e-6, 1e-6, -2.0 * PI * 1e5, 300.0).unwrap();
        assert!(rel(s.components[(0, 0)], 1.5 * s.components[(2, 2)]) < 1e-15);
        assert!(rel(s.components[(1, 1)], 1.5 * s.components[(2, 2)]) < 1e-15);
        // high-T and Im ε = 1/(ε₀ωρ): μ₀²k_BT/ρ · 1/(16πz)
        let hand = MU0 * MU0 * KB * 300.0 / 1.6e-8 / (16.0 * PI * 1e-6);
        assert!(rel(s.components[(2, 2)], hand) < 1e-6);
    }

    #[test]
    fn magnetic_kernel_scaling_and_zero_temperature() {
        let w = -2.0 * PI * 1e5;
        let k = magnetic_force_kernel_zz(&silver(), 1e-6, w, 300.0).unwrap();
        let k2 = magnetic_force_kernel_zz(&silver(), 2e-6, w, 300.0).unwrap();
        assert!(rel(k2, k / 8.0) < 1e-14);
        assert_eq!(magnetic_force_kernel_zz(&silver(), 1e-6, w, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn field_sources_selector() {
        assert_eq!(FieldSources::new(false, false), None);
        assert_eq!(FieldSources::new(true, true), Some(FieldSources::SurfaceAndBlackbody));
    }
}
