//! Physical constants, fused-silica material data and the Cs D2 transition.
//!
//! Everything downstream (coupling strengths, tuning budgets) pulls its numbers
//! from here, so the values are fixed at build time and overridable only through
//! the CLI config for sensitivity studies.

use crate::error::{Error, Result};

/// CODATA-fixed constants. Lengths are micrometers throughout the crate.
#[derive(Debug, Clone, Copy)]
pub struct PhysicalConstants {
    /// Speed of light in um/s.
    pub c_um_per_s: f64,
    /// Reduced Planck constant in J*s.
    pub hbar: f64,
    /// Vacuum permittivity in F/m.
    pub eps0: f64,
}

pub const CONSTANTS: PhysicalConstants = PhysicalConstants {
    c_um_per_s: 2.99792458e14,
    hbar: 1.054571817e-34,
    eps0: 8.8541878128e-12,
};

/// Fused-silica optical and elastic data.
#[derive(Debug, Clone, Copy)]
pub struct SilicaProperties {
    /// Malitson three-term Sellmeier fit: (B_i, C_i) with C_i in um^2.
    pub sellmeier: [(f64, f64); 3],
    /// Thermo-optic coefficient dn/dT in 1/K.
    pub dn_dt: f64,
    /// Young's modulus in Pa.
    pub youngs_modulus: f64,
    /// Poisson ratio.
    pub poisson_ratio: f64,
    /// Elasto-optic coefficients.
    pub p11: f64,
    pub p12: f64,
    /// Tensile damage threshold in Pa.
    pub damage_threshold: f64,
}

impl Default for SilicaProperties {
    fn default() -> Self {
        SilicaProperties {
            sellmeier: [
                (0.6961663, 0.0684043 * 0.0684043),
                (0.4079426, 0.1162414 * 0.1162414),
                (0.8974794, 9.896161 * 9.896161),
            ],
            dn_dt: 1.3e-5,
            youngs_modulus: 7.2e10,
            poisson_ratio: 0.17,
            p11: 0.121,
            p12: 0.270,
            damage_threshold: 3.0e9,
        }
    }
}

impl SilicaProperties {
    /// Refractive index from the Sellmeier fit. Valid for 0.2..=2.0 um.
    pub fn index(&self, wavelength_um: f64) -> Result<f64> {
        if !(0.2..=2.0).contains(&wavelength_um) {
            return Err(Error::Domain(format!(
                "wavelength {wavelength_um} um outside Sellmeier validity range [0.2, 2.0]"
            )));
        }
        let l2 = wavelength_um * wavelength_um;
        let mut n2 = 1.0;
        for (b, c) in self.sellmeier {
            n2 += b * l2 / (l2 - c);
        }
        Ok(n2.sqrt())
    }
}

/// Convenience wrapper using the default silica data.
pub fn silica_index(wavelength_um: f64) -> Result<f64> {
    SilicaProperties::default().index(wavelength_um)
}

/// A two-level dipole transition of the coupled atom.
#[derive(Debug, Clone, Copy)]
pub struct AtomTransition {
    /// Vacuum wavelength in um.
    pub vacuum_wavelength_um: f64,
    /// Angular frequency in rad/s.
    pub angular_frequency: f64,
    /// Dipole matrix element in C*m.
    pub dipole_moment: f64,
    /// Natural linewidth (FWHM) in rad/s.
    pub natural_linewidth: f64,
}

impl AtomTransition {
    /// Cs D2 line at 852 nm. The dipole moment is the sigma+- cycling-transition
    /// value 2.69e-29 C*m (reduced matrix element 3.80e-29 / sqrt(2)), the
    /// conventional cavity-QED choice.
    pub fn cs_d2() -> Self {
        let lambda = 0.852347;
        AtomTransition {
            vacuum_wavelength_um: lambda,
            angular_frequency: 2.0 * std::f64::consts::PI * CONSTANTS.c_um_per_s / lambda,
            dipole_moment: 2.69e-29,
            natural_linewidth: 2.0 * std::f64::consts::PI * 5.234e6,
        }
    }

    pub fn with_wavelength(wavelength_um: f64) -> Self {
        let mut t = Self::cs_d2();
        t.vacuum_wavelength_um = wavelength_um;
        t.angular_frequency = 2.0 * std::f64::consts::PI * CONSTANTS.c_um_per_s / wavelength_um;
        t
    }
}

#[cfg (test)]
mod tests {
    use super::*;

    #[test]
    fn silica_index_reference_points() {
        // Independently evaluated Malitson fit (mpmath, 40 digits):
        // n(0.852)  = 1.45246722584...
        // n(0.5893) = 1.45840271795...
        let n852 = silica_index(0.852).unwrap();
        assert!((n852 - 1.4524672258445566).abs() < 1e-12);
        assert!((n852 - 1.4525).abs() < 5e-4);
        let nd = silica_index(0.5893).unwrap();
        assert!((nd - 1.4584027179559167).abs() < 1e-12);
        assert!((nd - 1.4584).abs() < 5e-4);
    }

    #[test]
    fn silica_index_rejects_out_of_range() {
        assert!(silica_index(0.1).is_err());
        assert!(silica_index(2.5).is_err());
    }

    #[test]
    fn silica_index_normal_dispersion() {
        // monotone decreasing on [0.5, 1.6]
        let mut prev = silica_index(0.5).unwrap();
        let mut lam = 0.51;
        while lam <= 1.6 {
            let n = silica_index(lam).unwrap();
            assert!(n < prev, "dispersion not normal at {lam}");
            prev = n;
            lam += 0.01;
        }
    }

    #[test]
    fn transition_frequency_consistent() {
        let t = AtomTransition::cs_d2();
        let check = 2.0 * std::f64::consts::PI * CONSTANTS.c_um_per_s / t.vacuum_wavelength_um;
        assert!((t.angular_frequency - check).abs() / check < 1e-15);
        // 2 pi * 351.7 THz to within 0.1%
        assert!((t.angular_frequency / (2.0 * std::f64::consts::PI) - 3.517e14).abs() < 3e11);
        assert!(t.dipole_moment > 0.0 && t.natural_linewidth > 0.0);
    }

    #[test]
    fn silica_invariants() {
        let s = SilicaProperties::default();
        assert_eq!(s.dn_dt, 1.3e-5);
        assert_eq!(s.youngs_modulus, 7.2e10);
        assert_eq!(s.damage_threshold, 3.0e9);
        assert!(s.poisson_ratio > 0.0 && s.poisson_ratio < 0.5);
    }
}
