//! Physical constants (SI) and the eV-mass/interaction-range conversion.
//!
//! Source: CODATA 2018 — Tiesinga et al., Rev. Mod. Phys. 93, 025010 (2021).
//! Values are hard-coded, not configurable, so scan output is reproducible
//! bit for bit.

use crate::error::{Error, Result};

/// Reduced Planck constant ħ (J·s). h = 6.626 070 15e-34 J·s is exact since
/// the 2019 SI redefinition; ħ = h/2π.
pub const HBAR: f64 = 1.054_571_817e-34;

/// Newtonian gravitational constant G (m³·kg⁻¹·s⁻²).
pub const G: f64 = 6.674_30e-11;

/// Electron mass (kg).
pub const M_ELECTRON: f64 = 9.109_383_7015e-31;

/// Speed of light in vacuum (m/s). Exact.
pub const C: f64 = 299_792_458.0;

/// Elementary charge (C). Exact.
pub const E_CHARGE: f64 = 1.602_176_634e-19;

/// ħc expressed in eV·m. A boson of mass m (eV) mediates a force of range
/// λ = HBAR_C_EV_M / m, its reduced Compton wavelength.
pub const HBAR_C_EV_M: f64 = HBAR * C / E_CHARGE;

/// The full constant table as one value, for callers that want to pass the
/// set around or print it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// ħ (J·s)
    pub hbar: f64,
    /// G (m³·kg⁻¹·s⁻²)
    pub g_newton: f64,
    /// electron mass (kg)
    pub m_electron: f64,
    /// c (m/s)
    pub c: f64,
    /// elementary charge (C)
    pub e_charge: f64,
    /// ħc (eV·m)
    pub hbar_c_ev_m: f64,
}

/// CODATA 2018 values, identical to the module-level constants.
pub const CODATA_2018: PhysicalConstants = PhysicalConstants {
    hbar: HBAR,
    g_newton: G,
    m_electron: M_ELECTRON,
    c: C,
    e_charge: E_CHARGE,
    hbar_c_ev_m: HBAR_C_EV_M,
};

/// Converts a boson mass in eV to the range (m) of the force it mediates.
pub fn mass_ev_to_range_m(m_phi_ev: f64) -> Result<f64> {
    if !(m_phi_ev > 0.0) || !m_phi_ev.is_finite() {
        return Err(Error::domain(format!(
            "boson mass must be positive and finite, got {m_phi_ev} eV"
        )));
    }
    Ok(HBAR_C_EV_M / m_phi_ev)
}

/// Inverse of [`mass_ev_to_range_m`]: range in meters to boson mass in eV.
pub fn range_m_to_mass_ev(lambda_m: f64) -> Result<f64> {
    if !(lambda_m > 0.0) || !lambda_m.is_finite() {
        return Err(Error::domain(format!(
            "range must be positive and finite, got {lambda_m} m"
        )));
    }
    Ok(HBAR_C_EV_M / lambda_m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn hbar_c_matches_codata() {
        // ħc = 197.326 980 4 MeV·fm = 1.973 269 804e-7 eV·m
        assert_relative_eq!(HBAR_C_EV_M, 1.9732698033839645e-7, max_relative = 1e-12);
        assert_relative_eq!(HBAR_C_EV_M, 1.973269804e-7, max_relative = 1e-9);
    }

    #[test]
    fn constants_positive() {
        let c = CODATA_2018;
        for v in [c.hbar, c.g_newton, c.m_electron, c.c, c.e_charge, c.hbar_c_ev_m] {
            assert!(v > 0.0);
        }
    }

    #[test]
    fn one_ev_range() {
        assert_relative_eq!(
            mass_ev_to_range_m(1.0).unwrap(),
            1.9732698033839645e-7,
            max_relative = 1e-12
        );
    }

    #[test]
    fn light_boson_range() {
        assert_relative_eq!(
            mass_ev_to_range_m(1e-10).unwrap(),
            1.9732698033839645e3,
            max_relative = 1e-12
        );
    }

    #[test]
    fn range_to_mass_inverse() {
        assert_relative_eq!(
            range_m_to_mass_ev(1.9732698033839645e-7).unwrap(),
            1.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(mass_ev_to_range_m(0.0).is_err());
        assert!(mass_ev_to_range_m(-1.0).is_err());
        assert!(mass_ev_to_range_m(f64::NAN).is_err());
        assert!(range_m_to_mass_ev(-1.0).is_err());
        assert!(range_m_to_mass_ev(0.0).is_err());
    }

    #[test]
    fn strictly_decreasing_in_mass() {
        let mut prev = f64::INFINITY;
        let mut m = 1e-18;
        while m <= 1e2 {
            let r = mass_ev_to_range_m(m).unwrap();
            assert!(r < prev, "range must decrease with mass");
            prev = r;
            m *= 10.0;
        }
    }

    #[test]
    fn round_trip_identity() {
        let mut m = 1e-18;
        while m <= 1e2 {
            let back = range_m_to_mass_ev(mass_ev_to_range_m(m).unwrap()).unwrap();
            assert_relative_eq!(back, m, max_relative = 1e-12);
            m *= 3.7;
        }
    }
}
