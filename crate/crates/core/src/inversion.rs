//! Inverts a target witness value into model couplings.
//!
//! The closed-form witness depends on the coupling only through the
//! entanglement phase ω_ent·τ = (φ₁+φ₂)/2, so inversion happens in two
//! stages: first solve the witness expression for ω_ent,
//!
//! ```text
//! ω_ent·τ = arcsin( (e^{−γτ} − e^{γτ}(1 − 4W)) / 2 )
//! ```
//!
//! then divide out the branch-geometry factor of the chosen model. Only the
//! principal arcsine branch is used: the approximation regime |ω_ent·τ| < 1
//! lies strictly inside it, and other branches would be extraneous roots.
//! The arcsine is applied to the dimensionless product ω_ent·τ; dividing by
//! τ restores the frequency, which keeps the inversion consistent with the
//! forward expression sin(ω_ent·τ) for every interaction time.

use crate::constants::{mass_ev_to_range_m, C, G, HBAR};
use crate::error::{Error, Result};
use crate::potentials::{potential_energy, Geometry, PotentialModel, SpinConfig};

use std::f64::consts::PI;

/// Witness value and decoherence the experiment is assumed to resolve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessTarget {
    /// target witness expectation value (dimensionless, typically negative)
    pub w: f64,
    /// decoherence rate (Hz)
    pub gamma: f64,
    /// interaction time (s)
    pub tau: f64,
}

impl WitnessTarget {
    pub fn new(w: f64, gamma: f64, tau: f64) -> Result<Self> {
        if !w.is_finite() {
            return Err(Error::domain(format!("witness target must be finite, got {w}")));
        }
        if !(gamma >= 0.0) || !gamma.is_finite() {
            return Err(Error::domain(format!(
                "decoherence rate must be finite and >= 0, got {gamma}"
            )));
        }
        if !(tau > 0.0) || !tau.is_finite() {
            return Err(Error::domain(format!(
                "interaction time must be positive and finite, got {tau}"
            )));
        }
        Ok(WitnessTarget { w, gamma, tau })
    }

    pub fn gamma_tau(&self) -> f64 {
        self.gamma * self.tau
    }
}

/// A coupling solved from a witness target, tagged with the regime flags of
/// the point it came from. Points outside the small-phase regime are
/// returned with `valid_approximation = false` rather than suppressed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvertedCoupling {
    /// α (J·m), α_g, g_S or g_P depending on the operation
    pub coupling: f64,
    /// ω_ent·τ solved from the target
    pub omega_ent_tau: f64,
    pub gamma_tau: f64,
    /// γτ < 1 and |ω_ent·τ| < 1
    pub valid_approximation: bool,
}

fn tag(coupling: f64, omega_ent_tau: f64, gamma_tau: f64) -> InvertedCoupling {
    InvertedCoupling {
        coupling,
        omega_ent_tau,
        gamma_tau,
        valid_approximation: gamma_tau < 1.0 && omega_ent_tau.abs() < 1.0,
    }
}

/// Arguments this far past ±1 are rounding noise from a witness value that
/// was itself produced by a sine at the branch endpoint; anything beyond is
/// a genuinely unreachable target.
const ARCSIN_CLAMP: f64 = 1e-14;

/// ω_ent·τ for the target, or the unreachable-witness error when no real
/// phase produces this witness value at this decoherence level.
pub fn omega_ent_tau_from_witness(target: &WitnessTarget) -> Result<f64> {
    let gt = target.gamma_tau();
    let arg = ((-gt).exp() - gt.exp() * (1.0 - 4.0 * target.w)) / 2.0;
    if !(arg.abs() <= 1.0 + ARCSIN_CLAMP) {
        return Err(Error::UnreachableWitness {
            witness: target.w,
            gamma_tau: gt,
            argument: arg,
        });
    }
    Ok(arg.clamp(-1.0, 1.0).asin())
}

/// Entanglement frequency ω_ent (rad/s) for the target.
pub fn omega_ent_from_witness(target: &WitnessTarget) -> Result<f64> {
    Ok(omega_ent_tau_from_witness(target)? / target.tau)
}

/// e^{−r_cross/λ}/r_cross − e^{−d/λ}/d, the factor a Yukawa-type strength
/// multiplies to become the relative phase rate. Negative for every finite
/// λ (the cross branch is farther). Underflows to zero when λ is far below
/// the trap separation, which makes the inversion degenerate.
fn branch_bracket(lambda: f64, geom: &Geometry) -> Result<f64> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::domain(format!(
            "range must be positive and finite, got {lambda} m"
        )));
    }
    let rc = geom.r_cross();
    let bracket = (-rc / lambda).exp() / rc - (-geom.d / lambda).exp() / geom.d;
    if bracket.abs() < 1e-300 {
        return Err(Error::DegenerateGeometry { factor: bracket });
    }
    Ok(bracket)
}

/// Yukawa strength α (J·m) reproducing the target at range λ:
/// α = ħ ω_ent · [e^{−r_cross/λ}/r_cross − e^{−d/λ}/d]⁻¹.
pub fn alpha_from_witness(
    target: &WitnessTarget,
    lambda: f64,
    geom: &Geometry,
) -> Result<InvertedCoupling> {
    let ot = omega_ent_tau_from_witness(target)?;
    let bracket = branch_bracket(lambda, geom)?;
    let alpha = HBAR * (ot / target.tau) / bracket;
    Ok(tag(alpha, ot, target.gamma_tau()))
}

/// Relative Yukawa-correction strength α_g reproducing the target on top of
/// Newtonian gravity between two masses m:
/// α_g = [ħ ω_ent/(G m²) − (1/r_cross − 1/d)] · [bracket]⁻¹.
pub fn alpha_g_from_witness(
    target: &WitnessTarget,
    lambda: f64,
    mass: f64,
    geom: &Geometry,
) -> Result<InvertedCoupling> {
    if !(mass > 0.0) || !mass.is_finite() {
        return Err(Error::domain(format!(
            "particle mass must be positive and finite, got {mass} kg"
        )));
    }
    let ot = omega_ent_tau_from_witness(target)?;
    let bracket = branch_bracket(lambda, geom)?;
    let rc = geom.r_cross();
    let newtonian_rate = 1.0 / rc - 1.0 / geom.d;
    let alpha_g = (HBAR / (G * mass * mass) * (ot / target.tau) - newtonian_rate) / bracket;
    Ok(tag(alpha_g, ot, target.gamma_tau()))
}

/// Scalar coupling g_S reproducing the target for boson mass m_φ (eV).
///
/// The scalar-exchange potential is attractive, so its phase has the
/// opposite sign to a repulsive Yukawa of equal magnitude; the observable
/// witness is insensitive to that sign (the partial-transpose spectrum
/// depends on the phase only through its magnitude). The coupling therefore
/// comes from the magnitude map g_S² = 4π α/(ħc) with α the Yukawa strength
/// solved above; a target whose α is negative has the wrong sign for an
/// attractive potential and is reported as sign-inconsistent.
pub fn g_s_from_witness(
    target: &WitnessTarget,
    m_phi_ev: f64,
    geom: &Geometry,
) -> Result<InvertedCoupling> {
    let lambda = mass_ev_to_range_m(m_phi_ev)?;
    let alpha = alpha_from_witness(target, lambda, geom)?;
    let g_s_squared = 4.0 * PI * alpha.coupling / (HBAR * C);
    if g_s_squared < 0.0 {
        return Err(Error::SignInconsistentWitness {
            coupling_squared: g_s_squared,
        });
    }
    Ok(tag(g_s_squared.sqrt(), alpha.omega_ent_tau, alpha.gamma_tau))
}

/// Pseudoscalar coupling g_P reproducing the target for boson mass m_φ (eV)
/// and the given spin polarizations.
///
/// With f(r⃗) the unit-coupling potential, the relative phase rate is
/// g_P² Δf/ħ with Δf = f(cross) − f(aligned), each branch evaluated with
/// its own direction r̂. g_P = sqrt(ħ ω_ent / Δf): a vanishing Δf is
/// degenerate, a negative ratio is sign-inconsistent.
pub fn g_p_from_witness(
    target: &WitnessTarget,
    m_phi_ev: f64,
    spin: &SpinConfig,
    geom: &Geometry,
) -> Result<InvertedCoupling> {
    let ot = omega_ent_tau_from_witness(target)?;
    let unit = PotentialModel::PseudoscalarAlp {
        g_p: 1.0,
        m_phi_ev,
        spin: *spin,
    };
    let f_aligned = potential_energy(&unit, [geom.d, 0.0, 0.0])?;
    let f_cross = potential_energy(&unit, [geom.d, geom.delta_x, 0.0])?;
    let delta_f = f_cross - f_aligned;
    if delta_f.abs() < 1e-300 {
        return Err(Error::DegenerateGeometry { factor: delta_f });
    }
    let g_p_squared = HBAR * (ot / target.tau) / delta_f;
    if g_p_squared < 0.0 {
        return Err(Error::SignInconsistentWitness {
            coupling_squared: g_p_squared,
        });
    }
    Ok(tag(g_p_squared.sqrt(), ot, target.gamma_tau()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::witness_from_products;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn fig_geometry() -> Geometry {
        Geometry::new(50e-6, 10e-6, 1.0).unwrap()
    }

    #[test]
    fn target_validation() {
        assert!(WitnessTarget::new(f64::NAN, 0.0, 1.0).is_err());
        assert!(WitnessTarget::new(-0.1, -1.0, 1.0).is_err());
        assert!(WitnessTarget::new(-0.1, 0.0, 0.0).is_err());
    }

    #[test]
    fn omega_trivials() {
        let t = WitnessTarget::new(0.0, 0.0, 1.0).unwrap();
        assert_abs_diff_eq!(omega_ent_from_witness(&t).unwrap(), 0.0, epsilon = 1e-15);

        let t = WitnessTarget::new(-0.5, 0.0, 1.0).unwrap();
        assert_relative_eq!(
            omega_ent_from_witness(&t).unwrap(),
            -std::f64::consts::FRAC_PI_2,
            max_relative = 1e-14
        );
    }

    #[test]
    fn omega_frozen_reference() {
        // W = -0.1, gamma*tau = 0.1: arcsin((e^{-0.1} - 1.4 e^{0.1})/2)
        let t = WitnessTarget::new(-0.1, 0.1, 1.0).unwrap();
        let ot = omega_ent_tau_from_witness(&t).unwrap();
        assert_relative_eq!(ot, -0.32699734554834214, max_relative = 1e-12);
        // must close with the forward expression
        assert_relative_eq!(witness_from_products(ot, 0.1), -0.1, max_relative = 1e-12);
    }

    #[test]
    fn omega_witness_roundtrip_identity() {
        for gt in [0.0, 0.05, 0.3, 0.9] {
            for k in -8..=8 {
                let ot = k as f64 * std::f64::consts::FRAC_PI_2 / 8.5;
                let w = witness_from_products(ot, gt);
                let t = WitnessTarget::new(w, gt, 1.0).unwrap();
                let back = omega_ent_tau_from_witness(&t).unwrap();
                assert_abs_diff_eq!(back, ot, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn unreachable_witness_fires_exactly_outside_band() {
        // at gamma = 0 the argument is 2W, so |W| > 1/2 is unreachable
        let t = WitnessTarget::new(-0.51, 0.0, 1.0).unwrap();
        assert!(matches!(
            omega_ent_tau_from_witness(&t),
            Err(Error::UnreachableWitness { .. })
        ));
        let t = WitnessTarget::new(-0.5, 0.0, 1.0).unwrap();
        assert!(omega_ent_tau_from_witness(&t).is_ok());
        let t = WitnessTarget::new(0.51, 0.0, 1.0).unwrap();
        assert!(omega_ent_tau_from_witness(&t).is_err());
    }

    #[test]
    fn alpha_zero_witness() {
        let t = WitnessTarget::new(0.0, 0.0, 1.0).unwrap();
        for lambda in [1e-6, 1e-4, 1.0] {
            let a = alpha_from_witness(&t, lambda, &fig_geometry()).unwrap();
            assert_eq!(a.coupling, 0.0);
            assert!(a.valid_approximation);
        }
    }

    #[test]
    fn alpha_positive_for_negative_witness() {
        let t = WitnessTarget::new(-0.1, 0.1, 1.0).unwrap();
        for lambda in [1e-6, 1e-5, 1e-4, 1e-2] {
            let a = alpha_from_witness(&t, lambda, &fig_geometry()).unwrap();
            assert!(a.coupling > 0.0, "repulsive coupling expected, got {}", a.coupling);
        }
    }

    #[test]
    fn alpha_frozen_reference_and_roundtrip() {
        // W = -0.01, gamma = 1e-2, lambda = 1e-4 on the 50/10 um geometry.
        let geom = fig_geometry();
        let t = WitnessTarget::new(-0.01, 1e-2, geom.tau).unwrap();
        let a = alpha_from_witness(&t, 1e-4, &geom).unwrap();
        assert_relative_eq!(a.coupling, 9.029689128675789e-39, max_relative = 1e-12);
        assert!(a.valid_approximation);

        // forward: rebuild phases and recover the witness
        let model = PotentialModel::Yukawa {
            alpha: a.coupling,
            lambda: 1e-4,
        };
        let phases = crate::potentials::phase_pair(&model, &geom).unwrap();
        let w = witness_from_products(phases.half_sum(), t.gamma_tau());
        assert_relative_eq!(w, t.w, max_relative = 1e-9);
    }

    #[test]
    fn alpha_more_negative_witness_needs_larger_coupling() {
        let geom = fig_geometry();
        let mut prev = 0.0;
        for w in [-0.01, -0.05, -0.1, -0.2, -0.4] {
            let t = WitnessTarget::new(w, 1e-2, 1.0).unwrap();
            let a = alpha_from_witness(&t, 1e-4, &geom).unwrap().coupling;
            assert!(a > prev, "alpha must grow as the witness deepens");
            prev = a;
        }
    }

    #[test]
    fn alpha_degenerate_at_tiny_range() {
        let t = WitnessTarget::new(-0.1, 0.0, 1.0).unwrap();
        let r = alpha_from_witness(&t, 1e-9, &fig_geometry());
        assert!(matches!(r, Err(Error::DegenerateGeometry { .. })));
    }

    #[test]
    fn alpha_g_zero_when_gravity_alone_matches() {
        // Build the target from the pure-Newtonian phase, then invert: the
        // Yukawa correction must vanish.
        let geom = fig_geometry();
        let mass = 1e-14;
        let gt = 1e-3;
        let phi_grav = G * mass * mass / HBAR * (1.0 / geom.r_cross() - 1.0 / geom.d) * geom.tau;
        let w = witness_from_products(phi_grav, gt);
        let t = WitnessTarget::new(w, gt / geom.tau, geom.tau).unwrap();
        let ag = alpha_g_from_witness(&t, 1e-4, mass, &geom).unwrap();
        assert_abs_diff_eq!(ag.coupling, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn alpha_g_frozen_reference_and_roundtrip() {
        let geom = fig_geometry();
        let mass = 1e-14;
        let t = WitnessTarget::new(-0.01, 1e-3, geom.tau).unwrap();
        let ag = alpha_g_from_witness(&t, 1e-4, mass, &geom).unwrap();
        assert_relative_eq!(ag.coupling, -0.15941110516115298, max_relative = 1e-9);

        let model = PotentialModel::ModifiedNewtonian {
            alpha_g: ag.coupling,
            lambda: 1e-4,
            mass,
        };
        let phases = crate::potentials::phase_pair(&model, &geom).unwrap();
        let w = witness_from_products(phases.half_sum(), t.gamma_tau());
        assert_relative_eq!(w, t.w, max_relative = 1e-9);
    }

    #[test]
    fn alpha_g_blows_up_at_small_range() {
        let geom = fig_geometry();
        let t = WitnessTarget::new(-0.01, 1e-3, 1.0).unwrap();
        let near = alpha_g_from_witness(&t, 4e-6, 1e-14, &geom).unwrap();
        let far = alpha_g_from_witness(&t, 1e-2, 1e-14, &geom).unwrap();
        assert!(
            near.coupling.abs() > 1e3 * far.coupling.abs(),
            "exponential suppression must inflate |alpha_g| as lambda -> 0"
        );
    }

    #[test]
    fn g_s_zero_witness() {
        let t = WitnessTarget::new(0.0, 0.0, 1.0).unwrap();
        let g = g_s_from_witness(&t, 1e-3, &fig_geometry()).unwrap();
        assert_eq!(g.coupling, 0.0);
    }

    #[test]
    fn g_s_frozen_references() {
        // ion-trap regime: tau = 1 us, gamma = 1e3 Hz, Dx = sqrt(hbar/2 m w)
        let dx = crate::potentials::ion_trap_delta_x(1e-27, 1e5).unwrap();
        let t_near = WitnessTarget::new(-0.1, 1e3, 1e-6).unwrap();
        let near = Geometry::new(500e-9, dx, 1e-6).unwrap();
        let g = g_s_from_witness(&t_near, 1e-3, &near).unwrap();
        assert_relative_eq!(g.coupling, 9.903791878672278e-5, max_relative = 1e-9);

        let far = Geometry::new(50e-6, dx, 1e-6).unwrap();
        let g = g_s_from_witness(&t_near, 1e-3, &far).unwrap();
        assert_relative_eq!(g.coupling, 0.06433651386229786, max_relative = 1e-9);
    }

    #[test]
    fn g_s_scales_as_sqrt_of_witness_near_zero() {
        let dx = crate::potentials::ion_trap_delta_x(1e-27, 1e5).unwrap();
        let geom = Geometry::new(500e-9, dx, 1e-6).unwrap();
        let g1 = g_s_from_witness(&WitnessTarget::new(-1e-3, 0.0, 1e-6).unwrap(), 1e-3, &geom)
            .unwrap()
            .coupling;
        let g2 = g_s_from_witness(&WitnessTarget::new(-2e-3, 0.0, 1e-6).unwrap(), 1e-3, &geom)
            .unwrap()
            .coupling;
        assert_relative_eq!(g2 / g1, std::f64::consts::SQRT_2, max_relative = 1e-2);
    }

    #[test]
    fn g_s_sign_inconsistent_for_positive_witness() {
        // a positive witness needs a repulsive potential; scalar exchange
        // cannot provide one
        let t = WitnessTarget::new(0.1, 0.0, 1.0).unwrap();
        let r = g_s_from_witness(&t, 1e-3, &fig_geometry());
        assert!(matches!(r, Err(Error::SignInconsistentWitness { .. })));
    }

    #[test]
    fn g_p_zero_witness() {
        let t = WitnessTarget::new(0.0, 0.0, 1e-6).unwrap();
        let dx = crate::potentials::ion_trap_delta_x(1e-27, 1e5).unwrap();
        let geom = Geometry::new(500e-9, dx, 1e-6).unwrap();
        let g = g_p_from_witness(&t, 1e-3, &SpinConfig::default(), &geom).unwrap();
        assert_eq!(g.coupling, 0.0);
    }

    #[test]
    fn g_p_frozen_reference_and_roundtrip() {
        let dx = crate::potentials::ion_trap_delta_x(1e-27, 1e5).unwrap();
        let geom = Geometry::new(500e-9, dx, 1e-6).unwrap();
        let t = WitnessTarget::new(-0.1, 1e3, 1e-6).unwrap();
        let spin = SpinConfig::default();
        let g = g_p_from_witness(&t, 1e-3, &spin, &geom).unwrap();
        assert_relative_eq!(g.coupling, 119.12572699687983, max_relative = 1e-9);

        let model = PotentialModel::PseudoscalarAlp {
            g_p: g.coupling,
            m_phi_ev: 1e-3,
            spin,
        };
        let phases = crate::potentials::phase_pair(&model, &geom).unwrap();
        let w = witness_from_products(phases.half_sum(), t.gamma_tau());
        assert_relative_eq!(w, t.w, max_relative = 1e-9);
    }

    #[test]
    fn g_p_degenerate_when_potential_underflows() {
        let dx = crate::potentials::ion_trap_delta_x(1e-27, 1e5).unwrap();
        let geom = Geometry::new(500e-9, dx, 1e-6).unwrap();
        let t = WitnessTarget::new(-0.1, 1e3, 1e-6).unwrap();
        let r = g_p_from_witness(&t, 1e6, &SpinConfig::default(), &geom);
        assert!(matches!(r, Err(Error::DegenerateGeometry { .. })));
    }
}
