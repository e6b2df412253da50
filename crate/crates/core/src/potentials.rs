//! Interaction potentials and the branch phases they imprint.
//!
//! Geometry convention: the two traps sit on the x axis a distance `d`
//! apart, and each particle's superposition arms are split by `delta_x`
//! along y (parallel arrangement). Same-branch pairs are then separated by
//! the vector (d, 0, 0) and cross-branch pairs by (d, Δx, 0) of length
//! r = sqrt(d² + Δx²), so both anti-aligned joint states pick up the same
//! phase and `phi_1 == phi_2`.
//!
//! The Coulomb interaction between charged particles is deliberately not
//! part of any model here: in the screened setups this pipeline targets it
//! contributes only a global phase, so it never enters the witness.

use crate::constants::{mass_ev_to_range_m, C, G, HBAR, M_ELECTRON};
use crate::error::{Error, Result};
use crate::qcore::PhaseSet;

use std::f64::consts::PI;

/// Trap separation, superposition width and interaction time (SI).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geometry {
    /// distance between the traps (m)
    pub d: f64,
    /// superposition width (m)
    pub delta_x: f64,
    /// interaction time (s)
    pub tau: f64,
}

impl Geometry {
    pub fn new(d: f64, delta_x: f64, tau: f64) -> Result<Self> {
        for (name, v) in [("d", d), ("delta_x", delta_x), ("tau", tau)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::domain(format!(
                    "geometry field {name} must be positive and finite, got {v}"
                )));
            }
        }
        Ok(Geometry { d, delta_x, tau })
    }

    /// Cross-branch distance sqrt(d² + Δx²), always > d.
    pub fn r_cross(&self) -> f64 {
        self.d.hypot(self.delta_x)
    }

    fn aligned_displacement(&self) -> [f64; 3] {
        [self.d, 0.0, 0.0]
    }

    fn cross_displacement(&self) -> [f64; 3] {
        [self.d, self.delta_x, 0.0]
    }
}

/// Polarization directions of the two spins, for the spin-dependent
/// pseudoscalar potential. Both must be unit vectors.
///
/// The default has both spins along the trap-separation axis; the actual
/// preparation is an experimental choice, so it stays configurable.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct SpinConfig {
    s1: [f64; 3],
    s2: [f64; 3],
}

impl SpinConfig {
    pub fn new(s1: [f64; 3], s2: [f64; 3]) -> Result<Self> {
        for (name, v) in [("s1", s1), ("s2", s2)] {
            let n = norm3(v);
            if !n.is_finite() || (n - 1.0).abs() > 1e-12 {
                return Err(Error::domain(format!(
                    "spin direction {name} must be a unit vector, |{name}| = {n}"
                )));
            }
        }
        Ok(SpinConfig { s1, s2 })
    }

    pub fn s1(&self) -> [f64; 3] {
        self.s1
    }

    pub fn s2(&self) -> [f64; 3] {
        self.s2
    }
}

impl Default for SpinConfig {
    /// Both spins polarized along the trap-separation axis.
    fn default() -> Self {
        SpinConfig {
            s1: [1.0, 0.0, 0.0],
            s2: [1.0, 0.0, 0.0],
        }
    }
}

/// The four interaction models.
///
/// * `Yukawa`: U(r) = α e^{−r/λ}/r with α in J·m.
/// * `ModifiedNewtonian`: U(r) = (G m²/r)(1 + α_g e^{−r/λ}), a Yukawa
///   correction of relative strength α_g to the gravitational attraction of
///   two masses m.
/// * `ScalarAlp`: scalar boson exchange between two fermions,
///   U(r) = −(g_S²/4π) ħc e^{−r/λ}/r with λ the boson's reduced Compton
///   wavelength; identical to `Yukawa` under α = −(g_S²/4π)ħc.
/// * `PseudoscalarAlp`: pseudoscalar exchange between two electrons, a
///   spin-dependent dipole-dipole form. The contact term proportional to
///   δ³(r) vanishes for separated traps and is dropped; evaluation at r = 0
///   is an error.
#[derive(Debug, Clone, PartialEq)]
pub enum PotentialModel {
    Yukawa {
        /// strength (J·m)
        alpha: f64,
        /// range (m)
        lambda: f64,
    },
    ModifiedNewtonian {
        /// relative strength of the Yukawa correction (dimensionless)
        alpha_g: f64,
        /// range (m)
        lambda: f64,
        /// mass of each particle (kg)
        mass: f64,
    },
    ScalarAlp {
        /// scalar coupling to the fermion (dimensionless)
        g_s: f64,
        /// boson mass (eV)
        m_phi_ev: f64,
    },
    PseudoscalarAlp {
        /// pseudoscalar coupling to the electron (dimensionless)
        g_p: f64,
        /// boson mass (eV)
        m_phi_ev: f64,
        spin: SpinConfig,
    },
}

impl PotentialModel {
    pub fn validate(&self) -> Result<()> {
        let check_pos = |name: &str, v: f64| -> Result<()> {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::domain(format!(
                    "{name} must be positive and finite, got {v}"
                )));
            }
            Ok(())
        };
        let check_finite = |name: &str, v: f64| -> Result<()> {
            if !v.is_finite() {
                return Err(Error::domain(format!("{name} must be finite, got {v}")));
            }
            Ok(())
        };
        match self {
            PotentialModel::Yukawa { alpha, lambda } => {
                check_finite("alpha", *alpha)?;
                check_pos("lambda", *lambda)
            }
            PotentialModel::ModifiedNewtonian {
                alpha_g,
                lambda,
                mass,
            } => {
                check_finite("alpha_g", *alpha_g)?;
                check_pos("lambda", *lambda)?;
                check_pos("mass", *mass)
            }
            PotentialModel::ScalarAlp { g_s, m_phi_ev } => {
                check_finite("g_s", *g_s)?;
                check_pos("m_phi_ev", *m_phi_ev)
            }
            PotentialModel::PseudoscalarAlp { g_p, m_phi_ev, .. } => {
                check_finite("g_p", *g_p)?;
                check_pos("m_phi_ev", *m_phi_ev)
            }
        }
    }

    /// The modified-Newtonian form assumes |α_g| < 1. A violation is worth
    /// reporting but not rejecting, since the inversion can legitimately
    /// land outside the regime.
    pub fn regime_warning(&self) -> Option<String> {
        match self {
            PotentialModel::ModifiedNewtonian { alpha_g, .. } if alpha_g.abs() >= 1.0 => {
                Some(format!(
                    "|alpha_g| = {} >= 1: outside the assumed perturbative regime",
                    alpha_g.abs()
                ))
            }
            _ => None,
        }
    }
}

fn norm3(v: [f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

fn dot3(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Potential energy (J) of the pair separated by `r_vec` (m).
pub fn potential_energy(model: &PotentialModel, r_vec: [f64; 3]) -> Result<f64> {
    model.validate()?;
    let r = norm3(r_vec);
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::domain(format!(
            "separation must be positive and finite, got |r| = {r}"
        )));
    }
    match model {
        PotentialModel::Yukawa { alpha, lambda } => Ok(alpha * (-r / lambda).exp() / r),
        PotentialModel::ModifiedNewtonian {
            alpha_g,
            lambda,
            mass,
        } => Ok(G * mass * mass / r * (1.0 + alpha_g * (-r / lambda).exp())),
        PotentialModel::ScalarAlp { g_s, m_phi_ev } => {
            let lambda = mass_ev_to_range_m(*m_phi_ev)?;
            let alpha = -(g_s * g_s / (4.0 * PI)) * HBAR * C;
            Ok(alpha * (-r / lambda).exp() / r)
        }
        PotentialModel::PseudoscalarAlp {
            g_p,
            m_phi_ev,
            spin,
        } => {
            let lambda = mass_ev_to_range_m(*m_phi_ev)?;
            let rhat = [r_vec[0] / r, r_vec[1] / r, r_vec[2] / r];
            // spin-1/2 expectation values for product polarized states:
            // <S1.S2> = (1/4) s1.s2, <(S1.r)(S2.r)> = (1/4)(s1.r)(s2.r)
            let ss = 0.25 * dot3(spin.s1, spin.s2);
            let srr = 0.25 * dot3(spin.s1, rhat) * dot3(spin.s2, rhat);
            // Natural-units masses restored via reduced Compton wavelengths:
            // the boson mass becomes 1/lambda and the electron-mass
            // denominator becomes (hbar/(m_e c))^2, with one overall hbar*c
            // to turn 1/length into energy.
            let prefactor =
                -g_p * g_p * HBAR.powi(3) * (-r / lambda).exp() / (4.0 * PI * M_ELECTRON * M_ELECTRON * C);
            let spin_dot_term = ss * (1.0 / (lambda * r * r) + 1.0 / (r * r * r));
            let tensor_term = srr
                * (1.0 / (lambda * lambda * r) + 3.0 / (lambda * r * r) + 3.0 / (r * r * r));
            Ok(prefactor * (spin_dot_term - tensor_term))
        }
    }
}

/// Branch phases of the parallel arrangement: the aligned pair at distance d
/// sets the global phase, and both cross pairs at sqrt(d² + Δx²) carry the
/// relative phase
///
/// ```text
/// phi_1 = phi_2 = (τ/ħ) [U(r_cross) − U(d)]
/// ```
///
/// For the spin-dependent model the two displacements have different
/// directions, so each branch is evaluated with its own r̂.
pub fn phase_pair(model: &PotentialModel, geom: &Geometry) -> Result<PhaseSet> {
    let u_aligned = potential_energy(model, geom.aligned_displacement())?;
    let u_cross = potential_energy(model, geom.cross_displacement())?;
    let scale = geom.tau / HBAR;
    PhaseSet::new(scale * u_aligned, scale * (u_cross - u_aligned), scale * (u_cross - u_aligned))
}

/// Ground-state width sqrt(ħ/(2mω)) of a harmonic trap of (angular)
/// frequency ω holding a particle of mass m.
pub fn ion_trap_delta_x(mass: f64, omega: f64) -> Result<f64> {
    if !(mass > 0.0) || !mass.is_finite() {
        return Err(Error::domain(format!(
            "trap particle mass must be positive and finite, got {mass}"
        )));
    }
    if !(omega > 0.0) || !omega.is_finite() {
        return Err(Error::domain(format!(
            "trap frequency must be positive and finite, got {omega}"
        )));
    }
    Ok((HBAR / (2.0 * mass * omega)).sqrt())
}
