//! Two-qubit state construction, dephasing, partial transpose and the PPT
//! witness.
//!
//! Basis convention: the four joint states are ordered (↑↑, ↑↓, ↓↑, ↓↓), so
//! index `a = 2*q1 + q2` with q = 0 for ↑ and 1 for ↓. The partial transpose
//! acts on the second qubit. Any consistent choice gives identical spectra;
//! this one is fixed so matrix entries in tests are reproducible.
//!
//! The interaction leaves the aligned branches (↑↑, ↓↓) with a common phase
//! and tags each anti-aligned branch with an extra phase φ₁ or φ₂:
//!
//! ```text
//! |Ψ⟩ = (e^{iφ}/2) (|↑↑⟩ + e^{iφ₂}|↑↓⟩ + e^{iφ₁}|↓↑⟩ + |↓↓⟩)
//! ```
//!
//! Dephasing at rate γ over time τ damps every off-diagonal element of
//! ρ = |Ψ⟩⟨Ψ| by e^{−γτ} per mismatched qubit index.

use nalgebra::{Matrix4, SymmetricEigen, Vector4};
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Branch phases of the evolved two-particle state. `phi_global` multiplies
/// the whole state and never affects the density matrix; it is carried so
/// that callers can report the full phase content of a configuration. In the
/// parallel trap arrangement produced by this crate `phi_1 == phi_2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseSet {
    pub phi_global: f64,
    pub phi_1: f64,
    pub phi_2: f64,
}

impl PhaseSet {
    pub fn new(phi_global: f64, phi_1: f64, phi_2: f64) -> Result<Self> {
        if !(phi_global.is_finite() && phi_1.is_finite() && phi_2.is_finite()) {
            return Err(Error::domain(format!(
                "phases must be finite, got ({phi_global}, {phi_1}, {phi_2})"
            )));
        }
        Ok(PhaseSet {
            phi_global,
            phi_1,
            phi_2,
        })
    }

    /// Phases with `phi_1 = phi_2 = phi` and no global phase.
    pub fn symmetric(phi: f64) -> Result<Self> {
        PhaseSet::new(0.0, phi, phi)
    }

    /// (φ₁ + φ₂)/2, the accumulated entanglement phase ω_ent·τ.
    pub fn half_sum(&self) -> f64 {
        0.5 * (self.phi_1 + self.phi_2)
    }
}

/// 4×4 density matrix of the dephased two-qubit state. Hermitian, unit
/// trace and positive semidefinite by construction.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoQubitDensityMatrix {
    entries: Matrix4<Complex64>,
}

impl TwoQubitDensityMatrix {
    /// Wraps a matrix without re-validating; for internal plumbing where the
    /// invariants are known to hold (e.g. re-wrapping a partial transpose).
    pub(crate) fn from_matrix_unchecked(entries: Matrix4<Complex64>) -> Self {
        TwoQubitDensityMatrix { entries }
    }

    pub fn entries(&self) -> &Matrix4<Complex64> {
        &self.entries
    }

    pub fn trace(&self) -> f64 {
        self.entries.trace().re
    }

    /// Largest absolute deviation from Hermiticity, for diagnostics.
    pub fn hermiticity_defect(&self) -> f64 {
        let adj = self.entries.adjoint();
        (self.entries - adj).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Witness evaluation of one configuration: the closed-form value, the
/// numeric minimum eigenvalue of the partial transpose, and the negativity.
///
/// `closed_form_w` is the small-phase closed form as written; it equals the
/// most negative eigenvalue only on the branch sin(ω_ent·τ) ≤ 0 and can be
/// positive otherwise. `numeric_min_pt_eigenvalue` is the unambiguous
/// entanglement criterion for two qubits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WitnessEvaluation {
    pub closed_form_w: f64,
    pub numeric_min_pt_eigenvalue: f64,
    pub negativity: f64,
    pub gamma_tau: f64,
    pub omega_ent_tau: f64,
    /// True iff γτ < 1 and |ω_ent·τ| < 1, the regime where the closed form
    /// tracks the observable.
    pub valid_approximation: bool,
}

fn check_rate_time(gamma: f64, tau: f64) -> Result<()> {
    if !(gamma >= 0.0) || !gamma.is_finite() {
        return Err(Error::domain(format!(
            "dephasing rate must be finite and >= 0, got {gamma}"
        )));
    }
    if !(tau >= 0.0) || !tau.is_finite() {
        return Err(Error::domain(format!(
            "time must be finite and >= 0, got {tau}"
        )));
    }
    Ok(())
}

/// Amplitudes (e^{iφ}/2)(1, e^{iφ₂}, e^{iφ₁}, 1) in the (↑↑, ↑↓, ↓↑, ↓↓)
/// basis. Unit norm for any phases.
pub fn build_state(phases: &PhaseSet) -> Result<Vector4<Complex64>> {
    // PhaseSet construction already guarantees finiteness; re-validate so
    // hand-built structs cannot sneak NaNs into the pipeline.
    let p = PhaseSet::new(phases.phi_global, phases.phi_1, phases.phi_2)?;
    let g = Complex64::from_polar(0.5, p.phi_global);
    Ok(Vector4::new(
        g,
        g * Complex64::from_polar(1.0, p.phi_2),
        g * Complex64::from_polar(1.0, p.phi_1),
        g,
    ))
}

/// ρ = |Ψ⟩⟨Ψ| with each element ⟨ij|ρ|i'j'⟩ damped by e^{−γτ·n}, where n is
/// the number of qubit indices that differ between bra and ket. Diagonal
/// elements (n = 0) are untouched, so the trace stays exactly 1.
pub fn density_with_dephasing(
    phases: &PhaseSet,
    gamma: f64,
    tau: f64,
) -> Result<TwoQubitDensityMatrix> {
    check_rate_time(gamma, tau)?;
    let amps = build_state(phases)?;
    let gt = gamma * tau;
    // e^{-gt*n} for n = 0, 1, 2 mismatched indices
    let damp = [1.0, (-gt).exp(), (-2.0 * gt).exp()];
    let mut rho = Matrix4::zeros();
    for a in 0..4 {
        for b in 0..4 {
            let n = ((a >> 1) ^ (b >> 1)) + ((a ^ b) & 1);
            rho[(a, b)] = amps[a] * amps[b].conj() * damp[n];
        }
    }
    Ok(TwoQubitDensityMatrix { entries: rho })
}

/// Transpose over the second-qubit index:
/// ρ^{T₂}[(q1,q2),(p1,p2)] = ρ[(q1,p2),(p1,q2)].
pub fn partial_transpose_second(rho: &TwoQubitDensityMatrix) -> Matrix4<Complex64> {
    let r = &rho.entries;
    let mut out = Matrix4::zeros();
    for q1 in 0..2 {
        for q2 in 0..2 {
            for p1 in 0..2 {
                for p2 in 0..2 {
                    out[(2 * q1 + q2, 2 * p1 + p2)] = r[(2 * q1 + p2, 2 * p1 + q2)];
                }
            }
        }
    }
    out
}

/// Eigenvalues of a Hermitian 4×4 matrix, sorted ascending.
pub fn hermitian_eigenvalues(m: &Matrix4<Complex64>) -> [f64; 4] {
    let eig = SymmetricEigen::new(*m);
    let mut vals = [
        eig.eigenvalues[0],
        eig.eigenvalues[1],
        eig.eigenvalues[2],
        eig.eigenvalues[3],
    ];
    vals.sort_by(|a, b| a.total_cmp(b));
    vals
}

/// Closed-form eigenvalues of the partially transposed pure state (no
/// dephasing), in the order (+s, −s, ½+c, ½−c) with s = ½sin θ,
/// c = ½cos θ and θ = (φ₁+φ₂)/2. They sum to 1.
pub fn pt_eigenvalues_closed_form(phases: &PhaseSet) -> [f64; 4] {
    let theta = phases.half_sum();
    let s = 0.5 * theta.sin();
    let c = 0.5 * theta.cos();
    [s, -s, 0.5 + c, 0.5 - c]
}

/// Negativity of the pure state: ½|sin((φ₁+φ₂)/2)|, in [0, ½].
pub fn negativity_closed_form(phases: &PhaseSet) -> f64 {
    0.5 * phases.half_sum().sin().abs()
}

/// Closed-form dephased witness expectation in terms of the dimensionless
/// products ω_ent·τ and γτ:
///
/// ```text
/// ⟨W⟩ = 1/4 − (1/4) e^{−γτ} [ e^{−γτ} − 2 sin(ω_ent·τ) ]
/// ```
///
/// At γ = 0 this reduces to ½sin(ω_ent·τ), the signed closed-form
/// eigenvalue; it is the most negative eigenvalue on the sin ≤ 0 branch.
pub fn witness_from_products(omega_ent_tau: f64, gamma_tau: f64) -> f64 {
    let e = (-gamma_tau).exp();
    0.25 - 0.25 * e * (e - 2.0 * omega_ent_tau.sin())
}

/// [`witness_from_products`] with dimensional inputs (rad/s, Hz, s).
pub fn witness_closed_form(omega_ent: f64, gamma: f64, tau: f64) -> Result<f64> {
    if !omega_ent.is_finite() {
        return Err(Error::domain(format!(
            "entanglement frequency must be finite, got {omega_ent}"
        )));
    }
    check_rate_time(gamma, tau)?;
    Ok(witness_from_products(omega_ent * tau, gamma * tau))
}

/// Full evaluation of one configuration: closed form, numeric minimum
/// eigenvalue of the partial transpose, negativity and validity flags.
pub fn evaluate_witness(phases: &PhaseSet, gamma: f64, tau: f64) -> Result<WitnessEvaluation> {
    check_rate_time(gamma, tau)?;
    let omega_ent_tau = phases.half_sum();
    let gamma_tau = gamma * tau;

    let rho = density_with_dephasing(phases, gamma, tau)?;
    let pt = partial_transpose_second(&rho);
    let eigs = hermitian_eigenvalues(&pt);
    let negativity: f64 = eigs.iter().filter(|&&l| l < 0.0).map(|l| -l).sum();

    Ok(WitnessEvaluation {
        closed_form_w: witness_from_products(omega_ent_tau, gamma_tau),
        numeric_min_pt_eigenvalue: eigs[0],
        negativity,
        gamma_tau,
        omega_ent_tau,
        valid_approximation: gamma_tau < 1.0 && omega_ent_tau.abs() < 1.0,
    })
}
