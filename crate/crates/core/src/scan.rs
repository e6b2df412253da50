//! Log-spaced parameter sweeps producing coupling-vs-range constraint
//! curves, plus the round-trip self check that gates them.
//!
//! Scans are pure functions of their request: identical inputs give
//! bit-identical curves regardless of evaluation order. Per-point inversion
//! failures (unreachable witness, sign inconsistency, underflowed branch
//! factor) are recorded in-band so a curve can continue across gaps.

use serde::Serialize;

use crate::bounds::{AbscissaKind, CouplingKind};
use crate::error::{Error, Result};
use crate::inversion::{
    alpha_from_witness, alpha_g_from_witness, g_p_from_witness, g_s_from_witness,
    omega_ent_tau_from_witness, WitnessTarget,
};
use crate::potentials::{phase_pair, Geometry, PotentialModel, SpinConfig};
use crate::qcore::witness_from_products;

/// Which model a scan sweeps, with its model-specific parameters. The grid
/// abscissa is the Yukawa range λ (m) for the first two and the boson mass
/// m_φ (eV) for the ALP models.
#[derive(Debug, Clone, PartialEq)]
pub enum ScanModel {
    Yukawa,
    ModifiedNewtonian { mass: f64 },
    ScalarAlp,
    PseudoscalarAlp { spin: SpinConfig },
}

impl ScanModel {
    pub fn name(&self) -> &'static str {
        match self {
            ScanModel::Yukawa => "yukawa",
            ScanModel::ModifiedNewtonian { .. } => "modified_newtonian",
            ScanModel::ScalarAlp => "scalar_alp",
            ScanModel::PseudoscalarAlp { .. } => "pseudoscalar_alp",
        }
    }

    pub fn abscissa_kind(&self) -> AbscissaKind {
        match self {
            ScanModel::Yukawa | ScanModel::ModifiedNewtonian { .. } => AbscissaKind::RangeM,
            ScanModel::ScalarAlp | ScanModel::PseudoscalarAlp { .. } => AbscissaKind::MassEv,
        }
    }

    pub fn coupling_kind(&self) -> CouplingKind {
        match self {
            ScanModel::Yukawa => CouplingKind::AlphaJM,
            ScanModel::ModifiedNewtonian { .. } => CouplingKind::AlphaG,
            ScanModel::ScalarAlp => CouplingKind::GS,
            ScanModel::PseudoscalarAlp { .. } => CouplingKind::GP,
        }
    }

    /// Reassembles the potential model for one curve sample.
    pub fn to_potential(&self, abscissa: f64, coupling: f64) -> PotentialModel {
        match self {
            ScanModel::Yukawa => PotentialModel::Yukawa {
                alpha: coupling,
                lambda: abscissa,
            },
            ScanModel::ModifiedNewtonian { mass } => PotentialModel::ModifiedNewtonian {
                alpha_g: coupling,
                lambda: abscissa,
                mass: *mass,
            },
            ScanModel::ScalarAlp => PotentialModel::ScalarAlp {
                g_s: coupling,
                m_phi_ev: abscissa,
            },
            ScanModel::PseudoscalarAlp { spin } => PotentialModel::PseudoscalarAlp {
                g_p: coupling,
                m_phi_ev: abscissa,
                spin: *spin,
            },
        }
    }
}

/// Log-spaced grid over the abscissa, endpoints included exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl GridSpec {
    pub fn new(min: f64, max: f64, points: usize) -> Result<Self> {
        if !(min > 0.0) || !min.is_finite() || !max.is_finite() || min >= max {
            return Err(Error::domain(format!(
                "grid needs 0 < min < max, got [{min}, {max}]"
            )));
        }
        if points < 2 {
            return Err(Error::domain(format!(
                "grid needs at least 2 points, got {points}"
            )));
        }
        Ok(GridSpec { min, max, points })
    }

    pub fn log_points(&self) -> Vec<f64> {
        let ln_min = self.min.ln();
        let step = (self.max.ln() - ln_min) / (self.points - 1) as f64;
        (0..self.points)
            .map(|i| {
                if i == 0 {
                    self.min
                } else if i == self.points - 1 {
                    self.max
                } else {
                    (ln_min + step * i as f64).exp()
                }
            })
            .collect()
    }
}

/// Everything one scan needs.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanRequest {
    pub model: ScanModel,
    pub geometry: Geometry,
    pub target: WitnessTarget,
    pub grid: GridSpec,
}

impl ScanRequest {
    pub fn validate(&self) -> Result<()> {
        // The typed constructors already validated their fields; re-run the
        // cross-field checks for requests assembled literally.
        Geometry::new(self.geometry.d, self.geometry.delta_x, self.geometry.tau)?;
        WitnessTarget::new(self.target.w, self.target.gamma, self.target.tau)?;
        GridSpec::new(self.grid.min, self.grid.max, self.grid.points)?;
        if let ScanModel::ModifiedNewtonian { mass } = self.model {
            if !(mass > 0.0) || !mass.is_finite() {
                return Err(Error::domain(format!(
                    "particle mass must be positive and finite, got {mass} kg"
                )));
            }
        }
        if self.geometry.tau != self.target.tau {
            return Err(Error::domain(format!(
                "geometry and target disagree on the interaction time: {} s vs {} s",
                self.geometry.tau, self.target.tau
            )));
        }
        Ok(())
    }
}

/// Why a single grid point failed to invert.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PointErrorKind {
    UnreachableWitness,
    SignInconsistentWitness,
    DegenerateGeometry,
    Domain,
}

impl PointErrorKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            PointErrorKind::UnreachableWitness => "unreachable_witness",
            PointErrorKind::SignInconsistentWitness => "sign_inconsistent_witness",
            PointErrorKind::DegenerateGeometry => "degenerate_geometry",
            PointErrorKind::Domain => "domain",
        }
    }

    fn from_error(e: &Error) -> Self {
        match e {
            Error::UnreachableWitness { .. } => PointErrorKind::UnreachableWitness,
            Error::SignInconsistentWitness { .. } => PointErrorKind::SignInconsistentWitness,
            Error::DegenerateGeometry { .. } => PointErrorKind::DegenerateGeometry,
            _ => PointErrorKind::Domain,
        }
    }
}

/// One grid point: either a finite coupling or an error kind, never neither.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CurveSample {
    /// λ (m) or m_φ (eV) depending on the model
    pub abscissa: f64,
    pub coupling: Option<f64>,
    pub omega_ent_tau: Option<f64>,
    /// γτ < 1 and |ω_ent·τ| < 1 and the point inverted successfully
    pub valid: bool,
    pub error_kind: Option<PointErrorKind>,
}

/// Ordered scan output plus the request that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstraintCurve {
    pub request: ScanRequest,
    pub samples: Vec<CurveSample>,
}

/// Sweeps the grid, inverting the target at every point. Fails only on a
/// malformed request; per-point failures land in the samples.
pub fn run_scan(request: &ScanRequest) -> Result<ConstraintCurve> {
    request.validate()?;
    // The phase solve is abscissa-independent; do it once so every errored
    // point still reports the target's omega when it exists.
    let omega_tau = omega_ent_tau_from_witness(&request.target).ok();
    let samples = request
        .grid
        .log_points()
        .into_iter()
        .map(|x| {
            let inverted = match &request.model {
                ScanModel::Yukawa => alpha_from_witness(&request.target, x, &request.geometry),
                ScanModel::ModifiedNewtonian { mass } => {
                    alpha_g_from_witness(&request.target, x, *mass, &request.geometry)
                }
                ScanModel::ScalarAlp => g_s_from_witness(&request.target, x, &request.geometry),
                ScanModel::PseudoscalarAlp { spin } => {
                    g_p_from_witness(&request.target, x, spin, &request.geometry)
                }
            };
            match inverted {
                Ok(c) => CurveSample {
                    abscissa: x,
                    coupling: Some(c.coupling),
                    omega_ent_tau: Some(c.omega_ent_tau),
                    valid: c.valid_approximation,
                    error_kind: None,
                },
                Err(e) => CurveSample {
                    abscissa: x,
                    coupling: None,
                    omega_ent_tau: omega_tau,
                    valid: false,
                    error_kind: Some(PointErrorKind::from_error(&e)),
                },
            }
        })
        .collect();
    Ok(ConstraintCurve {
        request: request.clone(),
        samples,
    })
}

/// Outcome of [`round_trip_check`]. `checked == 0` marks a curve with no
/// valid samples to verify.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RoundTripReport {
    pub max_rel_error: f64,
    pub checked: usize,
    pub skipped: usize,
}

impl RoundTripReport {
    pub fn is_empty(&self) -> bool {
        self.checked == 0
    }
}

/// Re-derives the witness from every valid sample and reports the largest
/// relative deviation from the target.
///
/// The forward evaluation folds the phase onto the branch the closed form
/// parametrizes: the observable minimum eigenvalue depends on the phase only
/// through its magnitude (conjugating the state flips the phase sign without
/// touching the spectrum), so an attractive potential's positive phase maps
/// to −|ω_ent·τ| before comparison.
pub fn round_trip_check(curve: &ConstraintCurve, request: &ScanRequest) -> Result<RoundTripReport> {
    if curve.request != *request {
        return Err(Error::RequestMismatch);
    }
    let gamma_tau = request.target.gamma_tau();
    let mut max_rel: f64 = 0.0;
    let mut checked = 0;
    let mut skipped = 0;
    for sample in &curve.samples {
        let coupling = match (sample.valid, sample.coupling) {
            (true, Some(c)) => c,
            _ => {
                skipped += 1;
                continue;
            }
        };
        let model = request.model.to_potential(sample.abscissa, coupling);
        let phases = phase_pair(&model, &request.geometry)?;
        let folded = -phases.half_sum().abs();
        let w = witness_from_products(folded, gamma_tau);
        let rel = if request.target.w == 0.0 {
            (w - request.target.w).abs()
        } else {
            ((w - request.target.w) / request.target.w).abs()
        };
        max_rel = max_rel.max(rel);
        checked += 1;
    }
    Ok(RoundTripReport {
        max_rel_error: max_rel,
        checked,
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn yukawa_request(w: f64, gamma: f64, points: usize) -> ScanRequest {
        ScanRequest {
            model: ScanModel::Yukawa,
            geometry: Geometry::new(50e-6, 10e-6, 1.0).unwrap(),
            target: WitnessTarget::new(w, gamma, 1.0).unwrap(),
            grid: GridSpec::new(1e-6, 1e-2, points).unwrap(),
        }
    }

    #[test]
    fn grid_endpoints_exact_and_monotone() {
        let g = GridSpec::new(1e-6, 1e-2, 200).unwrap();
        let pts = g.log_points();
        assert_eq!(pts.len(), 200);
        assert_eq!(pts[0], 1e-6);
        assert_eq!(pts[199], 1e-2);
        for w in pts.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn grid_validation() {
        assert!(GridSpec::new(1e-2, 1e-6, 10).is_err());
        assert!(GridSpec::new(0.0, 1.0, 10).is_err());
        assert!(GridSpec::new(1e-6, 1e-2, 1).is_err());
        assert!(GridSpec::new(1e-6, 1e-2, 2).is_ok());
    }

    #[test]
    fn zero_witness_gives_zero_couplings() {
        let req = yukawa_request(0.0, 0.0, 16);
        let curve = run_scan(&req).unwrap();
        assert!(curve.samples.iter().all(|s| s.coupling == Some(0.0)));
    }

    #[test]
    fn scan_round_trips() {
        let req = yukawa_request(-0.1, 0.1, 40);
        let curve = run_scan(&req).unwrap();
        assert_eq!(curve.samples.len(), 40);
        assert!(curve.samples.iter().all(|s| s.valid && s.coupling.is_some()));
        let report = round_trip_check(&curve, &req).unwrap();
        assert_eq!(report.checked, 40);
        assert!(
            report.max_rel_error <= 1e-9,
            "round trip error {}",
            report.max_rel_error
        );
    }

    #[test]
    fn smaller_gamma_means_smaller_coupling_pointwise() {
        let strong = run_scan(&yukawa_request(-0.1, 1e-1, 50)).unwrap();
        let medium = run_scan(&yukawa_request(-0.1, 1e-2, 50)).unwrap();
        let weak = run_scan(&yukawa_request(-0.1, 1e-3, 50)).unwrap();
        for ((a, b), c) in strong
            .samples
            .iter()
            .zip(medium.samples.iter())
            .zip(weak.samples.iter())
        {
            let (a, b, c) = (a.coupling.unwrap(), b.coupling.unwrap(), c.coupling.unwrap());
            assert!(a > b && b > c, "dephasing must raise the required coupling");
        }
    }

    #[test]
    fn scan_is_deterministic() {
        let req = yukawa_request(-0.05, 0.02, 64);
        let a = run_scan(&req).unwrap();
        let b = run_scan(&req).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unreachable_witness_recorded_in_band() {
        let req = yukawa_request(-0.7, 0.0, 8);
        let curve = run_scan(&req).unwrap();
        assert_eq!(curve.samples.len(), 8);
        for s in &curve.samples {
            assert_eq!(s.error_kind, Some(PointErrorKind::UnreachableWitness));
            assert!(s.coupling.is_none());
            assert!(!s.valid);
        }
        let report = round_trip_check(&curve, &req).unwrap();
        assert!(report.is_empty());
        assert_eq!(report.max_rel_error, 0.0);
    }

    #[test]
    fn degenerate_points_do_not_stop_the_scan() {
        // ranges far below the separation underflow the branch factor
        let req = ScanRequest {
            grid: GridSpec::new(1e-9, 1e-2, 24).unwrap(),
            ..yukawa_request(-0.1, 0.1, 2)
        };
        let curve = run_scan(&req).unwrap();
        let degenerate: Vec<_> = curve
            .samples
            .iter()
            .filter(|s| s.error_kind == Some(PointErrorKind::DegenerateGeometry))
            .collect();
        assert!(!degenerate.is_empty());
        assert!(curve.samples.last().unwrap().coupling.is_some());
        // errored points still carry the solvable omega
        assert!(degenerate.iter().all(|s| s.omega_ent_tau.is_some()));
    }

    #[test]
    fn round_trip_detects_tampering() {
        let req = yukawa_request(-0.1, 0.1, 20);
        let mut curve = run_scan(&req).unwrap();
        for s in &mut curve.samples {
            s.coupling = s.coupling.map(|c| c * 1.01);
        }
        let report = round_trip_check(&curve, &req).unwrap();
        assert!(
            report.max_rel_error > 1e-3 && report.max_rel_error < 1e-1,
            "1% coupling tampering should surface at the 1e-2 scale, got {}",
            report.max_rel_error
        );
    }

    #[test]
    fn round_trip_rejects_foreign_request() {
        let req = yukawa_request(-0.1, 0.1, 10);
        let other = yukawa_request(-0.1, 0.2, 10);
        let curve = run_scan(&req).unwrap();
        assert!(matches!(
            round_trip_check(&curve, &other),
            Err(Error::RequestMismatch)
        ));
    }

    #[test]
    fn request_rejects_inconsistent_times() {
        let mut req = yukawa_request(-0.1, 0.1, 10);
        req.target = WitnessTarget::new(-0.1, 0.1, 2.0).unwrap();
        assert!(req.validate().is_err());
    }

    #[test]
    fn scalar_scan_round_trips_despite_attraction() {
        // the scalar model's phase has the opposite sign to the solved
        // omega; the fold in round_trip_check must absorb it
        let dx = crate::potentials::ion_trap_delta_x(1e-27, 1e5).unwrap();
        let req = ScanRequest {
            model: ScanModel::ScalarAlp,
            geometry: Geometry::new(500e-9, dx, 1e-6).unwrap(),
            target: WitnessTarget::new(-0.1, 1e3, 1e-6).unwrap(),
            grid: GridSpec::new(1e-15, 1e1, 30).unwrap(),
        };
        let curve = run_scan(&req).unwrap();
        let report = round_trip_check(&curve, &req).unwrap();
        assert!(report.checked > 0);
        assert!(report.max_rel_error <= 1e-9, "{}", report.max_rel_error);
    }

    #[test]
    fn yukawa_plateau_at_long_range() {
        use crate::constants::HBAR;
        let req = yukawa_request(-0.1, 0.1, 2);
        let geom = req.geometry;
        let rc = geom.r_cross();
        let inverted =
            crate::inversion::alpha_from_witness(&req.target, 100.0 * rc, &geom).unwrap();
        let plateau = HBAR * (inverted.omega_ent_tau / geom.tau) / (1.0 / rc - 1.0 / geom.d);
        assert_relative_eq!(inverted.coupling, plateau, max_relative = 1e-3);
    }
}
