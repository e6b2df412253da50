//! Canned scan configurations for the standard experimental regimes.
//!
//! Two families:
//!
//! * Massive neutral nanoparticles (`Fig2`, `Fig3`): m = 1e-14 kg,
//!   d = 50 μm, Δx = 10 μm, τ = 1 s, sweeping the Yukawa range λ.
//! * Trapped ions (`Fig4Near`, `Fig4Far`, `Fig5`): τ = 1 μs, γ = 1e3 Hz,
//!   Δx = sqrt(ħ/2mω) for m = 1e-27 kg and ω = 1e5 (angular) Hz, sweeping
//!   the boson mass m_φ. `Fig4Near`/`Fig5` sit at d = 500 nm, `Fig4Far` at
//!   d = 50 μm.
//!
//! Default witness target is W = −0.1; grid edges cover the decades the
//! constraint curves span. Every parameter can be overridden downstream, so
//! the presets are starting points, not policy. In particular the
//! pseudoscalar regime (`Fig5`) is also interesting at γ = 1e-3 Hz; pass a
//! different rate to explore it.

use crate::inversion::WitnessTarget;
use crate::potentials::{ion_trap_delta_x, Geometry, SpinConfig};
use crate::scan::{GridSpec, ScanModel, ScanRequest};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Fig2,
    Fig3,
    Fig4Near,
    Fig4Far,
    Fig5,
}

impl Preset {
    pub const ALL: [Preset; 5] = [
        Preset::Fig2,
        Preset::Fig3,
        Preset::Fig4Near,
        Preset::Fig4Far,
        Preset::Fig5,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Preset::Fig2 => "fig2",
            Preset::Fig3 => "fig3",
            Preset::Fig4Near => "fig4-near",
            Preset::Fig4Far => "fig4-far",
            Preset::Fig5 => "fig5",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Preset::ALL.iter().copied().find(|p| p.name() == name)
    }

    pub fn request(&self) -> ScanRequest {
        // all preset parameters are fixed and known-valid
        let massive_geometry = || Geometry::new(50e-6, 10e-6, 1.0).unwrap();
        let ion_dx = ion_trap_delta_x(1e-27, 1e5).unwrap();
        let ion_geometry = |d: f64| Geometry::new(d, ion_dx, 1e-6).unwrap();
        match self {
            Preset::Fig2 => ScanRequest {
                model: ScanModel::Yukawa,
                geometry: massive_geometry(),
                target: WitnessTarget::new(-0.1, 1e-1, 1.0).unwrap(),
                grid: GridSpec::new(1e-6, 1e-2, 200).unwrap(),
            },
            Preset::Fig3 => ScanRequest {
                model: ScanModel::ModifiedNewtonian { mass: 1e-14 },
                geometry: massive_geometry(),
                target: WitnessTarget::new(-0.1, 1e-1, 1.0).unwrap(),
                grid: GridSpec::new(1e-6, 1e-2, 200).unwrap(),
            },
            Preset::Fig4Near => ScanRequest {
                model: ScanModel::ScalarAlp,
                geometry: ion_geometry(500e-9),
                target: WitnessTarget::new(-0.1, 1e3, 1e-6).unwrap(),
                grid: GridSpec::new(1e-15, 1e1, 200).unwrap(),
            },
            Preset::Fig4Far => ScanRequest {
                model: ScanModel::ScalarAlp,
                geometry: ion_geometry(50e-6),
                target: WitnessTarget::new(-0.1, 1e3, 1e-6).unwrap(),
                grid: GridSpec::new(1e-15, 1e1, 200).unwrap(),
            },
            Preset::Fig5 => ScanRequest {
                model: ScanModel::PseudoscalarAlp {
                    spin: SpinConfig::default(),
                },
                geometry: ion_geometry(500e-9),
                target: WitnessTarget::new(-0.1, 1e3, 1e-6).unwrap(),
                grid: GridSpec::new(1e-15, 1e1, 200).unwrap(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for p in Preset::ALL {
            assert_eq!(Preset::from_name(p.name()), Some(p));
        }
        assert_eq!(Preset::from_name("fig9"), None);
    }

    #[test]
    fn all_presets_validate() {
        for p in Preset::ALL {
            let req = p.request();
            req.validate().unwrap();
            assert_eq!(req.grid.points, 200);
        }
    }

    #[test]
    fn ion_presets_use_ground_state_width() {
        let req = Preset::Fig4Near.request();
        approx::assert_relative_eq!(
            req.geometry.delta_x,
            7.261445506922158e-7,
            max_relative = 1e-12
        );
    }
}
