//! Entanglement-witness constraint pipeline for screened two-body potentials.
//!
//! Two particles, each held in a spatial superposition of two locations, pick
//! up branch-dependent phases from whatever potential couples them. The
//! resulting two-qubit state is entangled whenever the cross-branch phase
//! differs from the aligned-branch phase, and the entanglement is certified by
//! the PPT witness: the most negative eigenvalue of the partially transposed
//! density matrix.
//!
//! This crate implements that pipeline end to end:
//!
//! * [`qcore`] builds the two-qubit state, applies exponential dephasing,
//!   and evaluates the witness both in closed form and by numeric
//!   eigendecomposition of the partial transpose.
//! * [`potentials`] evaluates four interaction models (bare Yukawa,
//!   Yukawa-modified Newtonian gravity, scalar and pseudoscalar boson
//!   exchange) and the phases they imprint on a given trap geometry.
//! * [`inversion`] runs the pipeline backwards: given a target witness value
//!   and a decoherence rate, it solves for the coupling strength of each
//!   model at a given interaction range.
//! * [`scan`] sweeps the inversion over log-spaced range/mass grids to
//!   produce coupling-vs-range constraint curves, with per-point validity
//!   annotation and a built-in round-trip self check.
//! * [`bounds`] loads externally published exclusion limits and classifies
//!   curve samples against them.
//! * [`presets`] holds the canned scan configurations used by the CLI.
//! * [`validate`] is a runtime property suite covering the invariants of all
//!   modules; the CLI exposes it as `witness validate`.
//!
//! All quantities are SI internally; boson masses in eV are converted to
//! ranges at the API boundary (see [`constants`]).

pub mod bounds;
pub mod constants;
pub mod error;
pub mod inversion;
pub mod potentials;
pub mod presets;
pub mod qcore;
pub mod scan;
pub mod validate;

pub use error::{Error, Result};
