//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input violates a precondition (non-finite, wrong sign, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// No physical entanglement frequency produces the requested witness
    /// value at this decoherence level: the arcsine argument left [-1, 1].
    #[error(
        "unreachable witness: arcsin argument {argument} is outside [-1, 1] \
         (W = {witness}, gamma*tau = {gamma_tau})"
    )]
    UnreachableWitness {
        witness: f64,
        gamma_tau: f64,
        argument: f64,
    },

    /// The requested witness value has the wrong sign for the potential's
    /// fixed attraction/repulsion character, so the squared coupling would
    /// be negative.
    #[error("sign-inconsistent witness: squared coupling {coupling_squared:e} is negative")]
    SignInconsistentWitness { coupling_squared: f64 },

    /// The branch-geometry factor underflowed to (numerically) zero, so no
    /// finite coupling reproduces the target. Happens when the interaction
    /// range is far below the trap separation.
    #[error("degenerate geometry: branch factor {factor:e} cannot be inverted")]
    DegenerateGeometry { factor: f64 },

    /// A data file failed to parse; `line` is 1-based.
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },

    /// Curve and exclusion region disagree on axis or coupling kind.
    #[error("kind mismatch: curve is ({curve_abscissa}, {curve_coupling}) but region \"{region}\" is ({region_abscissa}, {region_coupling})")]
    KindMismatch {
        curve_abscissa: String,
        curve_coupling: String,
        region: String,
        region_abscissa: String,
        region_coupling: String,
    },

    /// A curve was checked against a request it was not produced from.
    #[error("request does not match the one the curve was produced from")]
    RequestMismatch,

    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
