//! Error type shared across the crate.
//!
//! Shape mismatches between matrices are programmer errors and panic via
//! `assert!`, mirroring the convention of the underlying linear-algebra
//! crate. Everything that can fail for numerical or user-input reasons
//! (singular solves, boundary proximity, invalid parameters, unknown
//! experiment names) goes through [`Error`].

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes of the numerical routines and the experiment harness.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is outside its documented range.
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    /// A linear solve or inversion hit a (numerically) singular matrix.
    #[error("singular matrix: {0}")]
    Singular(String),

    /// An evaluation point is too close to the boundary for the requested
    /// finite-difference stencil to stay inside the domain.
    #[error("point too close to the boundary: h(z,z) = {h:.3e} < {min:.3e}")]
    BoundaryProximity { h: f64, min: f64 },

    /// The radial coordinates collide with a singularity of the radial
    /// operator (a zero coordinate or two coordinates of equal modulus).
    #[error("singular radial configuration: {0}")]
    SingularRadialConfig(String),

    /// A matrix claimed to lie in SU(r, r+b) fails the defining identity.
    #[error("pseudo-unitarity violated: residual {0:.3e}")]
    NotPseudoUnitary(f64),

    /// A matrix claimed to lie on the Shilov boundary fails u·u* = I.
    #[error("not a Shilov boundary point: Gram residual {0:.3e}")]
    NotShilov(f64),

    /// An experiment name not present in the registry.
    #[error("unregistered experiment `{0}`")]
    UnknownExperiment(String),

    /// A documented precondition of an experiment or transform was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Report serialization input that cannot be parsed back.
    #[error("malformed report: {0}")]
    MalformedReport(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
