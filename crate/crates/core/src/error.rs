//! Crate-wide error type.

use crate::material::ValidationReport;

/// Errors reported by the solver and its supporting kernels.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A modified Bessel kernel was called outside its domain.
    #[error("bessel kernel domain error: argument must be {requirement}, got {value}")]
    BesselDomain {
        requirement: &'static str,
        value: f64,
    },

    /// Material parameters violate one or more admissibility constraints.
    #[error("invalid material parameters:\n{0}")]
    InvalidMaterial(ValidationReport),

    /// Inversion of the homogenization relations is impossible for the
    /// given ratios (division by a non-positive modulus gap).
    #[error("homogenization inversion failed: {0}")]
    Homogenization(String),

    /// Shell geometry must satisfy 0 < r_i < r_o.
    #[error("invalid shell geometry: {0}")]
    Geometry(String),

    /// Boundary data must be finite.
    #[error("invalid boundary data: {0}")]
    BoundaryData(String),

    /// Evaluation radius outside the shell.
    #[error("radius {r} outside the shell [{r_inner}, {r_outer}]")]
    RadiusOutOfRange { r: f64, r_inner: f64, r_outer: f64 },

    /// The boundary-condition system is numerically singular.
    #[error("boundary system ill-conditioned (estimated condition number {estimate:.3e})")]
    IllConditioned { estimate: f64 },

    /// Deviation from the classical solution cannot be normalized.
    #[error(
        "deviation normalization requires a non-zero outer displacement; \
         renormalize by the inner displacement instead"
    )]
    ZeroNormalization,

    /// The finite-difference oracle could not produce a solution.
    #[error("finite-difference oracle failed: {0}")]
    OracleFailure(String),

    /// A sampling request was too small to be meaningful.
    #[error("invalid sample count: {0}")]
    SampleCount(String),
}

pub type Result<T> = std::result::Result<T, Error>;
