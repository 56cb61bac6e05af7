//! Exact elastostatics of long cylindrical shells made of
//! microstructured material, modeled as an isotropic relaxed
//! micromorphic continuum, together with the machinery to verify the
//! closed form independently.
//!
//! The crate provides:
//!
//! * [`bessel`] — the four modified Bessel kernels (orders 0 and 1, both
//!   kinds) with exponentially scaled variants and a 1e-12 accuracy
//!   contract;
//! * [`material`] — validated moduli of the relaxed micromorphic solid,
//!   built from raw values or from the dimensionless ratios
//!   `(G1, G2, G3)`, plus the strain-energy density;
//! * [`solver`] — the closed-form solution: derived coefficients, the
//!   4x4 boundary system solved with overflow-safe scaled Bessel
//!   columns, and field evaluation on arbitrary radii;
//! * [`classical`] — the classical plane-strain annulus displacement
//!   under the same boundary data and the normalized deviation `delta`;
//! * [`verify`] — strong-form residual checks on numerically
//!   differentiated fields, a from-scratch finite-difference boundary
//!   value solver, and energy quadratures;
//! * [`presets`] — the parameter sets of the parametric studies.
//!
//! All numerics are generic over the scalar type through [`Real`]
//! (`f32` or `f64`); the concrete `f64` aliases below are the types the
//! command-line tool works with.

pub mod bessel;
pub mod classical;
pub mod error;
pub mod linalg;
pub mod material;
pub mod presets;
pub mod scalar;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Real;

/// `f64` instantiations of the main public types.
pub type MaterialParameters = material::MaterialParameters<f64>;
pub type DimensionlessSet = material::DimensionlessSet<f64>;
pub type ShellGeometry = solver::ShellGeometry<f64>;
pub type BoundaryData = solver::BoundaryData<f64>;
pub type CoefficientSet = solver::CoefficientSet<f64>;
pub type DerivedCoefficients = solver::DerivedCoefficients<f64>;
pub type FieldSample = solver::FieldSample<f64>;
pub type RadialProfile = solver::RadialProfile<f64>;
pub type ClosedFormSolution = solver::ClosedFormSolution<f64>;
pub type ClassicalCoefficients = classical::ClassicalCoefficients<f64>;
pub type FdSolution = verify::FdSolution<f64>;
pub type ResidualReport = verify::ResidualReport<f64>;
