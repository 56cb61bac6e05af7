//! Classical plane-strain annulus displacement under the same Dirichlet
//! data, and the normalized deviation between the two models.
//!
//! With pure displacement control the classical axisymmetric solution is
//! the Lamé form `u_r = alpha r + beta/r`, which satisfies the classical
//! Navier equation `d/dr(u' + u/r) = 0` identically and matches both
//! boundary values exactly — no material parameter enters, so
//! [`classical_solve`] takes only geometry and boundary data and the
//! result is material-independent by construction.

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::solver::{BoundaryData, RadialProfile, ShellGeometry};

/// Coefficients of `u_r(r) = alpha r + beta_coef / r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalCoefficients<T> {
    pub alpha: T,
    pub beta_coef: T,
}

impl<T: Real> ClassicalCoefficients<T> {
    pub fn u_r(&self, r: T) -> T {
        self.alpha * r + self.beta_coef / r
    }
}

/// Fits the Lamé form to the two Dirichlet values (a 2x2 solve in
/// closed form):
///
/// ```text
///   alpha     = (U_o r_o - U_i r_i) / (r_o^2 - r_i^2)
///   beta_coef = r_i r_o (U_i r_o - U_o r_i) / (r_o^2 - r_i^2)
/// ```
pub fn classical_solve<T: Real>(
    geometry: &ShellGeometry<T>,
    boundary: &BoundaryData<T>,
) -> ClassicalCoefficients<T> {
    let (r_i, r_o) = (geometry.r_inner(), geometry.r_outer());
    let den = r_o * r_o - r_i * r_i;
    ClassicalCoefficients {
        alpha: (boundary.u_outer * r_o - boundary.u_inner * r_i) / den,
        beta_coef: r_i * r_o * (boundary.u_inner * r_o - boundary.u_outer * r_i) / den,
    }
}

/// Normalized deviation `delta(r) = (u_micro(r) - u_classical(r)) / U_o`
/// at each profile sample. Fails when `U_o = 0`: the caller must
/// renormalize by the inner displacement instead, which is reported, not
/// guessed.
pub fn deviation<T: Real>(
    profile: &RadialProfile<T>,
    classical: &ClassicalCoefficients<T>,
    u_outer: T,
) -> Result<Vec<T>> {
    if u_outer == T::zero() {
        return Err(Error::ZeroNormalization);
    }
    Ok(profile
        .samples
        .iter()
        .map(|s| (s.u_r - classical.u_r(s.r)) / u_outer)
        .collect())
}

/// Fills the classical and deviation columns of a profile in place.
pub fn attach_reference<T: Real>(
    profile: &mut RadialProfile<T>,
    classical: &ClassicalCoefficients<T>,
    u_outer: T,
) -> Result<()> {
    profile.classical_u = profile.samples.iter().map(|s| classical.u_r(s.r)).collect();
    profile.deviation = deviation(profile, classical, u_outer)?;
    Ok(())
}
