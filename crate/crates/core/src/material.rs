//! Moduli of the isotropic relaxed micromorphic solid under plane
//! strain, their admissibility constraints, and the strain-energy
//! density.
//!
//! Conventions: `kappa = lambda + mu` are the two-dimensional (plane
//! strain) bulk moduli, and macro moduli follow from the meso ("e") and
//! micro ("m") scales through harmonic means (Reuss-type homogenization)
//!
//! ```text
//!   1/mu_M    = 1/mu_e    + 1/mu_m
//!   1/kappa_M = 1/kappa_e + 1/kappa_m
//! ```
//!
//! The Cosserat couple modulus `mu_c` is accepted and stored but is
//! inert for the axisymmetric problem this crate solves: the closed form
//! never reads it (every term containing it vanishes identically).

use crate::error::{Error, Result};
use crate::scalar::{cast, Real};
use std::fmt;

/// Relative tolerance for the Reuss-consistency identities. The values
/// are produced by exact algebra, not fitted data, so the check is tight.
pub const REUSS_TOLERANCE: f64 = 1e-12;

/// Complete validated modulus set. Immutable after construction; build
/// one through [`MaterialParameters::from_moduli`] or
/// [`MaterialParameters::from_dimensionless`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaterialParameters<T> {
    mu_e: T,
    lambda_e: T,
    mu_m: T,
    lambda_m: T,
    mu_c: T,
    mu_macro: T,
    kappa_e: T,
    kappa_m: T,
    kappa_macro: T,
    l_c: T,
}

/// The dimensionless parametrization used by the parametric studies:
/// modulus ratios G1..G3, radius ratio, length-scale ratio, and the
/// boundary displacement ratio.
///
/// `g1 = mu_m / mu_M`, `g2 = kappa_m / mu_M`, `g3 = kappa_M / mu_M`,
/// `beta = r_i / r_o`, `lc_ratio = r_o / L_c`, `delta = U_i / U_o`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimensionlessSet<T> {
    pub g1: T,
    pub g2: T,
    pub g3: T,
    pub beta: T,
    pub lc_ratio: T,
    pub delta: T,
}

impl<T: Real> DimensionlessSet<T> {
    /// Checks the admissibility inequalities `g2 > g1 > 1`,
    /// `g2 > g3 > 1`, `0 < beta < 1`, `lc_ratio > 0`.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        if !(self.g1 > T::one()) {
            report.push(format!("g1 > 1 violated (g1 = {})", self.g1));
        }
        if !(self.g2 > self.g1) {
            report.push(format!("g2 > g1 violated (g2 = {}, g1 = {})", self.g2, self.g1));
        }
        if !(self.g3 > T::one()) {
            report.push(format!("g3 > 1 violated (g3 = {})", self.g3));
        }
        if !(self.g2 > self.g3) {
            report.push(format!("g2 > g3 violated (g2 = {}, g3 = {})", self.g2, self.g3));
        }
        if !(self.beta > T::zero() && self.beta < T::one()) {
            report.push(format!("0 < beta < 1 violated (beta = {})", self.beta));
        }
        if !(self.lc_ratio > T::zero()) {
            report.push(format!("lc_ratio > 0 violated (lc_ratio = {})", self.lc_ratio));
        }
        if !self.delta.is_finite() {
            report.push(format!("delta must be finite (delta = {})", self.delta));
        }
        report
    }
}

/// Outcome of a constraint check: empty means pass.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    violations: Vec<String>,
}

impl ValidationReport {
    fn push(&mut self, v: String) {
        self.violations.push(v);
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[String] {
        &self.violations
    }

    fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidMaterial(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "pass")
        } else {
            for (i, v) in self.violations.iter().enumerate() {
                if i > 0 {
                    writeln!(f)?;
                }
                write!(f, "  - {v}")?;
            }
            Ok(())
        }
    }
}

impl<T: Real> MaterialParameters<T> {
    /// Builds the set from raw meso/micro moduli; the macro moduli follow
    /// from the harmonic means, so the Reuss identities hold exactly.
    pub fn from_moduli(mu_e: T, lambda_e: T, mu_m: T, lambda_m: T, mu_c: T, l_c: T) -> Result<Self> {
        let kappa_e = lambda_e + mu_e;
        let kappa_m = lambda_m + mu_m;
        let mu_macro = mu_e * mu_m / (mu_e + mu_m);
        let kappa_macro = kappa_e * kappa_m / (kappa_e + kappa_m);
        let p = Self {
            mu_e,
            lambda_e,
            mu_m,
            lambda_m,
            mu_c,
            mu_macro,
            kappa_e,
            kappa_m,
            kappa_macro,
            l_c,
        };
        p.validate().into_result()?;
        Ok(p)
    }

    /// Inverts the dimensionless parametrization: with `mu_m = g1 mu_M`,
    /// `kappa_m = g2 mu_M`, `kappa_M = g3 mu_M`, the harmonic means give
    ///
    /// ```text
    ///   mu_e    = mu_M mu_m / (mu_m - mu_M)
    ///   kappa_e = kappa_M kappa_m / (kappa_m - kappa_M)
    /// ```
    ///
    /// `beta` and `delta` of the set describe geometry and loading and are
    /// not consumed here.
    pub fn from_dimensionless(set: &DimensionlessSet<T>, mu_macro: T, r_o: T, mu_c: T) -> Result<Self> {
        if !(mu_macro > T::zero()) || !(r_o > T::zero()) {
            return Err(Error::Homogenization(format!(
                "mu_M and r_o must be positive (mu_M = {mu_macro}, r_o = {r_o})"
            )));
        }
        let gap_mu = set.g1 - T::one();
        let gap_kappa = set.g2 - set.g3;
        if !(gap_mu > T::zero()) {
            return Err(Error::Homogenization(format!(
                "g1 must exceed 1 to invert the shear homogenization (g1 = {})",
                set.g1
            )));
        }
        if !(gap_kappa > T::zero()) {
            return Err(Error::Homogenization(format!(
                "g2 must exceed g3 to invert the bulk homogenization (g2 = {}, g3 = {})",
                set.g2, set.g3
            )));
        }
        set.validate().into_result()?;

        let mu_m = set.g1 * mu_macro;
        let kappa_m = set.g2 * mu_macro;
        let kappa_macro = set.g3 * mu_macro;
        let mu_e = mu_macro * mu_m / (mu_m - mu_macro);
        let kappa_e = kappa_macro * kappa_m / (kappa_m - kappa_macro);
        let p = Self {
            mu_e,
            lambda_e: kappa_e - mu_e,
            mu_m,
            lambda_m: kappa_m - mu_m,
            mu_c,
            mu_macro,
            kappa_e,
            kappa_m,
            kappa_macro,
            l_c: r_o / set.lc_ratio,
        };
        p.validate().into_result()?;
        Ok(p)
    }

    /// Checks positive definiteness of the energy, Reuss consistency,
    /// the derived orderings `mu_e > mu_M`, `kappa_e > kappa_M`, and
    /// plane-strain admissibility `kappa_M > mu_M`, `kappa_m > mu_m`.
    /// Returns the (possibly empty) list of violated inequalities.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let mut require = |ok: bool, msg: String| {
            if !ok {
                report.push(msg);
            }
        };
        require(self.mu_m > T::zero(), format!("mu_m > 0 violated (mu_m = {})", self.mu_m));
        require(self.mu_e > T::zero(), format!("mu_e > 0 violated (mu_e = {})", self.mu_e));
        require(self.mu_c >= T::zero(), format!("mu_c >= 0 violated (mu_c = {})", self.mu_c));
        require(
            self.kappa_m > T::zero(),
            format!("kappa_m > 0 violated (kappa_m = {})", self.kappa_m),
        );
        require(
            self.kappa_e > T::zero(),
            format!("kappa_e > 0 violated (kappa_e = {})", self.kappa_e),
        );
        require(self.l_c > T::zero(), format!("L_c > 0 violated (L_c = {})", self.l_c));

        let tol = cast::<T>(REUSS_TOLERANCE);
        let reuss_mu = self.mu_e * self.mu_m / (self.mu_e + self.mu_m);
        require(
            ((reuss_mu - self.mu_macro) / self.mu_macro).abs() <= tol,
            format!(
                "Reuss shear consistency violated (mu_e mu_m/(mu_e+mu_m) = {reuss_mu}, mu_M = {})",
                self.mu_macro
            ),
        );
        let reuss_kappa = self.kappa_e * self.kappa_m / (self.kappa_e + self.kappa_m);
        require(
            ((reuss_kappa - self.kappa_macro) / self.kappa_macro).abs() <= tol,
            format!(
                "Reuss bulk consistency violated (kappa_e kappa_m/(kappa_e+kappa_m) = {reuss_kappa}, kappa_M = {})",
                self.kappa_macro
            ),
        );

        require(
            self.mu_e > self.mu_macro && self.mu_macro > T::zero(),
            format!("mu_e > mu_M > 0 violated (mu_e = {}, mu_M = {})", self.mu_e, self.mu_macro),
        );
        require(
            self.kappa_e > self.kappa_macro && self.kappa_macro > T::zero(),
            format!(
                "kappa_e > kappa_M > 0 violated (kappa_e = {}, kappa_M = {})",
                self.kappa_e, self.kappa_macro
            ),
        );
        require(
            self.kappa_macro > self.mu_macro,
            format!(
                "kappa_M > mu_M violated (kappa_M = {}, mu_M = {})",
                self.kappa_macro, self.mu_macro
            ),
        );
        require(
            self.kappa_m > self.mu_m,
            format!("kappa_m > mu_m violated (kappa_m = {}, mu_m = {})", self.kappa_m, self.mu_m),
        );
        report
    }

    /// Recovers `(g1, g2, g3)` from the stored moduli.
    pub fn dimensionless_ratios(&self) -> (T, T, T) {
        (
            self.mu_m / self.mu_macro,
            self.kappa_m / self.mu_macro,
            self.kappa_macro / self.mu_macro,
        )
    }

    pub fn mu_e(&self) -> T {
        self.mu_e
    }
    pub fn lambda_e(&self) -> T {
        self.lambda_e
    }
    pub fn mu_m(&self) -> T {
        self.mu_m
    }
    pub fn lambda_m(&self) -> T {
        self.lambda_m
    }
    /// Cosserat couple modulus; stored for fidelity to the energy, inert
    /// for the axisymmetric solution.
    pub fn mu_c(&self) -> T {
        self.mu_c
    }
    pub fn mu_macro(&self) -> T {
        self.mu_macro
    }
    pub fn kappa_e(&self) -> T {
        self.kappa_e
    }
    pub fn kappa_m(&self) -> T {
        self.kappa_m
    }
    pub fn kappa_macro(&self) -> T {
        self.kappa_macro
    }
    /// Derived macro Lamé modulus `lambda_M = kappa_M - mu_M`; never
    /// consumed independently by the solution.
    pub fn lambda_macro(&self) -> T {
        self.kappa_macro - self.mu_macro
    }
    pub fn l_c(&self) -> T {
        self.l_c
    }

    /// In-plane strain energy density
    ///
    /// ```text
    /// W = mu_e |sym(Du - P)|^2 + lambda_e/2 tr^2(Du - P)
    ///   + mu_c |skew(Du - P)|^2
    ///   + mu_m |sym P|^2 + lambda_m/2 tr^2 P
    ///   + mu_M L_c^2 / 2 * curl_p^2
    /// ```
    ///
    /// restricted to the in-plane 2x2 blocks; `curl_p` is the single
    /// scalar curl component the axisymmetric reduction retains.
    /// Non-negative for every admissible parameter set.
    pub fn energy_density(&self, grad_u: [[T; 2]; 2], p: [[T; 2]; 2], curl_p: T) -> T {
        let half = cast::<T>(0.5);
        let e = [
            [grad_u[0][0] - p[0][0], grad_u[0][1] - p[0][1]],
            [grad_u[1][0] - p[1][0], grad_u[1][1] - p[1][1]],
        ];
        let sym_off = half * (e[0][1] + e[1][0]);
        let skew_off = half * (e[0][1] - e[1][0]);
        let sym_e_sq = e[0][0] * e[0][0] + e[1][1] * e[1][1]
            + cast::<T>(2.0) * sym_off * sym_off;
        let skew_e_sq = cast::<T>(2.0) * skew_off * skew_off;
        let tr_e = e[0][0] + e[1][1];

        let p_sym_off = half * (p[0][1] + p[1][0]);
        let sym_p_sq = p[0][0] * p[0][0] + p[1][1] * p[1][1]
            + cast::<T>(2.0) * p_sym_off * p_sym_off;
        let tr_p = p[0][0] + p[1][1];

        self.mu_e * sym_e_sq
            + half * self.lambda_e * tr_e * tr_e
            + self.mu_c * skew_e_sq
            + self.mu_m * sym_p_sq
            + half * self.lambda_m * tr_p * tr_p
            + half * self.mu_macro * self.l_c * self.l_c * curl_p * curl_p
    }

    /// Returns a copy with a different Cosserat couple modulus. Used by
    /// the invariance checks; the solution must not depend on it.
    pub fn with_mu_c(mut self, mu_c: T) -> Result<Self> {
        self.mu_c = mu_c;
        self.validate().into_result()?;
        Ok(self)
    }
}
