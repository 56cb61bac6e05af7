//! Closed-form solution of the axisymmetric shell problem.
//!
//! The radial subsystem in `(u_r, P_rr, P_tt)` reduces, through the
//! auxiliary fields `X = u' - P_rr`, `Y = u/r - P_tt`, `Z = P_tt + P_rr`,
//! to a non-homogeneous modified Bessel equation
//!
//! ```text
//!   Z'' + Z'/r - a Z + b = 0,
//! ```
//!
//! whose solution `Z = b/a + D1 I0(sqrt(a) r) + D2 K0(sqrt(a) r)` then
//! yields `u_r`, `P_tt`, `P_rr` in terms of five constants `C1, C2, C3,
//! D1, D2`. `C3` is fixed algebraically by `C3 = C2 mu_m/(mu_e + mu_m)`;
//! the remaining four follow from the Dirichlet data `u_r = U` and the
//! consistent-coupling data `P_tt = U/r` at both surfaces, a 4x4 linear
//! system.
//!
//! The shear subsystem `(P_rt, P_tr)` has only the trivial solution
//! under consistent-coupling boundary conditions, so those components
//! are identically zero, and the Cosserat couple modulus `mu_c` never
//! enters: solutions are bit-identical under any change of it.
//!
//! ## Column scaling
//!
//! `I0(sqrt(a) r)` reaches ~1e280 already at `sqrt(a) r ~ 650`, inside
//! the parameter range of interest. The system is therefore solved for
//! the rescaled unknowns
//!
//! ```text
//!   D1s = D1 exp(+sqrt(a) r_o),    D2s = D2 exp(-sqrt(a) r_i),
//! ```
//!
//! so every matrix entry combines an exponentially *scaled* kernel with
//! a factor `exp(-sqrt(a) (r_o - r))` or `exp(-sqrt(a) (r - r_i))` that
//! never exceeds one inside the shell. Field evaluation keeps the same
//! representation end to end; the raw `D1`, `D2` are exposed only as
//! (possibly underflowing) conveniences.

use crate::bessel::scaled_quartet;
use crate::error::{Error, Result};
use crate::linalg::{condition_estimate, solve_dense, DenseMatrix};
use crate::material::MaterialParameters;
use crate::scalar::{cast, linspace, Real};

/// Condition-number ceiling above which the boundary system is reported
/// as numerically singular.
const CONDITION_LIMIT: f64 = 1e12;

/// Annular cross-section, `0 < r_i < r_o`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShellGeometry<T> {
    r_inner: T,
    r_outer: T,
}

impl<T: Real> ShellGeometry<T> {
    pub fn new(r_inner: T, r_outer: T) -> Result<Self> {
        if !(r_inner > T::zero()) || !(r_outer > r_inner) || !r_outer.is_finite() {
            return Err(Error::Geometry(format!(
                "need 0 < r_i < r_o, got r_i = {r_inner}, r_o = {r_outer}"
            )));
        }
        Ok(Self { r_inner, r_outer })
    }

    /// Builds the annulus from the radius ratio `beta = r_i / r_o`.
    pub fn from_ratio(beta: T, r_outer: T) -> Result<Self> {
        Self::new(beta * r_outer, r_outer)
    }

    pub fn r_inner(&self) -> T {
        self.r_inner
    }
    pub fn r_outer(&self) -> T {
        self.r_outer
    }
    pub fn span(&self) -> T {
        self.r_outer - self.r_inner
    }

    /// Radius admissibility with a 1e-12 r_o overshoot tolerance that
    /// absorbs grid rounding at the endpoints.
    fn contains(&self, r: T) -> bool {
        let slack = cast::<T>(1e-12) * self.r_outer;
        r >= self.r_inner - slack && r <= self.r_outer + slack
    }
}

/// Prescribed radial surface displacements (Dirichlet data). The
/// consistent-coupling conditions `P_tt = U/r` at both surfaces follow
/// from the same two numbers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryData<T> {
    pub u_inner: T,
    pub u_outer: T,
}

impl<T: Real> BoundaryData<T> {
    pub fn new(u_inner: T, u_outer: T) -> Result<Self> {
        if !u_inner.is_finite() || !u_outer.is_finite() {
            return Err(Error::BoundaryData(format!(
                "displacements must be finite, got U_i = {u_inner}, U_o = {u_outer}"
            )));
        }
        Ok(Self { u_inner, u_outer })
    }

    pub fn is_zero(&self) -> bool {
        self.u_inner == T::zero() && self.u_outer == T::zero()
    }
}

/// Parameter combinations entering the closed form.
///
/// `a`, `b_per_c1` are the Bessel-equation coefficients (`b` scales with
/// `C1`; the stored value is `b` for `C1 = 1`). `big_a`, `big_b` are the
/// source/Bessel prefactors of the `u` equation, `xi1..xi3` the
/// micro-distortion combinations, `f0` the `C1` coefficient of `u/r`,
/// and `h0` the `C1` coefficient of both diagonal micro-distortion
/// components (so `Z` carries `2 h0 C1`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedCoefficients<T> {
    pub a: T,
    pub sqrt_a: T,
    pub b_per_c1: T,
    pub big_a: T,
    pub big_b: T,
    pub xi1: T,
    pub xi2: T,
    pub xi3: T,
    pub f0: T,
    pub h0: T,
}

/// Computes every derived combination from a validated parameter set.
/// `a > 0` holds for any admissible material: both harmonic-mean terms
/// are positive.
pub fn derived_coefficients<T: Real>(p: &MaterialParameters<T>) -> DerivedCoefficients<T> {
    let (mu_e, ka_e) = (p.mu_e(), p.kappa_e());
    let (mu_m, ka_m) = (p.mu_m(), p.kappa_m());
    let two = cast::<T>(2.0);
    let four = cast::<T>(4.0);

    let stiffness = mu_e * ka_e / (ka_e + mu_e) + mu_m * ka_m / (ka_m + mu_m);
    let a = four / (p.mu_macro() * p.l_c() * p.l_c()) * stiffness;
    let b_per_c1 = four / (p.mu_macro() * p.l_c() * p.l_c()) * (ka_e * mu_m / (ka_m + mu_m));

    let den = mu_e * ka_e * (mu_m + ka_m) + mu_m * ka_m * (mu_e + ka_e);
    let big_a = mu_m * (ka_e + mu_e) * (ka_e + ka_m) / den;
    let big_b = (mu_m * ka_e - mu_e * ka_m) / (mu_m * (mu_e + ka_e));

    DerivedCoefficients {
        a,
        sqrt_a: a.sqrt(),
        b_per_c1,
        big_a,
        big_b,
        xi1: (ka_m + mu_m) / (two * mu_m),
        xi2: -mu_e * (ka_m + mu_m) / (mu_m * (ka_e + mu_e)),
        xi3: mu_m * ka_m * (mu_e + ka_e) / den,
        f0: big_a / two,
        h0: mu_m * ka_e * (ka_e + mu_e) / (two * den),
    }
}

/// The five integration constants, with the Bessel amplitudes kept in
/// the overflow-safe scaled representation
/// `d1_scaled = D1 exp(+sqrt(a) r_o)`, `d2_scaled = D2 exp(-sqrt(a) r_i)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoefficientSet<T> {
    pub c1: T,
    pub c2: T,
    pub c3: T,
    pub d1_scaled: T,
    pub d2_scaled: T,
    /// Max-norm residual of the 4x4 system relative to the right-hand side.
    pub solve_residual: T,
    /// Power-iteration estimate of the 2-norm condition number.
    pub condition_estimate: f64,
}

impl<T: Real> CoefficientSet<T> {
    /// Raw `D1 = d1_scaled exp(-sqrt(a) r_o)`; underflows to zero for
    /// large `sqrt(a) r_o`, which is why the scaled form is primary.
    pub fn d1(&self, derived: &DerivedCoefficients<T>, geometry: &ShellGeometry<T>) -> T {
        self.d1_scaled * (-derived.sqrt_a * geometry.r_outer()).exp()
    }

    /// Raw `D2 = d2_scaled exp(+sqrt(a) r_i)`.
    pub fn d2(&self, derived: &DerivedCoefficients<T>, geometry: &ShellGeometry<T>) -> T {
        self.d2_scaled * (derived.sqrt_a * geometry.r_inner()).exp()
    }

    fn zero() -> Self {
        Self {
            c1: T::zero(),
            c2: T::zero(),
            c3: T::zero(),
            d1_scaled: T::zero(),
            d2_scaled: T::zero(),
            solve_residual: T::zero(),
            condition_estimate: 1.0,
        }
    }
}

/// All fields of the solution at one radius. The shear micro-distortion
/// components are identically zero and are carried explicitly so that
/// downstream checks can assert it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldSample<T> {
    pub r: T,
    pub u_r: T,
    pub p_rr: T,
    pub p_tt: T,
    pub p_rt: T,
    pub p_tr: T,
    /// `Z = P_tt + P_rr`, evaluated from its own closed form.
    pub z: T,
    /// `Y = u_r/r - P_tt`, evaluated from its own closed form.
    pub y: T,
}

/// Exact radial derivatives used by the energy quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldGradient<T> {
    pub du_r: T,
    /// The scalar curl component `dP_tt/dr + (P_tt - P_rr)/r`.
    pub curl_p: T,
}

/// Uniform radial sampling of the solution, with room for the classical
/// reference and the deviation column (filled by the classical module).
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile<T> {
    pub samples: Vec<FieldSample<T>>,
    /// Classical plane-strain displacement at the same radii; empty until
    /// attached.
    pub classical_u: Vec<T>,
    /// Normalized deviation from classical at the same radii; empty until
    /// attached.
    pub deviation: Vec<T>,
}

/// Bundles everything needed to evaluate the closed form repeatedly.
#[derive(Debug, Clone)]
pub struct ClosedFormSolution<T> {
    params: MaterialParameters<T>,
    geometry: ShellGeometry<T>,
    boundary: BoundaryData<T>,
    derived: DerivedCoefficients<T>,
    coefficients: CoefficientSet<T>,
}

/// Scaled boundary-row ingredients at radius r: `P_tt` row entries for
/// the D-columns and the `u/r` row entries.
struct RowKernels<T> {
    /// `I1(z)/z` style combination for the u-row, D1 column (already
    /// includes the interior exponential damping factor).
    u_d1: T,
    u_d2: T,
    ptt_d1: T,
    ptt_d2: T,
}

fn row_kernels<T: Real>(
    p: &MaterialParameters<T>,
    d: &DerivedCoefficients<T>,
    geometry: &ShellGeometry<T>,
    r: T,
) -> RowKernels<T> {
    let z = d.sqrt_a * r;
    let (i0s, i1s, k0s, k1s) = scaled_quartet(z);
    // interior damping: both factors are <= 1 on [r_i, r_o]
    let damp1 = (-d.sqrt_a * (geometry.r_outer() - r)).exp();
    let damp2 = (-d.sqrt_a * (r - geometry.r_inner())).exp();
    let g = d.big_b / d.sqrt_a;
    let km_over_mm = p.kappa_m() / p.mu_m();
    RowKernels {
        u_d1: g * i1s * damp1 / r,
        u_d2: -g * k1s * damp2 / r,
        ptt_d1: (d.xi1 * i0s - km_over_mm * i1s / z) * damp1,
        ptt_d2: (d.xi1 * k0s + km_over_mm * k1s / z) * damp2,
    }
}

/// Assembles the boundary system (rows: `u/r` at `r_i`, `u/r` at `r_o`,
/// `P_tt` at `r_i`, `P_tt` at `r_o`; unknowns `C1, C2, D1s, D2s`) and
/// solves it with partial pivoting.
///
/// The rows are derived directly from the field formulas (`u_r(r)/r` and
/// `P_tt(r)` evaluated at the surfaces), which makes the `D`-column
/// entries of the displacement rows carry a `1/r` factor on both
/// kernels.
pub fn solve_coefficients<T: Real>(
    p: &MaterialParameters<T>,
    geometry: &ShellGeometry<T>,
    boundary: &BoundaryData<T>,
) -> Result<CoefficientSet<T>> {
    let d = derived_coefficients(p);
    solve_with_derived(p, geometry, boundary, &d)
}

fn solve_with_derived<T: Real>(
    p: &MaterialParameters<T>,
    geometry: &ShellGeometry<T>,
    boundary: &BoundaryData<T>,
    d: &DerivedCoefficients<T>,
) -> Result<CoefficientSet<T>> {
    if boundary.is_zero() {
        // homogeneous data: the system is nonsingular, so the zero
        // coefficient set is the solution; skip the solve to keep
        // normalized outputs free of 0/0.
        return Ok(CoefficientSet::zero());
    }

    let q = p.mu_e() / (p.mu_e() + p.mu_m());
    let (r_i, r_o) = (geometry.r_inner(), geometry.r_outer());

    let mut rows = Vec::with_capacity(4);
    let mut rhs = Vec::with_capacity(4);
    for (r, u) in [(r_i, boundary.u_inner), (r_o, boundary.u_outer)] {
        let k = row_kernels(p, d, geometry, r);
        rows.push(vec![d.f0, (r * r).recip(), k.u_d1, k.u_d2]);
        rhs.push(u / r);
    }
    for (r, u) in [(r_i, boundary.u_inner), (r_o, boundary.u_outer)] {
        let k = row_kernels(p, d, geometry, r);
        rows.push(vec![d.h0, q / (r * r), k.ptt_d1, k.ptt_d2]);
        rhs.push(u / r);
    }

    let matrix = DenseMatrix::from_rows(&rows);
    let estimate = condition_estimate(&matrix, 25);
    if !estimate.is_finite() || estimate > CONDITION_LIMIT {
        return Err(Error::IllConditioned { estimate });
    }
    let solution = solve_dense(matrix.clone(), rhs.clone())
        .map_err(|_| Error::IllConditioned { estimate: f64::INFINITY })?;

    // residual relative to the right-hand side
    let mut residual = T::zero();
    let mut rhs_norm = T::zero();
    for i in 0..4 {
        let mut ax = T::zero();
        for j in 0..4 {
            ax = ax + rows[i][j] * solution[j];
        }
        residual = residual.max((ax - rhs[i]).abs());
        rhs_norm = rhs_norm.max(rhs[i].abs());
    }

    let c2 = solution[1];
    Ok(CoefficientSet {
        c1: solution[0],
        c2,
        c3: c2 * p.mu_m() / (p.mu_e() + p.mu_m()),
        d1_scaled: solution[2],
        d2_scaled: solution[3],
        solve_residual: residual / rhs_norm,
        condition_estimate: estimate,
    })
}

/// Evaluates every field of the closed form at radius `r`.
pub fn evaluate<T: Real>(
    p: &MaterialParameters<T>,
    geometry: &ShellGeometry<T>,
    coefficients: &CoefficientSet<T>,
    r: T,
) -> Result<FieldSample<T>> {
    evaluate_with_gradient(p, geometry, coefficients, r).map(|(sample, _)| sample)
}

/// Evaluates the fields together with the exact radial derivative of
/// `u_r` and the scalar curl of `P` (both closed forms).
pub fn evaluate_with_gradient<T: Real>(
    p: &MaterialParameters<T>,
    geometry: &ShellGeometry<T>,
    coefficients: &CoefficientSet<T>,
    r: T,
) -> Result<(FieldSample<T>, FieldGradient<T>)> {
    if !geometry.contains(r) {
        return Err(Error::RadiusOutOfRange {
            r: r.to_f64().unwrap_or(f64::NAN),
            r_inner: geometry.r_inner().to_f64().unwrap_or(f64::NAN),
            r_outer: geometry.r_outer().to_f64().unwrap_or(f64::NAN),
        });
    }
    let d = derived_coefficients(p);
    Ok(evaluate_inner(p, geometry, &d, coefficients, r))
}

fn evaluate_inner<T: Real>(
    p: &MaterialParameters<T>,
    geometry: &ShellGeometry<T>,
    d: &DerivedCoefficients<T>,
    c: &CoefficientSet<T>,
    r: T,
) -> (FieldSample<T>, FieldGradient<T>) {
    let z = d.sqrt_a * r;
    let (i0s, i1s, k0s, k1s) = scaled_quartet(z);
    // t1 = D1 exp(+z), t2 = D2 exp(-z): pairs with the scaled kernels.
    let t1 = c.d1_scaled * (-d.sqrt_a * (geometry.r_outer() - r)).exp();
    let t2 = c.d2_scaled * (-d.sqrt_a * (r - geometry.r_inner())).exp();
    let g = d.big_b / d.sqrt_a;
    let two = cast::<T>(2.0);

    let q = p.mu_e() / (p.mu_e() + p.mu_m());
    let km_over_mm = p.kappa_m() / p.mu_m();
    let half_diff = (p.kappa_m() - p.mu_m()) / (two * p.mu_m());

    let u_r = c.c1 * d.f0 * r + c.c2 / r + g * (t1 * i1s - t2 * k1s);
    let p_tt = c.c1 * d.h0
        + c.c2 * q / (r * r)
        + t1 * (d.xi1 * i0s - km_over_mm * i1s / z)
        + t2 * (d.xi1 * k0s + km_over_mm * k1s / z);
    let p_rr = c.c1 * d.h0 - c.c2 * q / (r * r)
        - t1 * (half_diff * i0s - km_over_mm * i1s / z)
        - t2 * (half_diff * k0s + km_over_mm * k1s / z);
    let z_field = two * c.c1 * d.h0 + t1 * i0s + t2 * k0s;
    let two_xi1_plus_xi2 = two * d.xi1 + d.xi2;
    let y_field = c.c1 * d.xi3 / two + c.c3 / (r * r)
        - t1 * (d.xi1 * i0s - two_xi1_plus_xi2 * i1s / z)
        - t2 * (d.xi1 * k0s + two_xi1_plus_xi2 * k1s / z);

    // du/dr uses I1'(z) = I0 - I1/z and K1'(z) = -K0 - K1/z.
    let du_r = c.c1 * d.f0 - c.c2 / (r * r)
        + d.big_b * (t1 * (i0s - i1s / z) + t2 * (k0s + k1s / z));
    // dP_tt/dr + (P_tt - P_rr)/r collapses to a single Bessel pair.
    let curl_p = d.sqrt_a * d.xi1 * (t1 * i1s - t2 * k1s);

    (
        FieldSample {
            r,
            u_r,
            p_rr,
            p_tt,
            p_rt: T::zero(),
            p_tr: T::zero(),
            z: z_field,
            y: y_field,
        },
        FieldGradient { du_r, curl_p },
    )
}

impl<T: Real> ClosedFormSolution<T> {
    /// Solves the boundary system and caches everything needed for
    /// repeated field evaluation.
    pub fn solve(
        params: MaterialParameters<T>,
        geometry: ShellGeometry<T>,
        boundary: BoundaryData<T>,
    ) -> Result<Self> {
        let derived = derived_coefficients(&params);
        let coefficients = solve_with_derived(&params, &geometry, &boundary, &derived)?;
        Ok(Self { params, geometry, boundary, derived, coefficients })
    }

    /// Rebuilds a solution around an externally supplied coefficient set
    /// (e.g. a deliberately perturbed one for sensitivity checks).
    pub fn with_coefficients(
        params: MaterialParameters<T>,
        geometry: ShellGeometry<T>,
        boundary: BoundaryData<T>,
        coefficients: CoefficientSet<T>,
    ) -> Self {
        let derived = derived_coefficients(&params);
        Self { params, geometry, boundary, derived, coefficients }
    }

    pub fn params(&self) -> &MaterialParameters<T> {
        &self.params
    }
    pub fn geometry(&self) -> &ShellGeometry<T> {
        &self.geometry
    }
    pub fn boundary(&self) -> &BoundaryData<T> {
        &self.boundary
    }
    pub fn derived(&self) -> &DerivedCoefficients<T> {
        &self.derived
    }
    pub fn coefficients(&self) -> &CoefficientSet<T> {
        &self.coefficients
    }

    pub fn evaluate(&self, r: T) -> Result<FieldSample<T>> {
        self.evaluate_with_gradient(r).map(|(s, _)| s)
    }

    pub fn evaluate_with_gradient(&self, r: T) -> Result<(FieldSample<T>, FieldGradient<T>)> {
        if !self.geometry.contains(r) {
            return Err(Error::RadiusOutOfRange {
                r: r.to_f64().unwrap_or(f64::NAN),
                r_inner: self.geometry.r_inner().to_f64().unwrap_or(f64::NAN),
                r_outer: self.geometry.r_outer().to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(evaluate_inner(&self.params, &self.geometry, &self.derived, &self.coefficients, r))
    }

    /// Samples all fields on a uniform grid of `n >= 2` points including
    /// both endpoints. The classical columns start empty.
    pub fn profile(&self, n: usize) -> Result<RadialProfile<T>> {
        if n < 2 {
            return Err(Error::SampleCount(format!("profile needs n >= 2, got {n}")));
        }
        let grid = linspace(self.geometry.r_inner(), self.geometry.r_outer(), n);
        let samples = grid.into_iter().map(|r| self.evaluate(r)).collect::<Result<Vec<_>>>()?;
        Ok(RadialProfile { samples, classical_u: Vec::new(), deviation: Vec::new() })
    }
}

/// Convenience: solve + profile in one call.
pub fn profile<T: Real>(
    p: &MaterialParameters<T>,
    geometry: &ShellGeometry<T>,
    boundary: &BoundaryData<T>,
    n: usize,
) -> Result<RadialProfile<T>> {
    ClosedFormSolution::solve(*p, *geometry, *boundary)?.profile(n)
}
