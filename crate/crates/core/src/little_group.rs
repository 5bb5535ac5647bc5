//! Wigner rotations and their spin-½ representation.
//!
//! For a massive particle with momentum `p` and a Lorentz transformation
//! `Λ`, the little-group element `W(Λ, p) = L⁻¹(Λp) Λ L(p)` fixes the rest
//! momentum and is therefore a pure rotation. It is what a boost does to the
//! particle's spin.
//!
//! # Angle conventions
//!
//! [`WignerRotation`] stores the rotation in canonical right-handed form
//! (axis `a`, angle `φ ∈ [0, π]`). The closed forms
//! [`wigner_angle_perpendicular`] and [`wigner_angle_two_boosts`] return the
//! signed angle `θ_W` with `tan θ_W = −γ′γβ′β/(γ′+γ)`, measured about
//! `n̂ = ê × p̂` (boost direction × momentum direction) with the opposite
//! handedness, so that `D^{1/2} = cos(θ_W/2) + i sin(θ_W/2) σ⃗·n̂`. For a
//! particle on `+ẑ` boosted along `+x̂` the canonical form is `a = −ŷ`,
//! `φ = −θ_W`; [`WignerRotation::signed_angle_about`] does the conversion.

use nalgebra::{Matrix2, Vector3};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::minkowski::{
    axis_angle_from_rotation_tol, check_beta, gamma, inverse_standard_boost, standard_boost,
    FourMomentum, LorentzMatrix, Rotation3,
};
use crate::pauli;

/// Tolerance for "the product `L⁻¹(Λp) Λ L(p)` is a rotation". Three stacked
/// 4×4 products, so looser than the validation default.
pub const PURITY_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WignerRotation {
    matrix: LorentzMatrix,
    rotation: Rotation3,
}

impl WignerRotation {
    pub fn matrix(&self) -> &LorentzMatrix {
        &self.matrix
    }

    pub fn rotation(&self) -> &Rotation3 {
        &self.rotation
    }

    /// Canonical right-handed axis.
    pub fn axis(&self) -> Vector3<f64> {
        self.rotation.axis()
    }

    /// Canonical angle in `[0, π]`.
    pub fn angle(&self) -> f64 {
        self.rotation.angle()
    }

    /// Signed angle about `n` in the `θ_W` convention (see module docs):
    /// `−(a·n̂)·φ`. Meaningful when the axis is parallel to `n`.
    pub fn signed_angle_about(&self, n: &Vector3<f64>) -> f64 {
        -self.axis().dot(&n.normalize()) * self.angle()
    }

    /// `D^{1/2}(W)`, the spin-½ matrix acting on `(↑, ↓)` amplitudes.
    pub fn spin_half(&self) -> SpinHalfRep {
        SpinHalfRep::for_rotation(&self.rotation)
    }
}

/// `W(Λ, p) = L⁻¹(Λp) Λ L(p)`.
pub fn wigner_rotation(lambda: &LorentzMatrix, p: &FourMomentum) -> Result<WignerRotation> {
    let q = p.transformed(lambda)?;
    let w = inverse_standard_boost(&q) * *lambda * standard_boost(p);
    let rotation = axis_angle_from_rotation_tol(&w, PURITY_TOL)
        .map_err(|e| Error::Numeric(format!("Wigner rotation: {e}")))?;
    Ok(WignerRotation {
        matrix: w,
        rotation,
    })
}

/// Reference direction `ê × p̂` for a boost along `boost_dir` acting on a
/// particle moving along `momentum_dir`.
pub fn rotation_reference_axis(boost_dir: &Vector3<f64>, momentum_dir: &Vector3<f64>) -> Vector3<f64> {
    boost_dir.normalize().cross(&momentum_dir.normalize())
}

/// Wigner angle for a particle moving along `+ẑ` with speed `beta`, seen
/// from a frame moving along `+x̂` with speed `beta_prime`.
pub fn wigner_angle_perpendicular(beta: f64, beta_prime: f64) -> Result<f64> {
    let (g, gp) = (gamma(check_beta(beta)?)?, gamma(check_beta(beta_prime)?)?);
    Ok((-gp * g * beta_prime * beta).atan2(gp + g))
}

/// Angle of `R_{−ẑ}` in `B_ŷ(β_y) B_x̂(β_x) = R_{−ẑ}(θ_W) B`.
pub fn wigner_angle_two_boosts(beta_x: f64, beta_y: f64) -> Result<f64> {
    let (gx, gy) = (gamma(check_beta(beta_x)?)?, gamma(check_beta(beta_y)?)?);
    Ok((-gy * gx * beta_y * beta_x).atan2(gy + gx))
}

/// An SU(2) matrix acting on spin-½ amplitudes ordered `(↑, ↓)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpinHalfRep(Matrix2<Complex64>);

impl SpinHalfRep {
    pub fn identity() -> Self {
        SpinHalfRep(Matrix2::identity())
    }

    /// Standard representation `exp(−iφ a⃗·σ⃗/2)` of a right-handed rotation.
    pub fn for_rotation(r: &Rotation3) -> Self {
        spin_half_matrix(&r.axis(), -r.angle())
    }

    pub fn matrix(&self) -> &Matrix2<Complex64> {
        &self.0
    }

    pub fn into_inner(self) -> Matrix2<Complex64> {
        self.0
    }

    pub fn compose(&self, other: &SpinHalfRep) -> SpinHalfRep {
        SpinHalfRep(self.0 * other.0)
    }

    pub fn determinant(&self) -> Complex64 {
        self.0[(0, 0)] * self.0[(1, 1)] - self.0[(0, 1)] * self.0[(1, 0)]
    }

    /// `max |U†U − 1|` entrywise.
    pub fn unitarity_deviation(&self) -> f64 {
        (self.0.adjoint() * self.0 - Matrix2::identity())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }
}

fn spin_half_matrix(n: &Vector3<f64>, angle: f64) -> SpinHalfRep {
    let half = 0.5 * angle;
    let i_sin = Complex64::new(0.0, half.sin());
    SpinHalfRep(pauli::identity() * Complex64::from(half.cos()) + pauli::sigma_dot(n) * i_sin)
}

/// `cos(θ/2)·1 + i sin(θ/2)·n̂·σ⃗`.
pub fn spin_half_rep(axis: &Vector3<f64>, angle: f64) -> Result<SpinHalfRep> {
    if !angle.is_finite() {
        return Err(Error::NonFinite("rotation angle"));
    }
    let norm = axis.norm();
    if !norm.is_finite() || norm == 0.0 {
        return Err(Error::ZeroAxis);
    }
    Ok(spin_half_matrix(&(axis / norm), angle))
}
