//! Four-vectors and Lorentz matrices in the `(−, +, +, +)` signature.
//!
//! Matrices act on column vectors `(t, x, y, z)`; index 0 is time. The boost
//! convention follows the passive picture: [`boost_along`]`(n̂, β)` is the
//! transformation into a frame moving with velocity `+β n̂`, so its `(0, i)`
//! entries are `−γβ nᵢ`. Many texts use the opposite sign; the sign of every
//! Wigner angle in this crate depends on it.

use std::f64::consts::PI;
use std::fmt;
use std::ops::Mul;

use nalgebra::{Matrix3, Matrix4, Unit, Vector3, Vector4};

use crate::error::{Error, Result};

/// Diagonal of the Minkowski metric. Every inner product goes through this.
pub const METRIC_DIAGONAL: [f64; 4] = [-1.0, 1.0, 1.0, 1.0];

/// Default relative tolerance for Lorentz-matrix validation.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Largest accepted speed. Anything above is rejected, never clamped.
pub const MAX_BETA: f64 = 1.0 - 1e-12;

/// Absolute tolerance on the time row/column when a matrix is required to
/// be a pure rotation.
pub const ROTATION_TOL: f64 = 1e-8;

pub fn metric() -> Matrix4<f64> {
    Matrix4::from_diagonal(&Vector4::from(METRIC_DIAGONAL))
}

/// Checks a speed (in units of c) and returns it unchanged.
pub fn check_beta(beta: f64) -> Result<f64> {
    if !beta.is_finite() {
        return Err(Error::NonFinite("velocity"));
    }
    if beta < 0.0 {
        return Err(Error::NegativeVelocity(beta));
    }
    if beta > MAX_BETA {
        return Err(Error::Superluminal(beta));
    }
    Ok(beta)
}

/// Lorentz factor `1/√(1−β²)` of a validated speed.
pub fn gamma(beta: f64) -> Result<f64> {
    let beta = check_beta(beta.abs()).map_err(|e| match e {
        Error::Superluminal(_) => Error::Superluminal(beta),
        other => other,
    })?;
    Ok(1.0 / (1.0 - beta * beta).sqrt())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourVector {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl FourVector {
    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        FourVector { t, x, y, z }
    }

    pub fn from_parts(t: f64, spatial: &Vector3<f64>) -> Self {
        FourVector::new(t, spatial.x, spatial.y, spatial.z)
    }

    pub fn spatial(&self) -> Vector3<f64> {
        Vector3::new(self.x, self.y, self.z)
    }

    pub fn to_vector(&self) -> Vector4<f64> {
        Vector4::new(self.t, self.x, self.y, self.z)
    }

    pub fn from_vector(v: &Vector4<f64>) -> Self {
        FourVector::new(v[0], v[1], v[2], v[3])
    }

    pub fn is_finite(&self) -> bool {
        self.t.is_finite() && self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn dot(&self, other: &FourVector) -> f64 {
        minkowski_dot(self, other)
    }
}

impl From<Vector4<f64>> for FourVector {
    fn from(v: Vector4<f64>) -> Self {
        FourVector::from_vector(&v)
    }
}

impl fmt::Display for FourVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.t, self.x, self.y, self.z)
    }
}

/// `η_{μν} uᵘ vᵛ = −u⁰v⁰ + u⃗·v⃗`.
pub fn minkowski_dot(u: &FourVector, v: &FourVector) -> f64 {
    let (u, v) = (u.to_vector(), v.to_vector());
    (0..4).map(|i| METRIC_DIAGONAL[i] * u[i] * v[i]).sum()
}

/// On-shell momentum of a massive particle. The energy is always derived
/// from the mass and the spatial momentum, so `p·p = −m²` by construction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FourMomentum {
    mass: f64,
    p: Vector3<f64>,
}

impl FourMomentum {
    pub fn new(mass: f64, p: Vector3<f64>) -> Result<Self> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::InvalidMass(mass));
        }
        if !p.iter().all(|c| c.is_finite()) {
            return Err(Error::NonFinite("spatial momentum"));
        }
        Ok(FourMomentum { mass, p })
    }

    pub fn at_rest(mass: f64) -> Result<Self> {
        FourMomentum::new(mass, Vector3::zeros())
    }

    /// Particle of the given mass moving with speed `beta` along `direction`.
    pub fn from_velocity(mass: f64, direction: &Vector3<f64>, beta: f64) -> Result<Self> {
        let g = gamma(check_beta(beta)?)?;
        if beta == 0.0 {
            return FourMomentum::at_rest(mass);
        }
        let n = unit_axis(direction)?;
        FourMomentum::new(mass, n.into_inner() * (g * beta * mass))
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn spatial(&self) -> Vector3<f64> {
        self.p
    }

    /// `ω_p = √(m² + |p⃗|²)`.
    pub fn energy(&self) -> f64 {
        (self.mass * self.mass + self.p.norm_squared()).sqrt()
    }

    pub fn gamma(&self) -> f64 {
        self.energy() / self.mass
    }

    pub fn beta(&self) -> f64 {
        self.p.norm() / self.energy()
    }

    pub fn four_vector(&self) -> FourVector {
        FourVector::from_parts(self.energy(), &self.p)
    }

    /// Momentum seen after applying `lambda`; the mass is carried over.
    pub fn transformed(&self, lambda: &LorentzMatrix) -> Result<Self> {
        let q = lambda.apply(&self.four_vector());
        FourMomentum::new(self.mass, q.spatial())
    }

    /// Componentwise comparison of the spatial momenta and masses.
    pub fn approx_eq(&self, other: &FourMomentum, tol: f64) -> bool {
        let scale = 1.0_f64.max(self.energy()).max(other.energy());
        (self.mass - other.mass).abs() <= tol * scale && (self.p - other.p).amax() <= tol * scale
    }
}

/// A proper orthochronous Lorentz transformation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzMatrix(Matrix4<f64>);

impl LorentzMatrix {
    /// Validates `m` against `ΛᵀηΛ = η`, `det Λ = 1` and `Λ⁰₀ ≥ 1`.
    pub fn new(m: Matrix4<f64>, tol: f64) -> Result<Self> {
        let report = validate_lorentz(&m, tol);
        if report.passed() {
            Ok(LorentzMatrix(m))
        } else {
            Err(Error::NotLorentz(report.to_string()))
        }
    }

    /// Wraps `m` without validation. Products of validated matrices go
    /// through here.
    pub fn from_matrix_unchecked(m: Matrix4<f64>) -> Self {
        LorentzMatrix(m)
    }

    pub fn identity() -> Self {
        LorentzMatrix(Matrix4::identity())
    }

    pub fn matrix(&self) -> &Matrix4<f64> {
        &self.0
    }

    pub fn into_inner(self) -> Matrix4<f64> {
        self.0
    }

    pub fn apply(&self, v: &FourVector) -> FourVector {
        FourVector::from_vector(&(self.0 * v.to_vector()))
    }

    /// `Λ⁻¹ = η Λᵀ η`, exact for any Lorentz matrix.
    pub fn inverse(&self) -> Self {
        let eta = metric();
        LorentzMatrix(eta * self.0.transpose() * eta)
    }

    pub fn max_abs_diff(&self, other: &LorentzMatrix) -> f64 {
        (self.0 - other.0).amax()
    }

    pub fn report(&self, tol: f64) -> LorentzReport {
        validate_lorentz(&self.0, tol)
    }
}

impl Mul for LorentzMatrix {
    type Output = LorentzMatrix;

    fn mul(self, rhs: LorentzMatrix) -> LorentzMatrix {
        LorentzMatrix(self.0 * rhs.0)
    }
}

impl Mul<&LorentzMatrix> for &LorentzMatrix {
    type Output = LorentzMatrix;

    fn mul(self, rhs: &LorentzMatrix) -> LorentzMatrix {
        LorentzMatrix(self.0 * rhs.0)
    }
}

/// Rotation by `angle` (right-handed) about a unit `axis`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rotation3 {
    axis: Unit<Vector3<f64>>,
    angle: f64,
}

impl Rotation3 {
    /// Normalizes `axis` and wraps `angle` into `(−π, π]`.
    pub fn new(axis: &Vector3<f64>, angle: f64) -> Result<Self> {
        if !angle.is_finite() {
            return Err(Error::NonFinite("rotation angle"));
        }
        let axis = unit_axis(axis)?;
        let mut angle = angle.rem_euclid(2.0 * PI);
        if angle > PI {
            angle -= 2.0 * PI;
        }
        Ok(Rotation3 { axis, angle })
    }

    pub fn axis(&self) -> Vector3<f64> {
        self.axis.into_inner()
    }

    pub fn angle(&self) -> f64 {
        self.angle
    }

    pub fn to_lorentz(&self) -> LorentzMatrix {
        embed_spatial(&rodrigues(&self.axis, self.angle))
    }
}

fn unit_axis(axis: &Vector3<f64>) -> Result<Unit<Vector3<f64>>> {
    let norm = axis.norm();
    if !norm.is_finite() || norm == 0.0 {
        return Err(Error::ZeroAxis);
    }
    Ok(Unit::new_unchecked(axis / norm))
}

fn embed_spatial(r: &Matrix3<f64>) -> LorentzMatrix {
    let mut m = Matrix4::identity();
    m.fixed_view_mut::<3, 3>(1, 1).copy_from(r);
    LorentzMatrix(m)
}

fn rodrigues(axis: &Unit<Vector3<f64>>, angle: f64) -> Matrix3<f64> {
    let k = axis.cross_matrix();
    Matrix3::identity() + k * angle.sin() + k * k * (1.0 - angle.cos())
}

/// Pure boost with `Λ⁰₀ = γ`, `Λ⁰ᵢ = Λⁱ₀ = s·nᵢ`, `Λⁱⱼ = δᵢⱼ + (γ−1)nᵢnⱼ`.
fn symmetric_boost(n: &Vector3<f64>, gamma: f64, s: f64) -> LorentzMatrix {
    let mut m = Matrix4::identity();
    m[(0, 0)] = gamma;
    for i in 0..3 {
        m[(0, i + 1)] = s * n[i];
        m[(i + 1, 0)] = s * n[i];
        for j in 0..3 {
            m[(i + 1, j + 1)] += (gamma - 1.0) * n[i] * n[j];
        }
    }
    LorentzMatrix(m)
}

/// Standard boost `L(p)`, taking the rest momentum `(m, 0, 0, 0)` to `p`.
/// Returns the identity for a particle at rest.
pub fn standard_boost(p: &FourMomentum) -> LorentzMatrix {
    let norm = p.spatial().norm();
    if norm == 0.0 {
        return LorentzMatrix::identity();
    }
    let n = p.spatial() / norm;
    let gamma = p.gamma();
    // √(γ²−1) = |p⃗|/m, which stays accurate when γ is close to 1.
    symmetric_boost(&n, gamma, norm / p.mass())
}

/// `L⁻¹(p)`: same spatial block, time-space entries negated.
pub fn inverse_standard_boost(p: &FourMomentum) -> LorentzMatrix {
    let norm = p.spatial().norm();
    if norm == 0.0 {
        return LorentzMatrix::identity();
    }
    let n = p.spatial() / norm;
    symmetric_boost(&n, p.gamma(), -norm / p.mass())
}

/// Transformation into a frame moving with velocity `beta` along `axis`
/// (`cosh α = γ`, `sinh α = −γβ`). Negative `beta` reverses the direction.
pub fn boost_along(axis: &Vector3<f64>, beta: f64) -> Result<LorentzMatrix> {
    let g = gamma(beta)?;
    let n = unit_axis(axis)?;
    Ok(symmetric_boost(&n, g, -g * beta))
}

/// Right-handed spatial rotation embedded in a 4×4 matrix.
pub fn rotation_about(axis: &Vector3<f64>, angle: f64) -> Result<LorentzMatrix> {
    Ok(Rotation3::new(axis, angle)?.to_lorentz())
}

/// Outcome of [`validate_lorentz`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzReport {
    /// `max |MᵀηM − η|` entrywise.
    pub metric_deviation: f64,
    /// `|det M − 1|`.
    pub det_deviation: f64,
    /// `M⁰₀`.
    pub time_component: f64,
    pub orthochronous: bool,
    /// `max(1, max |Mᵢⱼ|)`, used to make `tol` relative.
    pub scale: f64,
    pub tol: f64,
}

impl LorentzReport {
    pub fn metric_ok(&self) -> bool {
        self.metric_deviation <= self.tol * self.scale * self.scale
    }

    pub fn det_ok(&self) -> bool {
        self.det_deviation <= self.tol * self.scale.powi(4)
    }

    pub fn passed(&self) -> bool {
        self.metric_ok() && self.det_ok() && self.orthochronous
    }
}

impl fmt::Display for LorentzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let flag = |ok: bool| if ok { "ok" } else { "FAIL" };
        write!(
            f,
            "metric deviation {:.3e} [{}], det deviation {:.3e} [{}], Λ⁰₀ = {} [{}]",
            self.metric_deviation,
            flag(self.metric_ok()),
            self.det_deviation,
            flag(self.det_ok()),
            self.time_component,
            flag(self.orthochronous),
        )
    }
}

pub fn validate_lorentz(m: &Matrix4<f64>, tol: f64) -> LorentzReport {
    let eta = metric();
    let metric_deviation = (m.transpose() * eta * m - eta).amax();
    let det_deviation = (m.determinant() - 1.0).abs();
    let time_component = m[(0, 0)];
    let scale = m.amax().max(1.0);
    LorentzReport {
        metric_deviation: if metric_deviation.is_nan() { f64::INFINITY } else { metric_deviation },
        det_deviation: if det_deviation.is_nan() { f64::INFINITY } else { det_deviation },
        time_component,
        orthochronous: time_component >= 1.0 - tol * scale,
        scale,
        tol,
    }
}

/// Axis and angle of a pure rotation, angle in `[0, π]`.
///
/// The identity maps to axis `ẑ`. At angle `π` the axis sign is fixed by
/// making its largest-magnitude component positive.
pub fn axis_angle_from_rotation(m: &LorentzMatrix) -> Result<Rotation3> {
    axis_angle_from_rotation_tol(m, ROTATION_TOL)
}

// negated comparisons reject NaN
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn axis_angle_from_rotation_tol(m: &LorentzMatrix, tol: f64) -> Result<Rotation3> {
    let m = m.matrix();
    let time_leak = (1..4)
        .map(|i| m[(0, i)].abs().max(m[(i, 0)].abs()))
        .fold((m[(0, 0)] - 1.0).abs(), f64::max);
    if !(time_leak <= tol) {
        return Err(Error::NotRotation(format!(
            "time row/column deviates from identity by {time_leak:.3e}"
        )));
    }
    let r: Matrix3<f64> = m.fixed_view::<3, 3>(1, 1).into_owned();
    let orth = (r.transpose() * r - Matrix3::identity()).amax();
    if !(orth <= tol) {
        return Err(Error::NotRotation(format!(
            "spatial block is not orthogonal (|RᵀR − I| = {orth:.3e})"
        )));
    }
    let det = r.determinant();
    if !((det - 1.0).abs() <= tol) {
        return Err(Error::NotRotation(format!(
            "spatial block has determinant {det}"
        )));
    }

    // R = cos φ I + sin φ [n]× + (1 − cos φ) n nᵀ
    let v = Vector3::new(
        r[(2, 1)] - r[(1, 2)],
        r[(0, 2)] - r[(2, 0)],
        r[(1, 0)] - r[(0, 1)],
    ) * 0.5;
    let sin = v.norm();
    let cos = ((r.trace() - 1.0) * 0.5).clamp(-1.0, 1.0);
    let angle = sin.atan2(cos);

    if cos >= 0.0 {
        if sin == 0.0 {
            return Ok(Rotation3 {
                axis: Vector3::z_axis(),
                angle: 0.0,
            });
        }
        return Ok(Rotation3 {
            axis: Unit::new_normalize(v),
            angle,
        });
    }

    // Large angles: n nᵀ from the symmetric part, which stays well
    // conditioned as φ → π where the antisymmetric part vanishes.
    let nn = ((r + r.transpose()) * 0.5 - Matrix3::identity() * cos) / (1.0 - cos);
    let k = (0..3)
        .max_by(|&a, &b| nn[(a, a)].total_cmp(&nn[(b, b)]))
        .unwrap_or(2);
    let mut axis: Vector3<f64> = nn.column(k).into_owned();
    axis /= axis.norm();
    if v.norm() > 1e-12 {
        if axis.dot(&v) < 0.0 {
            axis = -axis;
        }
    } else {
        let big = axis.iamax();
        if axis[big] < 0.0 {
            axis = -axis;
        }
    }
    Ok(Rotation3 {
        axis: Unit::new_unchecked(axis),
        angle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn dot_examples() {
        let t = FourVector::new(1.0, 0.0, 0.0, 0.0);
        assert_eq!(minkowski_dot(&t, &t), -1.0);
        let null = FourVector::new(1.0, 1.0, 0.0, 0.0);
        assert_eq!(minkowski_dot(&null, &null), 0.0);
        let (m, beta) = (1.0, 0.6_f64);
        let g = 1.0 / (1.0 - beta * beta).sqrt();
        let p = FourVector::new(m * g, 0.0, 0.0, m * g * beta);
        assert!(close(minkowski_dot(&p, &p), -1.0, 1e-14));
    }

    #[test]
    fn standard_boost_maps_rest_to_p() {
        let p = FourMomentum::new(1.0, Vector3::new(0.0, 0.0, 0.75)).unwrap();
        let l = standard_boost(&p);
        assert!(close(l.matrix()[(0, 0)], 1.25, 1e-15));
        let q = l.apply(&FourVector::new(1.0, 0.0, 0.0, 0.0));
        assert!(close(q.t, 1.25, 1e-15) && close(q.z, 0.75, 1e-15));
        assert!(q.x == 0.0 && q.y == 0.0);
        assert!(l.report(1e-12).passed());
    }

    #[test]
    fn rest_frame_boost_is_identity() {
        let p = FourMomentum::at_rest(1.0).unwrap();
        assert_eq!(standard_boost(&p), LorentzMatrix::identity());
        assert_eq!(inverse_standard_boost(&p), LorentzMatrix::identity());
    }

    #[test]
    fn inverse_standard_boost_examples() {
        let p = FourMomentum::new(1.0, Vector3::new(0.0, 0.0, 0.75)).unwrap();
        let back = inverse_standard_boost(&p).apply(&FourVector::new(1.25, 0.0, 0.0, 0.75));
        assert!(close(back.t, 1.0, 1e-14) && back.spatial().amax() < 1e-14);
        let prod = inverse_standard_boost(&p) * standard_boost(&p);
        assert!(prod.max_abs_diff(&LorentzMatrix::identity()) < 1e-12);

        let p = FourMomentum::new(1.0, Vector3::new(0.3, 0.4, 0.0)).unwrap();
        let li = inverse_standard_boost(&p);
        assert!(close(li.matrix()[(1, 0)], -0.3, 1e-15));
        assert!(close(li.matrix()[(2, 0)], -0.4, 1e-15));
        assert_eq!(li.matrix()[(3, 0)], 0.0);
    }

    #[test]
    fn boost_along_examples() {
        assert_eq!(boost_along(&Vector3::x(), 0.0).unwrap(), LorentzMatrix::identity());
        let b = boost_along(&Vector3::x(), 0.6).unwrap();
        assert!(close(b.matrix()[(0, 0)], 1.25, 1e-15));
        assert!(close(b.matrix()[(0, 1)], -0.75, 1e-15));
        assert!(matches!(boost_along(&Vector3::x(), 1.0), Err(Error::Superluminal(_))));
        assert!(matches!(boost_along(&Vector3::x(), -1.0), Err(Error::Superluminal(_))));
        assert!(matches!(boost_along(&Vector3::zeros(), 0.5), Err(Error::ZeroAxis)));
        assert!(matches!(boost_along(&Vector3::x(), f64::NAN), Err(Error::NonFinite(_))));
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(rotation_about(&Vector3::z(), 0.0).unwrap(), LorentzMatrix::identity());
        let r = rotation_about(&Vector3::z(), PI / 2.0).unwrap();
        let y = r.apply(&FourVector::new(0.0, 1.0, 0.0, 0.0));
        assert!(close(y.y, 1.0, 1e-15) && y.x.abs() < 1e-15);

        // W_{−ŷ}(θ): x' = cos θ x − sin θ z, z' = sin θ x + cos θ z
        let th = 0.3_f64;
        let w = rotation_about(&-Vector3::y(), th).unwrap();
        let m = w.matrix();
        assert!(close(m[(1, 1)], th.cos(), 1e-15) && close(m[(1, 3)], -th.sin(), 1e-15));
        assert!(close(m[(3, 1)], th.sin(), 1e-15) && close(m[(3, 3)], th.cos(), 1e-15));
        assert!(rotation_about(&Vector3::zeros(), 1.0).is_err());
    }

    #[test]
    fn validation_reports() {
        let id = validate_lorentz(&Matrix4::identity(), DEFAULT_TOL);
        assert!(id.passed());
        assert_eq!(id.metric_deviation, 0.0);
        assert_eq!(id.det_deviation, 0.0);

        let tr = validate_lorentz(&Matrix4::from_diagonal(&Vector4::new(-1.0, 1.0, 1.0, 1.0)), DEFAULT_TOL);
        assert!(!tr.orthochronous);
        assert!(!tr.passed());
        assert!(tr.metric_ok());

        let parity = Matrix4::from_diagonal(&Vector4::new(1.0, -1.0, 1.0, 1.0));
        assert!(!validate_lorentz(&parity, DEFAULT_TOL).det_ok());
        assert!(LorentzMatrix::new(parity, DEFAULT_TOL).is_err());

        let mut skew = Matrix4::identity();
        skew[(0, 1)] = 0.1;
        assert!(!validate_lorentz(&skew, DEFAULT_TOL).metric_ok());
    }

    #[test]
    fn axis_angle_examples() {
        let id = axis_angle_from_rotation(&LorentzMatrix::identity()).unwrap();
        assert_eq!(id.angle(), 0.0);
        assert_eq!(id.axis(), Vector3::z());

        let r = rotation_about(&-Vector3::y(), 0.2213).unwrap();
        let aa = axis_angle_from_rotation(&r).unwrap();
        assert!(close(aa.angle(), 0.2213, 1e-10));
        assert!((aa.axis() + Vector3::y()).amax() < 1e-10);

        let r = rotation_about(&-Vector3::z(), PI).unwrap();
        let aa = axis_angle_from_rotation(&r).unwrap();
        assert!(close(aa.angle(), PI, 1e-12));
        assert!((aa.axis() - Vector3::z()).amax() < 1e-12);

        let tiny = rotation_about(&Vector3::new(1.0, 2.0, 2.0), 1e-9).unwrap();
        let aa = axis_angle_from_rotation(&tiny).unwrap();
        assert!(close(aa.angle(), 1e-9, 1e-20));
        assert!((aa.axis() - Vector3::new(1.0, 2.0, 2.0) / 3.0).amax() < 1e-6);
    }

    #[test]
    fn axis_angle_rejects_non_rotations() {
        let b = boost_along(&Vector3::x(), 0.3).unwrap();
        let err = axis_angle_from_rotation(&b).unwrap_err();
        assert!(err.to_string().contains("time row/column"));

        let mut m = Matrix4::identity();
        m[(1, 1)] = 2.0;
        let err = axis_angle_from_rotation(&LorentzMatrix::from_matrix_unchecked(m)).unwrap_err();
        assert!(err.to_string().contains("orthogonal"));

        let m = Matrix4::from_diagonal(&Vector4::new(1.0, -1.0, -1.0, -1.0));
        let err = axis_angle_from_rotation(&LorentzMatrix::from_matrix_unchecked(m)).unwrap_err();
        assert!(err.to_string().contains("determinant"));
    }

    #[test]
    fn momentum_rejects_bad_input() {
        assert!(matches!(FourMomentum::at_rest(0.0), Err(Error::InvalidMass(_))));
        assert!(matches!(FourMomentum::at_rest(-1.0), Err(Error::InvalidMass(_))));
        assert!(FourMomentum::new(1.0, Vector3::new(f64::INFINITY, 0.0, 0.0)).is_err());
        let p = FourMomentum::from_velocity(1.0, &Vector3::z(), 0.6).unwrap();
        assert!(close(p.spatial().z, 0.75, 1e-15));
        assert!(close(p.beta(), 0.6, 1e-15));
    }

    #[test]
    fn rotation3_wraps_angle() {
        let r = Rotation3::new(&Vector3::z(), 3.0 * PI / 2.0).unwrap();
        assert!(close(r.angle(), -PI / 2.0, 1e-15));
        let r = Rotation3::new(&Vector3::z(), -PI).unwrap();
        assert!(close(r.angle(), PI, 1e-15));
    }
}
