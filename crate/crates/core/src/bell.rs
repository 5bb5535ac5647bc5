//! Spin correlations, Bell and CHSH inequalities.
//!
//! Every closed form here is checked against the direct expectation value
//! `⟨ψ|(â·σ⃗)⊗(b̂·σ⃗)|ψ⟩`, which is the reference.

use std::f64::consts::{FRAC_1_SQRT_2, SQRT_2};
use std::fmt;

use nalgebra::{Matrix3, Matrix4, Unit, Vector3};
use num_complex::Complex64;

use crate::error::{check_range, Error, Result};
use crate::minkowski::{check_beta, DEFAULT_TOL};
use crate::pauli::{identity, kron, sigma_dot};
use crate::states::BipartiteState;

/// Largest imaginary part tolerated on a Hermitian expectation value.
pub const IMAGINARY_TOL: f64 = 1e-10;

/// `2√2`.
pub const TSIRELSON: f64 = 2.0 * SQRT_2;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Direction(Unit<Vector3<f64>>);

impl Direction {
    /// Requires `|v| = 1` within [`DEFAULT_TOL`].
    pub fn new(v: Vector3<f64>) -> Result<Self> {
        if !v.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite("direction"));
        }
        let n = v.norm();
        if (n - 1.0).abs() > DEFAULT_TOL {
            return Err(Error::NotUnit(n));
        }
        Ok(Direction(Unit::new_normalize(v)))
    }

    pub fn normalize(v: Vector3<f64>) -> Result<Self> {
        if !v.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite("direction"));
        }
        Unit::try_new(v, f64::MIN_POSITIVE)
            .map(Direction)
            .ok_or(Error::ZeroAxis)
    }

    /// Polar angle from `ẑ`, azimuth from `x̂`.
    pub fn from_angles(theta: f64, phi: f64) -> Self {
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        Direction(Unit::new_normalize(Vector3::new(st * cp, st * sp, ct)))
    }

    pub fn x() -> Self {
        Direction(Vector3::x_axis())
    }

    pub fn y() -> Self {
        Direction(Vector3::y_axis())
    }

    pub fn z() -> Self {
        Direction(Vector3::z_axis())
    }

    pub fn vector(&self) -> Vector3<f64> {
        self.0.into_inner()
    }

    pub fn angle_to(&self, other: &Direction) -> f64 {
        self.0.angle(&other.0)
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.vector();
        write!(f, "({:.6}, {:.6}, {:.6})", v.x, v.y, v.z)
    }
}

/// `T[i][j] = ⟨σᵢ ⊗ σⱼ⟩`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CorrelationTensor(pub Matrix3<f64>);

impl CorrelationTensor {
    pub fn matrix(&self) -> &Matrix3<f64> {
        &self.0
    }

    /// `âᵀ T b̂`.
    pub fn correlation(&self, a: &Direction, b: &Direction) -> f64 {
        a.vector().dot(&(self.0 * b.vector()))
    }
}

/// Measurement axes: `a`, `a_prime` on particle 1, `b`, `b_prime` on particle 2.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChshDirections {
    pub a: Direction,
    pub a_prime: Direction,
    pub b: Direction,
    pub b_prime: Direction,
}

impl ChshDirections {
    /// Maximal violation for the singlet in its rest configuration.
    pub fn singlet_optimal() -> Self {
        let h = FRAC_1_SQRT_2;
        ChshDirections {
            a: Direction::z(),
            a_prime: Direction::x(),
            b: Direction(Unit::new_normalize(Vector3::new(h, 0.0, h))),
            b_prime: Direction(Unit::new_normalize(Vector3::new(h, 0.0, -h))),
        }
    }

    /// Axes in the `xy` plane used for the boosted-pair CHSH surface; maximal
    /// for the singlet at zero Wigner angle.
    pub fn boosted_frame() -> Self {
        let h = FRAC_1_SQRT_2;
        ChshDirections {
            a: Direction(Unit::new_normalize(Vector3::new(h, -h, 0.0))),
            a_prime: Direction(Unit::new_normalize(Vector3::new(-h, -h, 0.0))),
            b: Direction::y(),
            b_prime: Direction::x(),
        }
    }
}

/// `⟨ψ|O|ψ⟩` for Hermitian `O`.
pub fn expectation(state: &BipartiteState, op: &Matrix4<Complex64>) -> Result<f64> {
    let psi = state.amplitudes();
    let v = psi.dotc(&(op * psi));
    if v.im.abs() > IMAGINARY_TOL {
        return Err(Error::ComplexExpectation(v.im));
    }
    Ok(v.re)
}

/// `⟨(â·σ⃗)⊗(b̂·σ⃗)⟩`.
pub fn correlation(state: &BipartiteState, a: &Direction, b: &Direction) -> Result<f64> {
    expectation(state, &kron(&sigma_dot(&a.vector()), &sigma_dot(&b.vector())))
}

/// Single-particle spin expectation `⟨σ·n̂⟩` for particle 1 or 2.
pub fn local_expectation(state: &BipartiteState, particle: usize, n: &Direction) -> Result<f64> {
    let s = sigma_dot(&n.vector());
    let op = match particle {
        1 => kron(&s, &identity()),
        2 => kron(&identity(), &s),
        _ => {
            return Err(Error::OutOfRange {
                name: "particle",
                value: particle as f64,
                min: 1.0,
                max: 2.0,
            })
        }
    };
    expectation(state, &op)
}

pub fn correlation_tensor(state: &BipartiteState) -> Result<CorrelationTensor> {
    let axes = [Direction::x(), Direction::y(), Direction::z()];
    let mut t = Matrix3::zeros();
    for (i, a) in axes.iter().enumerate() {
        for (j, b) in axes.iter().enumerate() {
            t[(i, j)] = correlation(state, a, b)?;
        }
    }
    Ok(CorrelationTensor(t))
}

/// Correlation tensor of the boosted singlet `sin θ Φ⁺ + cos θ Ψ⁻`:
/// `sin²θ diag(1,−1,1) − cos²θ I + sin 2θ ε_{ijy}`.
pub fn correlation_tensor_closed_form(theta_w: f64) -> CorrelationTensor {
    let (s, c) = theta_w.sin_cos();
    let b = Matrix3::from_diagonal(&Vector3::new(1.0, -1.0, 1.0));
    let mut t = b * (s * s) - Matrix3::identity() * (c * c);
    // cross term: i sinθ cosθ (⟨Φ⁺|σ¹ₖ|Ψ⁻⟩ − c.c.) contracted with ε
    let cross = 2.0 * s * c;
    t[(2, 0)] += cross;
    t[(0, 2)] -= cross;
    CorrelationTensor(t)
}

/// `C(â, b̂)` for the boosted singlet at Wigner angle `theta_w`.
pub fn correlation_closed_form(theta_w: f64, a: &Direction, b: &Direction) -> f64 {
    correlation_tensor_closed_form(theta_w).correlation(a, b)
}

/// `|C(a,b) + C(a′,b) + C(a′,b′) − C(a,b′)|`.
pub fn chsh(state: &BipartiteState, d: &ChshDirections) -> Result<f64> {
    let c = |x: &Direction, y: &Direction| correlation(state, x, y);
    Ok((c(&d.a, &d.b)? + c(&d.a_prime, &d.b)? + c(&d.a_prime, &d.b_prime)? - c(&d.a, &d.b_prime)?).abs())
}

/// `√2 (1 + cos 2θ_W)`.
pub fn chsh_closed_form(theta_w: f64) -> f64 {
    SQRT_2 * (1.0 + (2.0 * theta_w).cos())
}

/// `2√2 g² / (g² + (ββ′)²)` with `g = √(1−β²) + √(1−β′²)`.
pub fn chsh_velocity_form(beta: f64, beta_prime: f64) -> Result<f64> {
    let (b, bp) = (check_beta(beta)?, check_beta(beta_prime)?);
    let g = (1.0 - b * b).sqrt() + (1.0 - bp * bp).sqrt();
    let g2 = g * g;
    Ok(TSIRELSON * g2 / (g2 + (b * bp).powi(2)))
}

/// `1 + C_bc − |C_ab − C_ac|`; negative means the inequality is violated.
pub fn bell_original_margin(c_ab: f64, c_ac: f64, c_bc: f64) -> Result<f64> {
    let lim = 1.0 + DEFAULT_TOL;
    check_range("C(a,b)", c_ab, -lim, lim)?;
    check_range("C(a,c)", c_ac, -lim, lim)?;
    check_range("C(b,c)", c_bc, -lim, lim)?;
    Ok(1.0 + c_bc - (c_ab - c_ac).abs())
}

fn any_perpendicular(v: &Vector3<f64>) -> Vector3<f64> {
    let trial = if v.x.abs() < 0.9 { Vector3::x() } else { Vector3::y() };
    v.cross(&trial).normalize()
}

fn unit_or(v: Vector3<f64>, fallback: Vector3<f64>) -> Direction {
    Direction::normalize(v)
        .ok()
        .filter(|_| v.norm() > 1e-12)
        .unwrap_or(Direction(Unit::new_normalize(fallback)))
}

/// Directions maximizing CHSH from the two largest singular values
/// `s₁ ≥ s₂` of the correlation tensor; value `2√(s₁² + s₂²)`.
pub fn optimal_chsh(state: &BipartiteState) -> Result<(ChshDirections, f64)> {
    let t = correlation_tensor(state)?.0;
    let svd = t.svd(false, true);
    let v_t = svd
        .v_t
        .ok_or_else(|| Error::Numeric("SVD of the correlation tensor failed".into()))?;
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| svd.singular_values[j].total_cmp(&svd.singular_values[i]));
    let (s1, s2) = (svd.singular_values[order[0]], svd.singular_values[order[1]]);
    let v1: Vector3<f64> = v_t.row(order[0]).transpose();
    let v2: Vector3<f64> = v_t.row(order[1]).transpose();

    let phi = s2.atan2(s1);
    let (sp, cp) = phi.sin_cos();
    let b = v1 * cp + v2 * sp;
    let b_prime = v1 * cp - v2 * sp;
    let fallback = any_perpendicular(&v1);
    let a = unit_or(t * (b - b_prime), fallback);
    let a_prime = unit_or(t * (b + b_prime), fallback);

    let dirs = ChshDirections {
        a,
        a_prime,
        b: Direction(Unit::new_normalize(b)),
        b_prime: Direction(Unit::new_normalize(b_prime)),
    };
    Ok((dirs, 2.0 * (s1 * s1 + s2 * s2).sqrt()))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TsirelsonCheck {
    pub value: f64,
    pub bound: f64,
}

impl TsirelsonCheck {
    /// `value ≤ bound ≤ 2√2`, each within `tol`.
    pub fn holds(&self, tol: f64) -> bool {
        self.value <= self.bound + tol && self.bound <= TSIRELSON + tol
    }
}

fn commutator(x: &nalgebra::Matrix2<Complex64>, y: &nalgebra::Matrix2<Complex64>) -> nalgebra::Matrix2<Complex64> {
    x * y - y * x
}

/// CHSH value and the state-dependent bound `√(4 − ⟨[Q,R]⊗[S,T]⟩)` with
/// `Q = σ·â′`, `R = σ·â`, `S = σ·b̂`, `T = σ·b̂′`.
pub fn tsirelson_check(state: &BipartiteState, d: &ChshDirections) -> Result<TsirelsonCheck> {
    let q = sigma_dot(&d.a_prime.vector());
    let r = sigma_dot(&d.a.vector());
    let s = sigma_dot(&d.b.vector());
    let t = sigma_dot(&d.b_prime.vector());
    let k = expectation(state, &kron(&commutator(&q, &r), &commutator(&s, &t)))?;
    Ok(TsirelsonCheck {
        value: chsh(state, d)?,
        bound: (4.0 - k).max(0.0).sqrt(),
    })
}
