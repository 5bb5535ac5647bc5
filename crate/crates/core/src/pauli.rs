//! Pauli matrices in the `S_z` eigenbasis (`σ_z = diag(1, −1)`, `↑` first).

use nalgebra::{Matrix2, Matrix4, Vector3};
use num_complex::Complex64;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

pub fn identity() -> Matrix2<Complex64> {
    Matrix2::identity()
}

pub fn sigma_x() -> Matrix2<Complex64> {
    Matrix2::new(ZERO, ONE, ONE, ZERO)
}

pub fn sigma_y() -> Matrix2<Complex64> {
    Matrix2::new(ZERO, -I, I, ZERO)
}

pub fn sigma_z() -> Matrix2<Complex64> {
    Matrix2::new(ONE, ZERO, ZERO, -ONE)
}

pub fn sigmas() -> [Matrix2<Complex64>; 3] {
    [sigma_x(), sigma_y(), sigma_z()]
}

/// `n⃗·σ⃗` for any real 3-vector.
pub fn sigma_dot(n: &Vector3<f64>) -> Matrix2<Complex64> {
    sigma_x() * Complex64::from(n.x) + sigma_y() * Complex64::from(n.y) + sigma_z() * Complex64::from(n.z)
}

/// Kronecker product `a ⊗ b` with `a` acting on particle 1.
pub fn kron(a: &Matrix2<Complex64>, b: &Matrix2<Complex64>) -> Matrix4<Complex64> {
    Matrix4::from_fn(|r, c| a[(r / 2, c / 2)] * b[(r % 2, c % 2)])
}
