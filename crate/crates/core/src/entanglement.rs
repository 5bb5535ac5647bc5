//! Schmidt decomposition and entanglement entropy for two spin-½ particles.

use nalgebra::{Matrix2, Vector2, Vector4};
use num_complex::Complex64;

use crate::states::BipartiteState;

/// Below this a Schmidt coefficient counts as zero when choosing bases.
const NULL_COEFFICIENT: f64 = 1e-14;

/// `C[i][j]` is the amplitude of `|i⟩₁|j⟩₂`, with 0 = ↑ and 1 = ↓.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoefficientMatrix(pub Matrix2<Complex64>);

impl CoefficientMatrix {
    pub fn from_amplitudes(a: &Vector4<Complex64>) -> Self {
        CoefficientMatrix(Matrix2::new(a[0], a[1], a[2], a[3]))
    }

    pub fn entries(&self) -> &Matrix2<Complex64> {
        &self.0
    }

    pub fn determinant(&self) -> Complex64 {
        let c = &self.0;
        c[(0, 0)] * c[(1, 1)] - c[(0, 1)] * c[(1, 0)]
    }
}

pub fn coefficient_matrix(state: &BipartiteState) -> CoefficientMatrix {
    CoefficientMatrix::from_amplitudes(state.amplitudes())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SchmidtDecomposition {
    /// Descending, nonnegative.
    pub coefficients: [f64; 2],
    pub basis1: [Vector2<Complex64>; 2],
    pub basis2: [Vector2<Complex64>; 2],
}

impl SchmidtDecomposition {
    /// `Σ λᵢ |uᵢ⟩ ⊗ |vᵢ⟩` as amplitudes over `{↑↑, ↑↓, ↓↑, ↓↓}`.
    pub fn reconstruct(&self) -> Vector4<Complex64> {
        let mut out = Vector4::zeros();
        for k in 0..2 {
            let (u, v) = (&self.basis1[k], &self.basis2[k]);
            let l = Complex64::from(self.coefficients[k]);
            out += Vector4::new(u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]) * l;
        }
        out
    }

    /// Number of coefficients above `tol`.
    pub fn rank(&self, tol: f64) -> usize {
        self.coefficients.iter().filter(|&&l| l > tol).count()
    }

    /// Entropy in bits, `−Σ λ² log₂ λ²` with `0·log 0 = 0`.
    pub fn entropy(&self) -> f64 {
        let s: f64 = self
            .coefficients
            .iter()
            .map(|l| l * l)
            .filter(|&p| p > 0.0)
            .map(|p| -p * p.log2())
            .sum();
        s.clamp(0.0, 1.0)
    }
}

/// Largest-magnitude component made real and nonnegative; ties go to index 0.
fn fix_phase(v: Vector2<Complex64>) -> Vector2<Complex64> {
    let pivot = if v[0].norm() >= v[1].norm() { v[0] } else { v[1] };
    let r = pivot.norm();
    if r == 0.0 {
        return v;
    }
    v * (pivot.conj() / r)
}

fn orthogonal_complement(u: &Vector2<Complex64>) -> Vector2<Complex64> {
    Vector2::new(-u[1].conj(), u[0].conj())
}

pub fn schmidt(state: &BipartiteState) -> SchmidtDecomposition {
    schmidt_of(&coefficient_matrix(state))
}

/// Closed-form decomposition from the eigensystem of `C C†`.
pub fn schmidt_of(c: &CoefficientMatrix) -> SchmidtDecomposition {
    let m = c.entries();
    let h = m * m.adjoint();
    let (a, d, b) = (h[(0, 0)].re, h[(1, 1)].re, h[(0, 1)]);
    let half_gap = (((a - d) / 2.0).powi(2) + b.norm_sqr()).sqrt();
    let top = ((a + d) / 2.0 + half_gap).max(0.0);
    let l1 = top.sqrt();
    // |det C| = λ₁λ₂ avoids cancellation in the small eigenvalue
    let l2 = if l1 > 0.0 { (c.determinant().norm() / l1).min(l1) } else { 0.0 };

    let cand1 = Vector2::new(b, Complex64::from(top - a));
    let cand2 = Vector2::new(Complex64::from(top - d), b.conj());
    let raw = if cand1.norm() >= cand2.norm() { cand1 } else { cand2 };
    let u1 = if raw.norm() > NULL_COEFFICIENT * (a + d).max(1.0) {
        fix_phase(raw.normalize())
    } else {
        // degenerate spectrum: any basis diagonalizes C C†
        Vector2::new(Complex64::from(1.0), Complex64::from(0.0))
    };
    let u2 = fix_phase(orthogonal_complement(&u1));

    let project = |u: &Vector2<Complex64>, l: f64| m.transpose() * u.conjugate() / Complex64::from(l);
    let v1 = project(&u1, l1);
    let v2 = if l2 > NULL_COEFFICIENT {
        project(&u2, l2)
    } else {
        orthogonal_complement(&v1)
    };

    SchmidtDecomposition {
        coefficients: [l1, l2],
        basis1: [u1, u2],
        basis2: [v1, v2],
    }
}

pub fn von_neumann_entropy(state: &BipartiteState) -> f64 {
    schmidt(state).entropy()
}

/// True iff the second Schmidt coefficient is below `tol`.
pub fn is_separable(state: &BipartiteState, tol: f64) -> bool {
    schmidt(state).coefficients[1] < tol
}
