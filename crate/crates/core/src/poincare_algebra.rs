//! Poincaré generators as real 5×5 affine matrices.
//!
//! An affine map `x ↦ Λx + a` is the 5×5 matrix `[[Λ, a], [0, 1]]`, so the
//! generators are `[[ω, 0], [0, 0]]` for Lorentz transformations and
//! `[[0, e_μ], [0, 0]]` for translations. The Hermitian generators `G` of the
//! unitary representation become real matrices `X = −iG`; a relation
//! `[G_a, G_b] = i f G_c` then reads `[X_a, X_b] = f X_c` with the same real
//! structure constant `f`.
//!
//! Normalization: `J₁ = M²³`, `J₂ = M³¹`, `J₃ = M¹²` and `Kᵢ = Mⁱ⁰`, so that
//! `[Jᵢ, Jⱼ] = εᵢⱼₖ Jₖ` closes with unit structure constants. Writing
//! `Jⁱ = εⁱʲᵏ M_jk` without the ½ would double every `J`.

use std::fmt;

use nalgebra::{Matrix5, SMatrix, Vector3};

use crate::error::{Error, Result};
use crate::minkowski::{
    inverse_standard_boost, minkowski_dot, FourMomentum, FourVector, DEFAULT_TOL, METRIC_DIAGONAL,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GeneratorLabel {
    J1,
    J2,
    J3,
    K1,
    K2,
    K3,
    P0,
    P1,
    P2,
    P3,
}

impl GeneratorLabel {
    pub const ALL: [GeneratorLabel; 10] = [
        GeneratorLabel::J1,
        GeneratorLabel::J2,
        GeneratorLabel::J3,
        GeneratorLabel::K1,
        GeneratorLabel::K2,
        GeneratorLabel::K3,
        GeneratorLabel::P0,
        GeneratorLabel::P1,
        GeneratorLabel::P2,
        GeneratorLabel::P3,
    ];

    /// `(μ, ν)` such that the generator is `M^{μν}`; `None` for translations.
    pub fn lorentz_indices(self) -> Option<(usize, usize)> {
        use GeneratorLabel::*;
        match self {
            J1 => Some((2, 3)),
            J2 => Some((3, 1)),
            J3 => Some((1, 2)),
            K1 => Some((1, 0)),
            K2 => Some((2, 0)),
            K3 => Some((3, 0)),
            _ => None,
        }
    }

    pub fn translation_index(self) -> Option<usize> {
        use GeneratorLabel::*;
        match self {
            P0 => Some(0),
            P1 => Some(1),
            P2 => Some(2),
            P3 => Some(3),
            _ => None,
        }
    }
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A generator in the affine representation. The fifth row is always zero.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AffineGenerator(Matrix5<f64>);

impl AffineGenerator {
    pub fn matrix(&self) -> &Matrix5<f64> {
        &self.0
    }

    pub fn into_inner(self) -> Matrix5<f64> {
        self.0
    }
}

/// `M^{μν}` with 4×4 block `(M^{μν})^α_β = η^{να}δ^μ_β − η^{μα}δ^ν_β`.
pub fn lorentz_generator(mu: usize, nu: usize) -> AffineGenerator {
    assert!(mu < 4 && nu < 4, "Lorentz indices run over 0..4");
    let mut m = Matrix5::zeros();
    if mu != nu {
        m[(nu, mu)] += METRIC_DIAGONAL[nu];
        m[(mu, nu)] -= METRIC_DIAGONAL[mu];
    }
    AffineGenerator(m)
}

pub fn translation_generator(mu: usize) -> AffineGenerator {
    assert!(mu < 4, "translation index runs over 0..4");
    let mut m = Matrix5::zeros();
    m[(mu, 4)] = 1.0;
    AffineGenerator(m)
}

pub fn generator(label: GeneratorLabel) -> AffineGenerator {
    match (label.lorentz_indices(), label.translation_index()) {
        (Some((mu, nu)), _) => lorentz_generator(mu, nu),
        (None, Some(mu)) => translation_generator(mu),
        (None, None) => unreachable!("every label is a rotation, boost or translation"),
    }
}

pub fn commutator(a: &Matrix5<f64>, b: &Matrix5<f64>) -> Matrix5<f64> {
    a * b - b * a
}

/// The ten generators grouped by role. Fields are public so a deliberately
/// broken set can be fed to [`verify_algebra_with`].
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSet {
    pub j: [Matrix5<f64>; 3],
    pub k: [Matrix5<f64>; 3],
    pub p: [Matrix5<f64>; 3],
    pub h: Matrix5<f64>,
}

impl GeneratorSet {
    pub fn standard() -> Self {
        use GeneratorLabel::*;
        let g = |l| generator(l).into_inner();
        GeneratorSet {
            j: [g(J1), g(J2), g(J3)],
            k: [g(K1), g(K2), g(K3)],
            p: [g(P1), g(P2), g(P3)],
            h: g(P0),
        }
    }
}

impl Default for GeneratorSet {
    fn default() -> Self {
        GeneratorSet::standard()
    }
}

fn levi_civita(i: usize, j: usize, k: usize) -> f64 {
    match (i, j, k) {
        (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
        (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
        _ => 0.0,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationCheck {
    pub name: &'static str,
    /// The relation with the factor `i` stripped.
    pub relation: &'static str,
    pub max_deviation: f64,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraReport {
    pub tol: f64,
    pub relations: Vec<RelationCheck>,
}

impl AlgebraReport {
    pub fn all_passed(&self) -> bool {
        self.relations.iter().all(|r| r.passed)
    }

    pub fn max_deviation(&self) -> f64 {
        self.relations.iter().map(|r| r.max_deviation).fold(0.0, f64::max)
    }
}

impl fmt::Display for AlgebraReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.relations {
            writeln!(
                f,
                "{:<8} {:<24} max deviation {:.3e}  {}",
                r.name,
                r.relation,
                r.max_deviation,
                if r.passed { "PASS" } else { "FAIL" }
            )?;
        }
        Ok(())
    }
}

/// Checks the full commutator table on the standard generators.
pub fn verify_algebra(tol: f64) -> AlgebraReport {
    verify_algebra_with(&GeneratorSet::standard(), tol)
}

#[allow(clippy::needless_range_loop)]
pub fn verify_algebra_with(g: &GeneratorSet, tol: f64) -> AlgebraReport {
    let zero = Matrix5::<f64>::zeros();
    let eps_sum = |set: &[Matrix5<f64>; 3], i: usize, j: usize| -> Matrix5<f64> {
        (0..3).fold(zero, |acc, k| acc + set[k] * levi_civita(i, j, k))
    };
    let pairwise = |lhs: &[Matrix5<f64>; 3],
                    rhs: &[Matrix5<f64>; 3],
                    expected: &dyn Fn(usize, usize) -> Matrix5<f64>| {
        let mut dev: f64 = 0.0;
        for i in 0..3 {
            for j in 0..3 {
                dev = dev.max((commutator(&lhs[i], &rhs[j]) - expected(i, j)).amax());
            }
        }
        dev
    };
    let with_h = |lhs: &[Matrix5<f64>; 3], expected: &dyn Fn(usize) -> Matrix5<f64>| {
        (0..3).fold(0.0_f64, |dev, i| {
            dev.max((commutator(&lhs[i], &g.h) - expected(i)).amax())
        })
    };

    let entries: Vec<(&'static str, &'static str, f64)> = vec![
        ("[J,P]", "[Ji,Pj] = eps_ijk Pk", pairwise(&g.j, &g.p, &|i, j| eps_sum(&g.p, i, j))),
        ("[J,J]", "[Ji,Jj] = eps_ijk Jk", pairwise(&g.j, &g.j, &|i, j| eps_sum(&g.j, i, j))),
        ("[J,K]", "[Ji,Kj] = eps_ijk Kk", pairwise(&g.j, &g.k, &|i, j| eps_sum(&g.k, i, j))),
        ("[P,P]", "[Pi,Pj] = 0", pairwise(&g.p, &g.p, &|_, _| zero)),
        ("[J,H]", "[Ji,H] = 0", with_h(&g.j, &|_| zero)),
        ("[P,H]", "[Pi,H] = 0", with_h(&g.p, &|_| zero)),
        ("[K,K]", "[Ki,Kj] = -eps_ijk Jk", pairwise(&g.k, &g.k, &|i, j| -eps_sum(&g.j, i, j))),
        (
            "[K,P]",
            "[Ki,Pj] = -delta_ij H",
            pairwise(&g.k, &g.p, &|i, j| if i == j { -g.h } else { zero }),
        ),
        ("[K,H]", "[Ki,H] = -Pi", with_h(&g.k, &|i| -g.p[i])),
    ];

    AlgebraReport {
        tol,
        relations: entries
            .into_iter()
            .map(|(name, relation, max_deviation)| RelationCheck {
                name,
                relation,
                max_deviation,
                passed: max_deviation <= tol,
            })
            .collect(),
    }
}

/// Matrix exponential by scaling and squaring with a degree-20 Taylor
/// polynomial. Accurate to rounding for the small generator combinations
/// used here.
pub fn expm<const N: usize>(a: &SMatrix<f64, N, N>) -> SMatrix<f64, N, N> {
    let norm = a.abs().row_sum().max();
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = a / 2f64.powi(squarings as i32);
    let mut result = SMatrix::<f64, N, N>::identity();
    let mut term = SMatrix::<f64, N, N>::identity();
    for k in 1..=20 {
        term = term * scaled / k as f64;
        result += term;
    }
    for _ in 0..squarings {
        result = result * result;
    }
    result
}

/// `L⁻¹(p)·W`: the vector `W` seen in the particle rest frame.
pub fn rest_frame_vector(p: &FourMomentum, w: &FourVector) -> FourVector {
    inverse_standard_boost(p).apply(w)
}

/// Rest-frame spin `S⃗ = W⃗/m − W⁰ p⃗ / (m(m + E))` from a Pauli-Lubanski
/// vector transverse to `p`.
pub fn pauli_lubanski_rest(p: &FourMomentum, w: &FourVector) -> Result<Vector3<f64>> {
    if !w.is_finite() {
        return Err(Error::NonFinite("Pauli-Lubanski vector"));
    }
    let residual = minkowski_dot(w, &p.four_vector());
    let scale = 1f64.max(p.energy() * w.to_vector().amax());
    if residual.abs() > DEFAULT_TOL * scale {
        return Err(Error::NotTransverse { residual });
    }
    let m = p.mass();
    Ok(w.spatial() / m - p.spatial() * (w.t / (m * (m + p.energy()))))
}
