//! Two-particle momentum-spin states and their Lorentz transformation.
//!
//! Momenta are sharp labels; the continuum normalization `δ(p⃗′ − p⃗)` is
//! treated as label equality. Each particle's spin transforms with the
//! spin-½ matrix of its own Wigner rotation, `U(Λ)|p₁σ₁; p₂σ₂⟩ =
//! √((Λp₁)⁰(Λp₂)⁰/(p₁⁰p₂⁰)) Σ D_{σ₁′σ₁} D_{σ₂′σ₂} |Λp₁σ₁′; Λp₂σ₂′⟩`.
//! The square-root prefactor is the same for every spin branch, so it is
//! kept in [`BipartiteState::kinematic_factor`] and the spin amplitudes stay
//! unit-normalized.

use std::fmt;
use std::str::FromStr;

use nalgebra::{Vector2, Vector3, Vector4};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::little_group::{wigner_rotation, WignerRotation};
use crate::minkowski::{check_beta, FourMomentum, LorentzMatrix};
use crate::pauli;

/// Tolerance on `Σ|amplitude|² = 1`.
pub const NORM_TOL: f64 = 1e-10;

/// Tolerance for treating two momentum labels as the same.
pub const LABEL_TOL: f64 = 1e-10;

pub type SpinAmplitudes = Vector4<Complex64>;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ParticleLabel {
    pub momentum: FourMomentum,
}

impl From<FourMomentum> for ParticleLabel {
    fn from(momentum: FourMomentum) -> Self {
        ParticleLabel { momentum }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BellKind {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl BellKind {
    pub const ALL: [BellKind; 4] = [
        BellKind::PhiPlus,
        BellKind::PhiMinus,
        BellKind::PsiPlus,
        BellKind::PsiMinus,
    ];

    /// Amplitudes over `{↑↑, ↑↓, ↓↑, ↓↓}`.
    pub fn amplitudes(self) -> SpinAmplitudes {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let v = match self {
            BellKind::PhiPlus => [h, 0.0, 0.0, h],
            BellKind::PhiMinus => [h, 0.0, 0.0, -h],
            BellKind::PsiPlus => [0.0, h, h, 0.0],
            BellKind::PsiMinus => [0.0, h, -h, 0.0],
        };
        Vector4::from(v).map(Complex64::from)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            BellKind::PhiPlus => "Φ⁺",
            BellKind::PhiMinus => "Φ⁻",
            BellKind::PsiPlus => "Ψ⁺",
            BellKind::PsiMinus => "Ψ⁻",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BellKind::PhiPlus => "phi+",
            BellKind::PhiMinus => "phi-",
            BellKind::PsiPlus => "psi+",
            BellKind::PsiMinus => "psi-",
        }
    }
}

impl fmt::Display for BellKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BellKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "phi+" | "phiplus" | "phi_plus" => Ok(BellKind::PhiPlus),
            "phi-" | "phiminus" | "phi_minus" => Ok(BellKind::PhiMinus),
            "psi+" | "psiplus" | "psi_plus" => Ok(BellKind::PsiPlus),
            "psi-" | "psiminus" | "psi_minus" | "singlet" => Ok(BellKind::PsiMinus),
            _ => Err(Error::UnknownBellKind(s.to_string())),
        }
    }
}

/// Ordered two-particle state: momentum labels, unit-normalized spin
/// amplitudes over `{↑↑, ↑↓, ↓↑, ↓↓}` and the accumulated kinematic factor.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BipartiteState {
    label1: ParticleLabel,
    label2: ParticleLabel,
    amplitudes: SpinAmplitudes,
    kinematic_factor: f64,
}

impl BipartiteState {
    /// Requires `Σ|aᵢ|² = 1` within [`NORM_TOL`].
    pub fn new(p1: FourMomentum, p2: FourMomentum, amplitudes: SpinAmplitudes) -> Result<Self> {
        if !amplitudes.iter().all(|a| a.re.is_finite() && a.im.is_finite()) {
            return Err(Error::NonFinite("spin amplitudes"));
        }
        let n2 = amplitudes.norm_squared();
        if (n2 - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(n2));
        }
        Ok(BipartiteState {
            label1: p1.into(),
            label2: p2.into(),
            amplitudes,
            kinematic_factor: 1.0,
        })
    }

    /// Rescales nonzero `amplitudes` to unit norm.
    pub fn normalized(p1: FourMomentum, p2: FourMomentum, amplitudes: SpinAmplitudes) -> Result<Self> {
        let n = amplitudes.norm();
        if !n.is_finite() {
            return Err(Error::NonFinite("spin amplitudes"));
        }
        if n == 0.0 {
            return Err(Error::NotNormalized(0.0));
        }
        BipartiteState::new(p1, p2, amplitudes / Complex64::from(n))
    }

    /// `|s₁⟩ ⊗ |s₂⟩` from single-particle `(↑, ↓)` amplitudes.
    pub fn product(
        p1: FourMomentum,
        p2: FourMomentum,
        spin1: &Vector2<Complex64>,
        spin2: &Vector2<Complex64>,
    ) -> Result<Self> {
        let amps = Vector4::new(
            spin1[0] * spin2[0],
            spin1[0] * spin2[1],
            spin1[1] * spin2[0],
            spin1[1] * spin2[1],
        );
        BipartiteState::normalized(p1, p2, amps)
    }

    pub fn label1(&self) -> &ParticleLabel {
        &self.label1
    }

    pub fn label2(&self) -> &ParticleLabel {
        &self.label2
    }

    pub fn momenta(&self) -> [FourMomentum; 2] {
        [self.label1.momentum, self.label2.momentum]
    }

    pub fn amplitudes(&self) -> &SpinAmplitudes {
        &self.amplitudes
    }

    pub fn kinematic_factor(&self) -> f64 {
        self.kinematic_factor
    }

    pub fn norm_squared(&self) -> f64 {
        self.amplitudes.norm_squared()
    }

    /// Same labels, new spin amplitudes (must be normalized).
    pub fn with_amplitudes(&self, amplitudes: SpinAmplitudes) -> Result<Self> {
        let mut s = BipartiteState::new(self.label1.momentum, self.label2.momentum, amplitudes)?;
        s.kinematic_factor = self.kinematic_factor;
        Ok(s)
    }
}

/// Bell state in the zero-momentum frame: particle 1 moves along `+ẑ` and
/// particle 2 along `−ẑ`, both with speed `beta`.
pub fn bell_state(kind: BellKind, beta: f64, mass: f64) -> Result<BipartiteState> {
    check_beta(beta)?;
    let p1 = FourMomentum::from_velocity(mass, &Vector3::z(), beta)?;
    let p2 = FourMomentum::from_velocity(mass, &-Vector3::z(), beta)?;
    BipartiteState::new(p1, p2, kind.amplitudes())
}

/// Result of [`boost_state_with_rotations`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoostedState {
    pub state: BipartiteState,
    pub rotations: [WignerRotation; 2],
}

pub fn boost_state(state: &BipartiteState, lambda: &LorentzMatrix) -> Result<BipartiteState> {
    Ok(boost_state_with_rotations(state, lambda)?.state)
}

/// Applies `Λ` and also returns each particle's Wigner rotation.
pub fn boost_state_with_rotations(state: &BipartiteState, lambda: &LorentzMatrix) -> Result<BoostedState> {
    let [p1, p2] = state.momenta();
    let w1 = wigner_rotation(lambda, &p1)?;
    let w2 = wigner_rotation(lambda, &p2)?;
    let u = pauli::kron(w1.spin_half().matrix(), w2.spin_half().matrix());
    let (q1, q2) = (p1.transformed(lambda)?, p2.transformed(lambda)?);
    let factor = ((q1.energy() * q2.energy()) / (p1.energy() * p2.energy())).sqrt();
    Ok(BoostedState {
        state: BipartiteState {
            label1: q1.into(),
            label2: q2.into(),
            amplitudes: u * state.amplitudes,
            kinematic_factor: state.kinematic_factor * factor,
        },
        rotations: [w1, w2],
    })
}

/// Bell-state mixing under a boost perpendicular to the particle axis:
/// `Φ⁺ → cos θ Φ⁺ − sin θ Ψ⁻`, `Φ⁻ → Φ⁻`, `Ψ⁺ → Ψ⁺`,
/// `Ψ⁻ → sin θ Φ⁺ + cos θ Ψ⁻`.
pub fn transform_bell_closed_form(kind: BellKind, theta_w: f64) -> SpinAmplitudes {
    let (s, c) = theta_w.sin_cos();
    let phi = BellKind::PhiPlus.amplitudes();
    let psi = BellKind::PsiMinus.amplitudes();
    match kind {
        BellKind::PhiPlus => phi * Complex64::from(c) - psi * Complex64::from(s),
        BellKind::PsiMinus => phi * Complex64::from(s) + psi * Complex64::from(c),
        BellKind::PhiMinus | BellKind::PsiPlus => kind.amplitudes(),
    }
}

/// Spin-sector overlap `⟨s₁|s₂⟩`; zero unless both momentum labels agree.
pub fn spin_inner_product(s1: &BipartiteState, s2: &BipartiteState) -> Complex64 {
    let same = s1.label1.momentum.approx_eq(&s2.label1.momentum, LABEL_TOL)
        && s1.label2.momentum.approx_eq(&s2.label2.momentum, LABEL_TOL);
    if same {
        s1.amplitudes.dotc(&s2.amplitudes)
    } else {
        Complex64::new(0.0, 0.0)
    }
}
