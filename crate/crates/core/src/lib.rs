//! Relativistic spin entanglement toolkit.
//!
//! Lorentz boosts act on a moving spin-½ particle through its Wigner
//! rotation `W = L⁻¹(Λp) Λ L(p)`. This crate builds that machinery from
//! four-vectors up, applies it to two-particle Bell states, and measures what
//! an observer in the boosted frame sees: Schmidt coefficients, von Neumann
//! entropy, correlation functions and CHSH values. Local hidden-variable
//! models are included for comparison.
//!
//! Conventions used throughout:
//!
//! * natural units, `c = ħ = 1`;
//! * metric signature `(−, +, +, +)`;
//! * [`minkowski::boost_along`] describes a frame moving with `+β` along the
//!   axis, so a particle at rest acquires momentum `−γβ` along it
//!   (`sinh α = −γβ`);
//! * two-qubit amplitudes are ordered `{↑↑, ↑↓, ↓↑, ↓↓}` with particle 1 as
//!   the left tensor factor.

pub mod bell;
pub mod entanglement;
mod error;
pub mod lhv;
pub mod little_group;
pub mod minkowski;
pub mod pauli;
pub mod poincare_algebra;
pub mod states;
pub mod sweep;

pub use error::{Error, Result};
pub use num_complex::Complex64;
