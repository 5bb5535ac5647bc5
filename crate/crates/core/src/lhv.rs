//! Local hidden-variable models: the single-particle hemisphere model and the
//! singlet sign model, exact and Monte Carlo.
//!
//! Sampling is reproducible bit-for-bit. `n` samples are split into chunks of
//! [`CHUNK_SIZE`]; chunk `k` draws from `ChaCha8Rng::seed_from_u64(seed)` on
//! stream `k`. Each hidden variable consumes two `f64` draws `(u, v)`:
//! sphere `z = 2u − 1`, hemisphere `z = 1 − u`, azimuth `2πv`. Outcomes are
//! summed as integers, so the result does not depend on thread scheduling.

use std::f64::consts::{FRAC_PI_2, PI};

use nalgebra::Vector3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bell::Direction;
use crate::error::{check_range, Error, Result};

pub const CHUNK_SIZE: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct RngSeed(pub u64);

impl From<u64> for RngSeed {
    fn from(s: u64) -> Self {
        RngSeed(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LhvEstimate {
    pub estimate: f64,
    pub std_error: f64,
    pub samples: u64,
}

/// One draw of the singlet model: hidden direction and the two outcomes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LhvSample {
    pub lambda: Vector3<f64>,
    pub a: i8,
    pub b: i8,
}

/// Exact single-particle model result and the adjusted detector angle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SingleParticleExact {
    pub value: f64,
    pub adjusted_angle: f64,
}

/// `sign(x)` with `sign(0) = +1`.
pub fn sign(x: f64) -> i8 {
    if x >= 0.0 {
        1
    } else {
        -1
    }
}

/// `A = sign(â·λ̂)`, `B = −sign(b̂·λ̂)`.
pub fn singlet_sample(lambda: Vector3<f64>, a: &Direction, b: &Direction) -> LhvSample {
    LhvSample {
        lambda,
        a: sign(a.vector().dot(&lambda)),
        b: -sign(b.vector().dot(&lambda)),
    }
}

fn check_angle(theta: f64) -> Result<f64> {
    check_range("theta", theta, 0.0, PI)
}

/// `θ′ = π(1 − cos θ)/2`.
pub fn adjusted_angle(theta: f64) -> Result<f64> {
    Ok(PI * (1.0 - check_angle(theta)?.cos()) / 2.0)
}

/// `−1 + 2θ/π`.
pub fn lhv_singlet_exact(theta: f64) -> Result<f64> {
    Ok(-1.0 + check_angle(theta)? / FRAC_PI_2)
}

/// `−1 + 2θ′/π = −cos θ`. Reproduces the quantum singlet only because the
/// detector angle is adjusted using the other side's setting, so the model is
/// nonlocal.
pub fn lhv_singlet_exact_adjusted(theta: f64) -> Result<f64> {
    Ok(-1.0 + adjusted_angle(theta)? / FRAC_PI_2)
}

/// `1 − 2θ′/π = cos θ`.
pub fn lhv_single_exact(theta: f64) -> Result<SingleParticleExact> {
    let adjusted = adjusted_angle(theta)?;
    Ok(SingleParticleExact {
        value: 1.0 - adjusted / FRAC_PI_2,
        adjusted_angle: adjusted,
    })
}

fn from_z_phi(z: f64, phi: f64) -> Vector3<f64> {
    let r = (1.0 - z * z).max(0.0).sqrt();
    let (s, c) = phi.sin_cos();
    Vector3::new(r * c, r * s, z)
}

pub fn sample_sphere<R: Rng>(rng: &mut R) -> Vector3<f64> {
    let (u, v): (f64, f64) = (rng.random(), rng.random());
    from_z_phi(2.0 * u - 1.0, 2.0 * PI * v)
}

/// Uniform on the upper hemisphere `z > 0`.
pub fn sample_hemisphere<R: Rng>(rng: &mut R) -> Vector3<f64> {
    let (u, v): (f64, f64) = (rng.random(), rng.random());
    from_z_phi(1.0 - u, 2.0 * PI * v)
}

/// Sums `f` over `n` seeded draws; returns mean and standard error.
fn estimate<F>(n: u64, seed: RngSeed, f: F) -> Result<LhvEstimate>
where
    F: Fn(&mut ChaCha8Rng) -> i8 + Sync,
{
    if n == 0 {
        return Err(Error::NoSamples);
    }
    let chunks = n.div_ceil(CHUNK_SIZE);
    let sum: i64 = (0..chunks)
        .into_par_iter()
        .map(|k| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
            rng.set_stream(k);
            let len = CHUNK_SIZE.min(n - k * CHUNK_SIZE);
            (0..len).map(|_| f(&mut rng) as i64).sum::<i64>()
        })
        .sum();
    let nf = n as f64;
    let mean = sum as f64 / nf;
    // outcomes are ±1, so Σx² = n
    let var = if n > 1 {
        ((nf - sum as f64 * mean) / (nf - 1.0)).max(0.0)
    } else {
        0.0
    };
    Ok(LhvEstimate {
        estimate: mean,
        std_error: (var / nf).sqrt(),
        samples: n,
    })
}

/// Monte Carlo `⟨A·B⟩` with `λ̂` uniform on the sphere.
pub fn lhv_singlet_mc(a: &Direction, b: &Direction, n: u64, seed: RngSeed) -> Result<LhvEstimate> {
    estimate(n, seed, |rng| {
        let s = singlet_sample(sample_sphere(rng), a, b);
        s.a * s.b
    })
}

/// Monte Carlo `⟨sign(λ̂·â′)⟩` with `λ̂` uniform on the hemisphere about
/// `ŝ = ẑ` and `â′` at the adjusted angle from `ŝ`.
pub fn lhv_single_mc(theta: f64, n: u64, seed: RngSeed) -> Result<LhvEstimate> {
    let t = adjusted_angle(theta)?;
    let a = Vector3::new(t.sin(), 0.0, t.cos());
    estimate(n, seed, |rng| sign(sample_hemisphere(rng).dot(&a)))
}
