//! CHSH and entanglement over a `(β, β′)` grid: a Bell pair moving along
//! `±ẑ` with speed `β`, observed from a frame boosted along `x̂` by `β′`.

use std::io::{self, Write};

use nalgebra::Vector3;
use rayon::prelude::*;

use crate::bell::{chsh, optimal_chsh, ChshDirections};
use crate::entanglement::schmidt;
use crate::error::{check_range, Error, Result};
use crate::little_group::wigner_angle_perpendicular;
use crate::minkowski::boost_along;
use crate::states::{bell_state, boost_state, BellKind};

pub const CSV_HEADER: &str =
    "beta,beta_prime,wigner_angle_rad,chsh_fixed,chsh_optimal,entropy,schmidt_lambda1,schmidt_lambda2";

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepConfig {
    pub beta_min: f64,
    pub beta_max: f64,
    pub beta_steps: usize,
    pub beta_prime_min: f64,
    pub beta_prime_max: f64,
    pub beta_prime_steps: usize,
    pub mass: f64,
    /// Decimal digits after the point.
    pub precision: usize,
    pub state: BellKind,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            beta_min: 0.0,
            beta_max: 0.99,
            beta_steps: 20,
            beta_prime_min: 0.0,
            beta_prime_max: 0.99,
            beta_prime_steps: 20,
            mass: 1.0,
            precision: 12,
            state: BellKind::PsiMinus,
        }
    }
}

impl SweepConfig {
    /// `0 ≤ min ≤ max < 1`, steps ≥ 1, mass > 0.
    pub fn validate(&self) -> Result<()> {
        for (name_min, name_max, lo, hi, steps) in [
            ("beta_min", "beta_max", self.beta_min, self.beta_max, self.beta_steps),
            (
                "beta_prime_min",
                "beta_prime_max",
                self.beta_prime_min,
                self.beta_prime_max,
                self.beta_prime_steps,
            ),
        ] {
            check_range(name_max, hi, 0.0, 1.0)?;
            if hi >= 1.0 {
                return Err(Error::Superluminal(hi));
            }
            check_range(name_min, lo, 0.0, hi)?;
            if steps == 0 {
                return Err(Error::OutOfRange {
                    name: "steps",
                    value: 0.0,
                    min: 1.0,
                    max: f64::INFINITY,
                });
            }
        }
        if !(self.mass.is_finite() && self.mass > 0.0) {
            return Err(Error::InvalidMass(self.mass));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CsvRow {
    pub beta: f64,
    pub beta_prime: f64,
    pub wigner_angle_rad: f64,
    pub chsh_fixed: f64,
    pub chsh_optimal: f64,
    pub entropy: f64,
    pub schmidt_lambda1: f64,
    pub schmidt_lambda2: f64,
}

impl CsvRow {
    pub fn fields(&self) -> [f64; 8] {
        [
            self.beta,
            self.beta_prime,
            self.wigner_angle_rad,
            self.chsh_fixed,
            self.chsh_optimal,
            self.entropy,
            self.schmidt_lambda1,
            self.schmidt_lambda2,
        ]
    }
}

/// `steps` evenly spaced points from `min` to `max` inclusive.
pub fn grid(min: f64, max: f64, steps: usize) -> Vec<f64> {
    match steps {
        0 => Vec::new(),
        1 => vec![min],
        _ => (0..steps)
            .map(|i| {
                if i + 1 == steps {
                    max
                } else {
                    min + (max - min) * i as f64 / (steps - 1) as f64
                }
            })
            .collect(),
    }
}

pub fn compute_row(kind: BellKind, mass: f64, beta: f64, beta_prime: f64) -> Result<CsvRow> {
    let state = bell_state(kind, beta, mass)?;
    let boosted = boost_state(&state, &boost_along(&Vector3::x(), beta_prime)?)?;
    let decomposition = schmidt(&boosted);
    Ok(CsvRow {
        beta,
        beta_prime,
        wigner_angle_rad: wigner_angle_perpendicular(beta, beta_prime)?,
        chsh_fixed: chsh(&boosted, &ChshDirections::boosted_frame())?,
        chsh_optimal: optimal_chsh(&boosted)?.1,
        entropy: decomposition.entropy(),
        schmidt_lambda1: decomposition.coefficients[0],
        schmidt_lambda2: decomposition.coefficients[1],
    })
}

/// Rows with `beta` as the outer loop, computed in parallel, returned in
/// grid order.
pub fn sweep_rows(config: &SweepConfig) -> Result<Vec<CsvRow>> {
    config.validate()?;
    let betas = grid(config.beta_min, config.beta_max, config.beta_steps);
    let primes = grid(config.beta_prime_min, config.beta_prime_max, config.beta_prime_steps);
    let points: Vec<(f64, f64)> = betas
        .iter()
        .flat_map(|&b| primes.iter().map(move |&bp| (b, bp)))
        .collect();
    points
        .par_iter()
        .map(|&(b, bp)| compute_row(config.state, config.mass, b, bp))
        .collect()
}

/// Fixed-point formatting; values that round to zero print without a sign.
pub fn format_fixed(x: f64, precision: usize) -> String {
    let s = format!("{x:.precision$}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|c| c == b'0' || c == b'.') => rest.to_string(),
        _ => s,
    }
}

pub fn write_csv<W: Write>(rows: &[CsvRow], precision: usize, mut out: W) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for row in rows {
        let line: Vec<String> = row.fields().iter().map(|&x| format_fixed(x, precision)).collect();
        writeln!(out, "{}", line.join(","))?;
    }
    out.flush()
}
