use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("velocity must be < 1 (got {0})")]
    Superluminal(f64),

    #[error("velocity must be non-negative (got {0})")]
    NegativeVelocity(f64),

    #[error("mass must be positive and finite (got {0})")]
    InvalidMass(f64),

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("axis must be a nonzero finite vector")]
    ZeroAxis,

    #[error("expected a unit vector, got norm {0}")]
    NotUnit(f64),

    #[error("not a proper orthochronous Lorentz matrix: {0}")]
    NotLorentz(String),

    #[error("not a pure spatial rotation: {0}")]
    NotRotation(String),

    #[error("Pauli-Lubanski vector is not transverse to the momentum (W·p = {residual:e})")]
    NotTransverse { residual: f64 },

    #[error("{name} = {value} is outside [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("spin amplitudes are not normalized (norm² = {0})")]
    NotNormalized(f64),

    #[error("expectation value of a Hermitian operator has imaginary part {0:e}")]
    ComplexExpectation(f64),

    #[error("numeric consistency check failed: {0}")]
    Numeric(String),

    #[error("unknown Bell state `{0}` (expected phi+, phi-, psi+ or psi-)")]
    UnknownBellKind(String),

    #[error("sample count must be at least 1")]
    NoSamples,
}

pub(crate) fn check_range(name: &'static str, value: f64, min: f64, max: f64) -> Result<f64> {
    if !value.is_finite() {
        return Err(Error::NonFinite(name));
    }
    if value < min || value > max {
        return Err(Error::OutOfRange {
            name,
            value,
            min,
            max,
        });
    }
    Ok(value)
}
