use nalgebra::Vector3;
use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use lorentz_bell::bell::{self, ChshDirections, Direction};
use lorentz_bell::entanglement;
use lorentz_bell::lhv::{self, RngSeed};
use lorentz_bell::little_group;
use lorentz_bell::minkowski::{self, FourMomentum};
use lorentz_bell::poincare_algebra;
use lorentz_bell::states::{self, BellKind, BipartiteState};
use lorentz_bell::sweep::{self, SweepConfig};

fn err(e: lorentz_bell::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn direction(v: [f64; 3]) -> PyResult<Direction> {
    Direction::normalize(Vector3::from(v)).map_err(err)
}

fn as_array(d: &Direction) -> [f64; 3] {
    d.vector().into()
}

fn quadruple(a: [f64; 3], a_prime: [f64; 3], b: [f64; 3], b_prime: [f64; 3]) -> PyResult<ChshDirections> {
    Ok(ChshDirections {
        a: direction(a)?,
        a_prime: direction(a_prime)?,
        b: direction(b)?,
        b_prime: direction(b_prime)?,
    })
}

/// Two spin-½ particles with sharp momenta. Amplitudes are ordered
/// (↑↑, ↑↓, ↓↑, ↓↓), particle 1 first.
#[pyclass(name = "TwoParticleState", frozen, from_py_object)]
#[derive(Clone)]
struct PyState(BipartiteState);

#[pymethods]
impl PyState {
    /// Bell state ("phi+", "phi-", "psi+", "psi-") with the particles moving
    /// along ±z at speed `beta`.
    #[staticmethod]
    #[pyo3(signature = (kind, beta, mass = 1.0))]
    fn bell(kind: &str, beta: f64, mass: f64) -> PyResult<Self> {
        let kind: BellKind = kind.parse().map_err(err)?;
        states::bell_state(kind, beta, mass).map(PyState).map_err(err)
    }

    /// Both particles at rest; amplitudes are normalized.
    #[staticmethod]
    #[pyo3(signature = (amplitudes, mass = 1.0))]
    fn at_rest(amplitudes: [Complex64; 4], mass: f64) -> PyResult<Self> {
        let p = FourMomentum::at_rest(mass).map_err(err)?;
        BipartiteState::normalized(p, p, amplitudes.into())
            .map(PyState)
            .map_err(err)
    }

    /// State seen from a frame moving with speed `beta` along `axis`.
    #[pyo3(signature = (beta, axis = [1.0, 0.0, 0.0]))]
    fn boost(&self, beta: f64, axis: [f64; 3]) -> PyResult<Self> {
        let lambda = minkowski::boost_along(&Vector3::from(axis), beta).map_err(err)?;
        states::boost_state(&self.0, &lambda).map(PyState).map_err(err)
    }

    #[getter]
    fn amplitudes(&self) -> Vec<Complex64> {
        self.0.amplitudes().iter().copied().collect()
    }

    /// `(E, px, py, pz)` for each particle.
    #[getter]
    fn momenta(&self) -> Vec<[f64; 4]> {
        self.0
            .momenta()
            .iter()
            .map(|p| p.four_vector().to_vector().into())
            .collect()
    }

    #[getter]
    fn kinematic_factor(&self) -> f64 {
        self.0.kinematic_factor()
    }

    fn schmidt_coefficients(&self) -> [f64; 2] {
        entanglement::schmidt(&self.0).coefficients
    }

    fn entropy(&self) -> f64 {
        entanglement::von_neumann_entropy(&self.0)
    }

    #[pyo3(signature = (tol = 1e-10))]
    fn is_separable(&self, tol: f64) -> bool {
        entanglement::is_separable(&self.0, tol)
    }

    fn correlation(&self, a: [f64; 3], b: [f64; 3]) -> PyResult<f64> {
        bell::correlation(&self.0, &direction(a)?, &direction(b)?).map_err(err)
    }

    fn correlation_tensor(&self) -> PyResult<[[f64; 3]; 3]> {
        let t = bell::correlation_tensor(&self.0).map_err(err)?.0;
        Ok([0, 1, 2].map(|i| [0, 1, 2].map(|j| t[(i, j)])))
    }

    fn chsh(&self, a: [f64; 3], a_prime: [f64; 3], b: [f64; 3], b_prime: [f64; 3]) -> PyResult<f64> {
        bell::chsh(&self.0, &quadruple(a, a_prime, b, b_prime)?).map_err(err)
    }

    /// CHSH with the xy-plane axes that are optimal for the singlet at rest.
    fn chsh_boosted_frame(&self) -> PyResult<f64> {
        bell::chsh(&self.0, &ChshDirections::boosted_frame()).map_err(err)
    }

    /// `(value, (a, a_prime, b, b_prime))` for the maximizing axes.
    #[allow(clippy::type_complexity)]
    fn optimal_chsh(&self) -> PyResult<(f64, ([f64; 3], [f64; 3], [f64; 3], [f64; 3]))> {
        let (d, v) = bell::optimal_chsh(&self.0).map_err(err)?;
        Ok((v, (as_array(&d.a), as_array(&d.a_prime), as_array(&d.b), as_array(&d.b_prime))))
    }

    /// `(value, bound)` with bound `√(4 − ⟨[Q,R]⊗[S,T]⟩)`.
    fn tsirelson(&self, a: [f64; 3], a_prime: [f64; 3], b: [f64; 3], b_prime: [f64; 3]) -> PyResult<(f64, f64)> {
        let c = bell::tsirelson_check(&self.0, &quadruple(a, a_prime, b, b_prime)?).map_err(err)?;
        Ok((c.value, c.bound))
    }

    fn __repr__(&self) -> String {
        let amps: Vec<String> = self
            .0
            .amplitudes()
            .iter()
            .map(|z| format!("{:.6}{:+.6}j", z.re, z.im))
            .collect();
        format!("TwoParticleState([{}])", amps.join(", "))
    }
}

#[pyfunction]
fn gamma(beta: f64) -> PyResult<f64> {
    minkowski::gamma(beta).map_err(err)
}

/// 4×4 matrix of a frame boost with speed `beta` along `axis`.
#[pyfunction]
fn boost_matrix(axis: [f64; 3], beta: f64) -> PyResult<[[f64; 4]; 4]> {
    let m = *minkowski::boost_along(&Vector3::from(axis), beta).map_err(err)?.matrix();
    Ok([0, 1, 2, 3].map(|i| [0, 1, 2, 3].map(|j| m[(i, j)])))
}

/// Closed-form Wigner angle for motion along z seen from a frame boosted along x.
#[pyfunction]
fn wigner_angle(beta: f64, beta_prime: f64) -> PyResult<f64> {
    little_group::wigner_angle_perpendicular(beta, beta_prime).map_err(err)
}

/// Same angle extracted from `L⁻¹(Λp) Λ L(p)`.
#[pyfunction]
fn wigner_angle_matrix(beta: f64, beta_prime: f64) -> PyResult<f64> {
    let p = FourMomentum::from_velocity(1.0, &Vector3::z(), beta).map_err(err)?;
    let lambda = minkowski::boost_along(&Vector3::x(), beta_prime).map_err(err)?;
    let w = little_group::wigner_rotation(&lambda, &p).map_err(err)?;
    Ok(w.signed_angle_about(&little_group::rotation_reference_axis(&Vector3::x(), &Vector3::z())))
}

#[pyfunction]
fn chsh_closed_form(theta_w: f64) -> f64 {
    bell::chsh_closed_form(theta_w)
}

#[pyfunction]
fn chsh_velocity_form(beta: f64, beta_prime: f64) -> PyResult<f64> {
    bell::chsh_velocity_form(beta, beta_prime).map_err(err)
}

#[pyfunction]
fn bell_original_margin(c_ab: f64, c_ac: f64, c_bc: f64) -> PyResult<f64> {
    bell::bell_original_margin(c_ab, c_ac, c_bc).map_err(err)
}

#[pyfunction]
fn lhv_singlet_exact(theta: f64) -> PyResult<f64> {
    lhv::lhv_singlet_exact(theta).map_err(err)
}

/// `(estimate, std_error)` of the singlet sign model at angle `theta`.
#[pyfunction]
#[pyo3(signature = (theta, samples = 1_000_000, seed = 0))]
fn lhv_singlet_mc(py: Python<'_>, theta: f64, samples: u64, seed: u64) -> PyResult<(f64, f64)> {
    let e = py.detach(|| {
        lhv::lhv_singlet_mc(&Direction::z(), &Direction::from_angles(theta, 0.0), samples, RngSeed(seed))
    });
    let e = e.map_err(err)?;
    Ok((e.estimate, e.std_error))
}

/// `[(name, relation, max_deviation, passed), ...]` for the Poincaré algebra.
#[pyfunction]
#[pyo3(signature = (tol = 1e-12))]
fn verify_algebra(tol: f64) -> Vec<(String, String, f64, bool)> {
    poincare_algebra::verify_algebra(tol)
        .relations
        .into_iter()
        .map(|r| (r.name.to_string(), r.relation.to_string(), r.max_deviation, r.passed))
        .collect()
}

/// CHSH sweep as CSV text.
#[pyfunction]
#[pyo3(signature = (beta_max = 0.99, steps = 20, state = "psi-", precision = 12))]
fn sweep_csv(py: Python<'_>, beta_max: f64, steps: usize, state: &str, precision: usize) -> PyResult<String> {
    let config = SweepConfig {
        beta_max,
        beta_steps: steps,
        beta_prime_max: beta_max,
        beta_prime_steps: steps,
        precision,
        state: state.parse().map_err(err)?,
        ..SweepConfig::default()
    };
    let rows = py.detach(|| sweep::sweep_rows(&config)).map_err(err)?;
    let mut buf = Vec::new();
    sweep::write_csv(&rows, precision, &mut buf).map_err(|e| PyValueError::new_err(e.to_string()))?;
    String::from_utf8(buf).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pymodule]
#[pyo3(name = "lorentz_bell")]
fn lorentz_bell_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyState>()?;
    m.add_function(wrap_pyfunction!(gamma, m)?)?;
    m.add_function(wrap_pyfunction!(boost_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(wigner_angle, m)?)?;
    m.add_function(wrap_pyfunction!(wigner_angle_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(chsh_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(chsh_velocity_form, m)?)?;
    m.add_function(wrap_pyfunction!(bell_original_margin, m)?)?;
    m.add_function(wrap_pyfunction!(lhv_singlet_exact, m)?)?;
    m.add_function(wrap_pyfunction!(lhv_singlet_mc, m)?)?;
    m.add_function(wrap_pyfunction!(verify_algebra, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_csv, m)?)?;
    m.add("TSIRELSON", bell::TSIRELSON)?;
    Ok(())
}
