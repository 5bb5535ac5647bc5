use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};
use std::fs::File;
use std::io::{self, BufWriter};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lorentz_bell::bell::{
    bell_original_margin, chsh, correlation, tsirelson_check, ChshDirections, Direction, TSIRELSON,
};
use lorentz_bell::entanglement::von_neumann_entropy;
use lorentz_bell::lhv::{lhv_singlet_exact, lhv_singlet_mc, RngSeed};
use lorentz_bell::little_group::{rotation_reference_axis, wigner_angle_perpendicular};
use lorentz_bell::minkowski::{boost_along, FourMomentum};
use lorentz_bell::poincare_algebra::{verify_algebra_with, GeneratorSet};
use lorentz_bell::states::{bell_state, boost_state_with_rotations, transform_bell_closed_form, BellKind};
use lorentz_bell::sweep::{format_fixed, sweep_rows, write_csv, SweepConfig};
use lorentz_bell::Complex64;
use nalgebra::{Vector3, Vector4};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Wigner rotations, boosted Bell states and CHSH tests.
#[derive(Parser)]
#[command(name = "lorentz-bell", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Wigner angle for a particle moving along z with speed BETA, seen from
    /// a frame boosted along x by BETA_PRIME.
    WignerAngle {
        #[arg(allow_negative_numbers = true)]
        beta: f64,
        #[arg(allow_negative_numbers = true)]
        beta_prime: f64,
    },
    /// Transform a Bell state (phi+, phi-, psi+, psi-) into the boosted frame.
    Transform {
        kind: String,
        #[arg(allow_negative_numbers = true)]
        beta: f64,
        #[arg(allow_negative_numbers = true)]
        beta_prime: f64,
    },
    /// Write a CSV of CHSH values and entanglement over a (beta, beta') grid.
    ChshSweep(SweepArgs),
    /// Local hidden-variable Monte Carlo for the singlet at ANGLE radians.
    LhvSim {
        #[arg(allow_negative_numbers = true)]
        angle: f64,
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Verify the Poincaré commutation relations in the 5×5 representation.
    AlgebraCheck {
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        /// Flip the sign of K2 (negative control).
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Maximal CHSH violation of the singlet and the original Bell inequality.
    BellDemo,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 0.0)]
    beta_min: f64,
    #[arg(long, default_value_t = 0.99)]
    beta_max: f64,
    #[arg(long, default_value_t = 20)]
    beta_steps: usize,
    #[arg(long, default_value_t = 0.0)]
    beta_prime_min: f64,
    #[arg(long, default_value_t = 0.99)]
    beta_prime_max: f64,
    #[arg(long, default_value_t = 20)]
    beta_prime_steps: usize,
    #[arg(long, default_value_t = 1.0)]
    mass: f64,
    /// Digits after the decimal point.
    #[arg(long, default_value_t = 12)]
    precision: usize,
    /// Bell state to boost.
    #[arg(long, default_value = "psi-")]
    state: String,
    /// Output file; stdout when omitted.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<lorentz_bell::Error> for Failure {
    fn from(e: lorentz_bell::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Check(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn parse_kind(s: &str) -> Result<BellKind, Failure> {
    s.parse().map_err(|e: lorentz_bell::Error| Failure::Usage(e.to_string()))
}

fn fmt_vec(v: &Vector3<f64>) -> String {
    format!("({}, {}, {})", format_fixed(v.x, 6), format_fixed(v.y, 6), format_fixed(v.z, 6))
}

/// `+` or `-` prefixed, nine decimals; values that round to zero get `+`.
fn signed(x: f64) -> String {
    let s = format_fixed(x, 9);
    if s.starts_with('-') {
        s
    } else {
        format!("+{s}")
    }
}

fn fmt_amplitudes(a: &Vector4<Complex64>) -> String {
    let parts: Vec<String> = a
        .iter()
        .map(|z| format!("{}{}i", signed(z.re), signed(z.im)))
        .collect();
    format!("[{}]", parts.join(", "))
}

fn wigner_angle(beta: f64, beta_prime: f64) -> CmdResult {
    let closed = wigner_angle_perpendicular(beta, beta_prime)?;
    let p = FourMomentum::from_velocity(1.0, &Vector3::z(), beta)?;
    let w = lorentz_bell::little_group::wigner_rotation(&boost_along(&Vector3::x(), beta_prime)?, &p)?;
    let n = rotation_reference_axis(&Vector3::x(), &Vector3::z());
    let matrix = w.signed_angle_about(&n);
    println!("beta = {beta}, beta' = {beta_prime}");
    println!("theta_W (closed form) = {closed:.12} rad");
    println!("theta_W (matrix)      = {matrix:.12} rad");
    println!("rotation axis         = {}", fmt_vec(&w.axis()));
    println!("rotation angle        = {:.12} rad", w.angle());
    println!("difference            = {:.3e}", (closed - matrix).abs());
    Ok(())
}

fn transform(kind: &str, beta: f64, beta_prime: f64) -> CmdResult {
    let kind = parse_kind(kind)?;
    let state = bell_state(kind, beta, 1.0)?;
    let out = boost_state_with_rotations(&state, &boost_along(&Vector3::x(), beta_prime)?)?;
    let theta = wigner_angle_perpendicular(beta, beta_prime)?;
    let closed = transform_bell_closed_form(kind, theta);
    let diff = (out.state.amplitudes() - closed)
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max);
    let [q1, q2] = out.state.momenta();

    println!("state {} ({}), beta = {beta}, beta' = {beta_prime}", kind, kind.symbol());
    println!("theta_W = {theta:.12} rad");
    println!("momenta (units of m):");
    println!("  p1' = {}", fmt_vec(&q1.spatial()));
    println!("  p2' = {}", fmt_vec(&q2.spatial()));
    println!("amplitudes over (uu, ud, du, dd):");
    println!("  before      {}", fmt_amplitudes(state.amplitudes()));
    println!("  closed form {}", fmt_amplitudes(&closed));
    println!("  boost_state {}", fmt_amplitudes(out.state.amplitudes()));
    println!("  max difference = {diff:.3e}");
    println!(
        "entropy: before {:.12}, after {:.12}",
        von_neumann_entropy(&state),
        von_neumann_entropy(&out.state)
    );
    Ok(())
}

fn chsh_sweep(args: &SweepArgs) -> CmdResult {
    let config = SweepConfig {
        beta_min: args.beta_min,
        beta_max: args.beta_max,
        beta_steps: args.beta_steps,
        beta_prime_min: args.beta_prime_min,
        beta_prime_max: args.beta_prime_max,
        beta_prime_steps: args.beta_prime_steps,
        mass: args.mass,
        precision: args.precision,
        state: parse_kind(&args.state)?,
    };
    let rows = sweep_rows(&config)?;
    match &args.output {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| Failure::Check(format!("cannot write {}: {e}", path.display())))?;
            write_csv(&rows, config.precision, BufWriter::new(file))?;
        }
        None => write_csv(&rows, config.precision, io::stdout().lock())?,
    }
    Ok(())
}

fn lhv_sim(angle: f64, samples: u64, seed: u64) -> CmdResult {
    let exact = lhv_singlet_exact(angle)?;
    let a = Direction::z();
    let b = Direction::from_angles(angle, 0.0);
    let e = lhv_singlet_mc(&a, &b, samples, RngSeed(seed))?;
    println!("angle = {angle:.9} rad");
    println!(
        "LHV Monte Carlo = {:.6} ± {:.6} (n = {}, seed = {seed})",
        e.estimate, e.std_error, e.samples
    );
    println!("LHV exact       = {exact:.6}");
    println!("QM singlet      = {:.6}", -angle.cos());
    Ok(())
}

fn algebra_check(tol: f64, inject_fault: bool) -> CmdResult {
    let mut set = GeneratorSet::standard();
    if inject_fault {
        set.k[1] = -set.k[1];
    }
    let report = verify_algebra_with(&set, tol);
    print!("{report}");
    println!("tolerance {tol:e}, max deviation {:.3e}", report.max_deviation());
    if report.all_passed() {
        println!("all relations hold");
        Ok(())
    } else {
        Err(Failure::Check("commutation relations violated".into()))
    }
}

fn bell_demo() -> CmdResult {
    let singlet = bell_state(BellKind::PsiMinus, 0.0, 1.0)?;
    let d = ChshDirections::singlet_optimal();
    println!("singlet, a = {}, a' = {}, b = {}, b' = {}", d.a, d.a_prime, d.b, d.b_prime);
    for (label, x, y) in [
        ("C(a,b)  ", &d.a, &d.b),
        ("C(a',b) ", &d.a_prime, &d.b),
        ("C(a',b')", &d.a_prime, &d.b_prime),
        ("C(a,b') ", &d.a, &d.b_prime),
    ] {
        println!("{label} = {:+.12}", correlation(&singlet, x, y)?);
    }
    let value = chsh(&singlet, &d)?;
    let bound = tsirelson_check(&singlet, &d)?.bound;
    println!("CHSH = {value:.12} (2√2 = {TSIRELSON:.12}, local bound 2)");
    println!("state-dependent bound sqrt(4 - <[Q,R]⊗[S,T]>) = {bound:.12}");

    let qm = |t: f64| -t.cos();
    let lhv = |t: f64| lhv_singlet_exact(t);
    println!("original Bell inequality, coplanar angles (ab, bc, ac) = (π/4, π/4, π/2):");
    let m_qm = bell_original_margin(qm(FRAC_PI_4), qm(FRAC_PI_2), qm(FRAC_PI_4))?;
    let m_lhv = bell_original_margin(lhv(FRAC_PI_4)?, lhv(FRAC_PI_2)?, lhv(FRAC_PI_4)?)?;
    println!("  quantum margin 1 + C(b,c) - |C(a,b) - C(a,c)| = {m_qm:+.6} (violated)");
    println!("  local hidden-variable margin                  = {m_lhv:+.6}");
    if (value - TSIRELSON).abs() > 1e-10 {
        return Err(Failure::Check("CHSH differs from 2√2".into()));
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::WignerAngle { beta, beta_prime } => wigner_angle(*beta, *beta_prime),
        Command::Transform { kind, beta, beta_prime } => transform(kind, *beta, *beta_prime),
        Command::ChshSweep(args) => chsh_sweep(args),
        Command::LhvSim { angle, samples, seed } => lhv_sim(*angle, *samples, *seed),
        Command::AlgebraCheck { tol, inject_fault } => algebra_check(*tol, *inject_fault),
        Command::BellDemo => bell_demo(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_CHECK_FAILED)
        }
    }
}
