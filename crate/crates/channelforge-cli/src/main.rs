//! Command-line front end for the channelforge library.
//!
//! Conventions shared by every subcommand:
//!
//! * machine-readable data (channel JSON, density JSON, CSV) goes to stdout;
//!   warnings, diagnostics, and summaries go to stderr;
//! * exit codes: 0 success, 1 validation failed, 2 input error,
//!   3 numerical failure;
//! * every run is deterministic given its inputs, flags, and seed. Sampling
//!   commands read the seed from `--seed`, then `$CHANNELFORGE_SEED`,
//!   then fall back to 0.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use channelforge::dynamics::{self, EvolutionConfig, SchemeKind};
use channelforge::eig;
use channelforge::io;
use channelforge::props;
use channelforge::qubit::image::{bloch_image_sample, SampleMode};
use channelforge::qubit::zoo::{self, ZooParams};
use channelforge::rep::chi::{pauli_basis_normalized, standard_basis};
use channelforge::{c64, tol, Channel, ComplexMatrix, Error, RepKind};

const EXIT_VALIDATION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_NUMERICAL: u8 = 3;

/// A failed command: message for stderr plus the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn numerical(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_NUMERICAL,
            message: message.into(),
        }
    }

    fn validation(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_VALIDATION,
            message: message.into(),
        }
    }
}

/// Library errors sort into the exit-code taxonomy by what went wrong:
/// malformed or unphysical *inputs* are exit 2, failed *physicality
/// verdicts* about an otherwise well-formed channel are exit 1, and
/// solver breakdowns are exit 3.
impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::NotHermitian { .. }
            | Error::NotCompletelyPositive { .. }
            | Error::NotTracePreserving { .. } => EXIT_VALIDATION,
            Error::NoConvergence { .. } => EXIT_NUMERICAL,
            Error::Dimension(_)
            | Error::NotUnitary { .. }
            | Error::BasisNotOrthonormal { .. }
            | Error::InvalidProbabilities(_)
            | Error::Invalid(_)
            | Error::Json(_) => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "channelforge",
    version,
    about = "Validate, convert, apply, image, and integrate quantum channels",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check a channel for complete positivity and trace preservation.
    ///
    /// Prints the full property report as JSON on stdout and exits 0 only
    /// if the channel is CPTP within the tolerance.
    Validate {
        /// Channel JSON file.
        file: PathBuf,
        /// Tolerance the CP/TP verdicts are judged at.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },

    /// Print the property report without gating the exit code on it.
    ///
    /// Same JSON as `validate`, but well-formed input always exits 0 —
    /// NCP and non-TP maps are first-class citizens here.
    Props {
        /// Channel JSON file.
        file: PathBuf,
        /// Tolerance the boolean verdicts are judged at.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },

    /// Re-express a channel in another representation.
    Convert {
        /// Channel JSON file.
        file: PathBuf,
        /// Target representation.
        #[arg(long, value_enum)]
        to: Target,
        /// Operator basis for `--to chi` (pauli requires n = 2).
        #[arg(long, value_enum, default_value_t = Basis::Standard)]
        basis: Basis,
    },

    /// Apply a channel to a state: print E(rho) as density JSON.
    ///
    /// The input/output traces are reported on stderr; a negative output
    /// eigenvalue is warned about but is not an error (applying an NCP map
    /// outside its positivity domain is legal).
    Apply {
        /// Channel JSON file.
        channel: PathBuf,
        /// State (density matrix) JSON file.
        state: PathBuf,
    },

    /// Sample the image of the Bloch ball under a qubit channel.
    ///
    /// CSV rows `ax,ay,az,bx,by,bz` on stdout; max output radius and
    /// centroid on stderr.
    BlochImage {
        /// Channel JSON file (must be a qubit channel).
        file: PathBuf,
        /// Number of sampled input states.
        #[arg(long, default_value_t = 2048)]
        samples: usize,
        /// RNG seed; defaults to $CHANNELFORGE_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
        /// Sample inputs on the sphere surface or throughout the ball.
        #[arg(long, value_enum, default_value_t = Mode::Surface)]
        mode: Mode,
    },

    /// Integrate a Lindblad generator.
    ///
    /// Emits the trajectory as CSV, or with --emit-channel the integrated
    /// map itself as channel JSON. Trace drift beyond 1e-3 is a numerical
    /// failure (exit 3): shrink the step or switch scheme.
    Lindblad {
        /// Generator JSON file ({"n": .., "H": .., "L": [..], "gamma-absorbed": true}).
        file: PathBuf,
        /// Total evolution time.
        #[arg(long, default_value_t = 1.0)]
        t: f64,
        /// Number of fixed integration steps.
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        /// Integration scheme: euler, rk4, or kraus-step.
        #[arg(long, default_value = "rk4")]
        scheme: String,
        /// Initial state JSON; defaults to the maximal-coherence state
        /// (every entry 1/n).
        #[arg(long)]
        rho0: Option<PathBuf>,
        /// Emit the integrated channel instead of a trajectory.
        #[arg(long)]
        emit_channel: bool,
    },

    /// Construct a named channel from the built-in catalogue.
    ///
    /// `zoo list` enumerates the available names.
    Zoo {
        /// Catalogue name (e.g. depolarizing, pancake-ncp), or "list".
        name: String,
        /// Strength parameter for the parametric entries.
        #[arg(long)]
        p: Option<f64>,
        /// Unitary matrix JSON file for the `unitary` entry.
        #[arg(long)]
        unitary_file: Option<PathBuf>,
        /// Write the channel here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Target {
    Kraus,
    Choi,
    Superop,
    Chi,
    Stinespring,
    Osd,
}

impl Target {
    fn rep_kind(self) -> RepKind {
        match self {
            Target::Kraus => RepKind::Kraus,
            Target::Choi => RepKind::Choi,
            Target::Superop => RepKind::Superop,
            Target::Chi => RepKind::Chi,
            Target::Stinespring => RepKind::Stinespring,
            Target::Osd => RepKind::Osd,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Basis {
    Standard,
    Pauli,
}

#[derive(Copy, Clone, ValueEnum)]
enum Mode {
    Surface,
    Ball,
}

impl Mode {
    fn sample_mode(self) -> SampleMode {
        match self {
            Mode::Surface => SampleMode::Surface,
            Mode::Ball => SampleMode::Ball,
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Validate { file, tol } => cmd_report(&file, tol, true),
        Cmd::Props { file, tol } => cmd_report(&file, tol, false),
        Cmd::Convert { file, to, basis } => cmd_convert(&file, to, basis),
        Cmd::Apply { channel, state } => cmd_apply(&channel, &state),
        Cmd::BlochImage {
            file,
            samples,
            seed,
            mode,
        } => cmd_bloch_image(&file, samples, seed, mode),
        Cmd::Lindblad {
            file,
            t,
            steps,
            scheme,
            rho0,
            emit_channel,
        } => cmd_lindblad(&file, t, steps, &scheme, rho0.as_deref(), emit_channel),
        Cmd::Zoo {
            name,
            p,
            unitary_file,
            out,
        } => cmd_zoo(&name, p, unitary_file.as_deref(), out.as_deref()),
    }
}

// ---------------------------------------------------------------------------
// file plumbing

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn load_channel(path: &Path) -> Result<Channel, Failure> {
    Ok(io::channel_from_json_str(&read_text(path)?)?)
}

fn load_matrix(path: &Path) -> Result<ComplexMatrix, Failure> {
    Ok(io::density_from_json_str(&read_text(path)?)?)
}

/// Resolve the sampling seed: flag, then environment, then 0.
fn resolve_seed(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("CHANNELFORGE_SEED") {
        Ok(v) => v.trim().parse::<u64>().map_err(|_| {
            Failure::input(format!(
                "CHANNELFORGE_SEED must be an unsigned integer, got '{v}'"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(0),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(Failure::input("CHANNELFORGE_SEED is not valid UTF-8"))
        }
    }
}

fn check_tolerance(tol_flag: f64) -> Result<(), Failure> {
    if !tol_flag.is_finite() || tol_flag < 0.0 {
        return Err(Failure::input(format!(
            "--tol must be finite and non-negative, got {tol_flag}"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// subcommands

/// `validate` and `props` share everything but the exit gate.
fn cmd_report(file: &Path, tol_flag: f64, gate: bool) -> Result<(), Failure> {
    check_tolerance(tol_flag)?;
    let ch = load_channel(file)?;
    let report = props::validate(&ch, tol_flag)?;
    print!("{}", io::report_to_json_string(&report));
    if !gate || (report.completely_positive && report.trace_preserving) {
        return Ok(());
    }
    let mut why = Vec::new();
    if !report.completely_positive {
        why.push(format!(
            "not completely positive (min Choi eigenvalue {:.6e})",
            report.min_choi_eigenvalue
        ));
    }
    if !report.trace_preserving {
        why.push(format!(
            "not trace preserving (deviation {:.3e})",
            report.trace_deviation
        ));
    }
    Err(Failure::validation(why.join("; ")))
}

fn cmd_convert(file: &Path, to: Target, basis: Basis) -> Result<(), Failure> {
    let ch = load_channel(file)?;
    if basis == Basis::Pauli && to != Target::Chi {
        return Err(Failure::input(
            "--basis pauli applies only to --to chi; other representations have no basis choice",
        ));
    }
    let converted = match to {
        Target::Chi => {
            let basis_mats = match basis {
                Basis::Standard => standard_basis(ch.dim()),
                Basis::Pauli => {
                    if ch.dim() != 2 {
                        return Err(Failure::input(format!(
                            "the pauli basis is defined for qubit channels only, got n = {}",
                            ch.dim()
                        )));
                    }
                    pauli_basis_normalized()
                }
            };
            Channel::Chi(ch.to_chi(basis_mats)?)
        }
        other => ch.convert_to(other.rep_kind()).map_err(|e| {
            let mut f = Failure::from(e);
            if f.code == EXIT_VALIDATION && matches!(to, Target::Kraus | Target::Stinespring) {
                f.message
                    .push_str("; an NCP map has no operator-sum form — try --to osd");
            }
            f
        })?,
    };
    print!("{}", io::channel_to_json_string(&converted));
    Ok(())
}

fn cmd_apply(channel: &Path, state: &Path) -> Result<(), Failure> {
    let ch = load_channel(channel)?;
    let rho = load_matrix(state)?;
    let out = ch.apply(&rho)?;
    eprintln!(
        "trace: in {} out {}",
        fmt_complex(rho.trace()),
        fmt_complex(out.trace())
    );
    let herm_dev = out.hermiticity_deviation();
    if herm_dev > tol::HERMITICITY {
        eprintln!(
            "warning: output is not Hermitian (max |m - m\u{2020}| entry {herm_dev:.3e}); \
             the channel does not preserve Hermiticity"
        );
    }
    // The spectrum check is a diagnostic, not a gate: report a negative
    // eigenvalue (input outside an NCP map's positivity domain) and move on.
    match eig::hermitian_eig(&out.symmetrize(), f64::INFINITY) {
        Ok(decomp) => {
            if let Some(&min) = decomp.eigenvalues().last() {
                if min < -tol::PSD {
                    eprintln!(
                        "warning: output has negative eigenvalue {min:.6e}; \
                         the input lies outside the map's positivity domain"
                    );
                }
            }
        }
        Err(e) => eprintln!("note: output spectrum diagnostic unavailable: {e}"),
    }
    print!("{}", io::density_to_json_string(&out));
    Ok(())
}

fn cmd_bloch_image(file: &Path, samples: usize, seed: Option<u64>, mode: Mode) -> Result<(), Failure> {
    let ch = load_channel(file)?;
    let seed = resolve_seed(seed)?;
    let image = bloch_image_sample(&ch, samples, seed, mode.sample_mode())?;
    print!("{}", io::bloch_pairs_csv(&image));
    let c = image.centroid();
    eprintln!(
        "max output radius: {}; centroid: ({}, {}, {})",
        image.max_output_norm(),
        c.x,
        c.y,
        c.z
    );
    Ok(())
}

fn cmd_lindblad(
    file: &Path,
    t: f64,
    steps: usize,
    scheme: &str,
    rho0: Option<&Path>,
    emit_channel: bool,
) -> Result<(), Failure> {
    let gen = io::generator_from_json_str(&read_text(file)?)?;
    let kind = SchemeKind::parse(scheme)?;
    let config = EvolutionConfig {
        total_time: t,
        steps,
        scheme: kind,
    };

    if emit_channel {
        // kraus-step composes the CP-by-construction small-step factors;
        // euler/rk4 integrate the matrix units under the chosen stepper.
        let ch = match kind {
            SchemeKind::KrausStep => dynamics::channel_from_generator(&gen, t, steps)?,
            _ => dynamics::channel_via_scheme(&gen, &config)?,
        };
        let tp_dev = props::check_tp(&ch);
        // Negated comparison so NaN also fails.
        if !(tp_dev <= tol::TRACE_DRIFT_LIMIT) {
            return Err(Failure::numerical(format!(
                "integrated channel is not trace preserving (deviation {tp_dev:.3e}); \
                 increase --steps or switch --scheme"
            )));
        }
        print!("{}", io::channel_to_json_string(&ch));
        return Ok(());
    }

    let rho0 = match rho0 {
        Some(path) => {
            let m = load_matrix(path)?;
            let herm_dev = m.hermiticity_deviation();
            if herm_dev > tol::HERMITICITY {
                return Err(Failure::input(format!(
                    "initial state must be Hermitian (max |m - m\u{2020}| entry {herm_dev:.3e})"
                )));
            }
            let tr = m.trace();
            if (tr.re - 1.0).abs() > 1e-9 || tr.im.abs() > 1e-9 {
                return Err(Failure::input(format!(
                    "initial state must have unit trace, got {}",
                    fmt_complex(tr)
                )));
            }
            m
        }
        // Maximal-coherence default |+..+⟩⟨+..+|: every entry 1/n. Its
        // off-diagonals make decoherence visible in the CSV immediately.
        None => {
            let n = gen.n();
            ComplexMatrix::from_fn(n, n, |_, _| c64(1.0 / n as f64, 0.0))
        }
    };

    let traj = dynamics::evolve(&gen, &rho0, &config)?;
    let drift = traj.max_trace_drift();
    if !(drift <= tol::TRACE_DRIFT_LIMIT) {
        return Err(Failure::numerical(format!(
            "trace drift {drift:.3e} exceeds {:.0e}; increase --steps or switch --scheme",
            tol::TRACE_DRIFT_LIMIT
        )));
    }
    print!("{}", io::trajectory_csv(&traj));
    eprintln!("max trace drift: {drift:.3e}");
    Ok(())
}

fn cmd_zoo(
    name: &str,
    p: Option<f64>,
    unitary_file: Option<&Path>,
    out: Option<&Path>,
) -> Result<(), Failure> {
    if name == "list" {
        for entry in zoo::registry() {
            println!("{:<18} {}", entry.name(), entry.describe());
        }
        return Ok(());
    }
    let entry = zoo::by_name(name).ok_or_else(|| {
        let names: Vec<&str> = zoo::registry().iter().map(|e| e.name()).collect();
        Failure::input(format!(
            "unknown zoo channel '{name}'; valid names: {}",
            names.join(", ")
        ))
    })?;
    if p.is_some() && !entry.requires_p() {
        return Err(Failure::input(format!(
            "channel '{name}' does not take --p"
        )));
    }
    if unitary_file.is_some() && !entry.requires_unitary() {
        return Err(Failure::input(format!(
            "channel '{name}' does not take --unitary-file"
        )));
    }
    let unitary = match unitary_file {
        Some(path) => Some(load_matrix(path)?),
        None => None,
    };
    let ch = entry.build(&ZooParams { p, unitary })?;
    let text = io::channel_to_json_string(&ch);
    match out {
        Some(path) => fs::write(path, &text)
            .map_err(|e| Failure::input(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Compact complex scalar for diagnostics: re, or re±im·i.
fn fmt_complex(z: channelforge::Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}{}i", z.re, z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}
