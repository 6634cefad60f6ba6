//! Channel properties: validation, comparison, positivity probing.
//!
//! Trace preservation is checked natively on whatever representation is at
//! hand (partial trace of B, ΣD†D for Kraus sets, …); complete positivity
//! is always the spectrum of the Choi matrix; Hermiticity preservation is
//! Hermiticity of B. The [`ValidationReport`] bundles all of it for one
//! channel at one tolerance.

use serde::Serialize;

use crate::eig::hermitian_eig;
use crate::error::{Error, Result};
use crate::mat::ComplexMatrix;
use crate::qubit::density_from_bloch;
use crate::random;
use crate::rep::Channel;
use crate::tol;

/// Everything the validator measures about one channel.
#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    /// Channel dimension n (the map acts on n×n matrices).
    pub dim: usize,
    /// Representation the channel arrived in.
    pub kind: String,
    /// Whether the Choi matrix is Hermitian within tolerance.
    pub hermiticity_preserving: bool,
    /// max |B - B†| entry.
    pub hermiticity_deviation: f64,
    /// Whether the map preserves trace within tolerance.
    pub trace_preserving: bool,
    /// Native-representation deviation from the TP condition.
    pub trace_deviation: f64,
    /// Whether the Choi matrix is PSD within tolerance.
    pub completely_positive: bool,
    /// Smallest eigenvalue of the (symmetrized) Choi matrix.
    pub min_choi_eigenvalue: f64,
    /// Whether E(1) = 1 within tolerance.
    pub unital: bool,
    /// Frobenius deviation of E(1) from the identity.
    pub unital_deviation: f64,
    /// Number of Choi eigenvalues with |λ| above the drop threshold.
    pub kraus_rank: usize,
    /// tr B (n for a TP map).
    pub choi_trace: f64,
    /// The tolerance all the booleans were judged at.
    pub tolerance_used: f64,
}

/// Native trace-preservation deviation. Zero iff Σ_α D†D = 1 (equivalently
/// tr_first B = 1); each representation checks its own form of that
/// condition, so no conversion noise enters.
pub fn check_tp(ch: &Channel) -> f64 {
    match ch {
        Channel::Superop(a) => a.tp_deviation(),
        Channel::Choi(b) => b.tp_deviation(),
        Channel::Kraus(k) => k.tp_deviation(),
        Channel::Chi(chi) => {
            // Σ_ij χ_ij A_j† A_i = 1.
            let n = chi.n();
            let mut sum = ComplexMatrix::zeros(n, n);
            let basis = chi.basis();
            for i in 0..basis.len() {
                for j in 0..basis.len() {
                    let w = chi.matrix()[(i, j)];
                    let term = basis[j].adjoint().matmul(&basis[i]).expect("square");
                    sum = sum.add(&term.scale(w)).expect("shapes agree");
                }
            }
            sum.sub(&ComplexMatrix::identity(n))
                .expect("shapes agree")
                .frobenius_norm()
        }
        Channel::Stinespring(st) => st
            .to_kraus()
            .map(|k| k.tp_deviation())
            .unwrap_or(f64::INFINITY),
        Channel::Osd(osd) => osd.tp_deviation(),
        // Affine maps are TP by construction: tr ρ is not a degree of
        // freedom of (T, t).
        Channel::AffineQubit(_) => 0.0,
    }
}

/// Smallest eigenvalue of the symmetrized Choi matrix and whether it clears
/// -tol. (Symmetrizing first keeps the check usable on maps whose B picked
/// up rounding-level asymmetry.)
pub fn check_cp(ch: &Channel, psd_tol: f64) -> Result<(bool, f64)> {
    let b = ch.to_choi()?;
    let eig = hermitian_eig(&b.matrix().symmetrize(), f64::INFINITY)?;
    let min = eig
        .eigenvalues()
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min);
    Ok((min >= -psd_tol, min))
}

/// Frobenius deviation of E(1) from 1 (via tr_second of the Choi matrix).
pub fn check_unital(ch: &Channel) -> Result<f64> {
    Ok(ch.to_choi()?.unital_deviation())
}

/// Hermiticity deviation of the (unsymmetrized) Choi matrix — zero iff the
/// map sends Hermitian inputs to Hermitian outputs.
pub fn check_hermiticity_preserving(ch: &Channel) -> Result<f64> {
    Ok(ch.to_choi()?.matrix().hermiticity_deviation())
}

/// Number of Choi eigenvalues with |λ| > the drop threshold — the minimal
/// number of operators in a sum(-difference) form.
pub fn kraus_rank(ch: &Channel) -> Result<usize> {
    let b = ch.to_choi()?;
    let eig = hermitian_eig(&b.matrix().symmetrize(), f64::INFINITY)?;
    Ok(eig
        .eigenvalues()
        .iter()
        .filter(|l| l.abs() > tol::KRAUS_DROP)
        .count())
}

/// The state B/n dual to a CP map — errors with the CP witness if the map
/// is not CP, since only then is B/n a density matrix.
pub fn choi_state(ch: &Channel, psd_tol: f64) -> Result<ComplexMatrix> {
    let (cp, min) = check_cp(ch, psd_tol)?;
    if !cp {
        return Err(Error::NotCompletelyPositive {
            min_eigenvalue: min,
        });
    }
    let b = ch.to_choi()?;
    Ok(b.matrix().scale_re(1.0 / ch.dim() as f64))
}

/// Frobenius distance between the Choi matrices of two channels.
pub fn choi_distance(a: &Channel, b: &Channel) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::Dimension(format!(
            "channels act on different dimensions: {} vs {}",
            a.dim(),
            b.dim()
        )));
    }
    a.to_choi()?
        .matrix()
        .frobenius_distance(b.to_choi()?.matrix())
}

/// Whether two channels are the same map within `tol`, judged in the Choi
/// (representation-independent) picture.
pub fn same_channel(a: &Channel, b: &Channel, tol: f64) -> Result<bool> {
    Ok(choi_distance(a, b)? <= tol)
}

/// One positivity violation found while probing: the offending input state
/// and the most negative output eigenvalue.
#[derive(Debug, Clone)]
pub struct DomainViolation {
    pub input: ComplexMatrix,
    pub min_eigenvalue: f64,
}

/// Result of sampling the state space for positivity violations.
#[derive(Debug, Clone)]
pub struct DomainProbeResult {
    pub samples_tested: usize,
    pub violations: Vec<DomainViolation>,
}

impl DomainProbeResult {
    pub fn all_positive(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Sample density matrices and record every input whose output fails PSD by
/// more than `psd_tol`.
///
/// An NCP map can still be *positive* — send every state to a state — as
/// long as no entangled extension is involved; probing the domain separates
/// those (pancake, transpose) from maps that already break on some input.
/// Qubit channels are probed with uniform ball states, larger dimensions
/// with random pure states (the extreme points).
pub fn probe_positivity_domain(
    ch: &Channel,
    n_samples: usize,
    seed: u64,
    psd_tol: f64,
) -> Result<DomainProbeResult> {
    let mut rng = random::rng_from_seed(seed);
    let mut violations = Vec::new();
    for _ in 0..n_samples {
        let rho = if ch.dim() == 2 {
            density_from_bloch(&random::bloch_in_ball(&mut rng))?
        } else {
            random::random_pure_density(ch.dim(), &mut rng)
        };
        let out = ch.apply(&rho)?.symmetrize();
        let eig = hermitian_eig(&out, f64::INFINITY)?;
        let min = eig
            .eigenvalues()
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min);
        if min < -psd_tol {
            violations.push(DomainViolation {
                input: rho,
                min_eigenvalue: min,
            });
        }
    }
    Ok(DomainProbeResult {
        samples_tested: n_samples,
        violations,
    })
}

/// Run every check at one tolerance and bundle the outcome.
pub fn validate(ch: &Channel, tolerance: f64) -> Result<ValidationReport> {
    let herm_dev = check_hermiticity_preserving(ch)?;
    let tp_dev = check_tp(ch);
    let (cp, min_eig) = check_cp(ch, tolerance)?;
    let unital_dev = check_unital(ch)?;
    let rank = kraus_rank(ch)?;
    let choi_trace = ch.to_choi()?.matrix().trace().re;
    Ok(ValidationReport {
        dim: ch.dim(),
        kind: ch.kind_name().to_string(),
        hermiticity_preserving: herm_dev <= tolerance,
        hermiticity_deviation: herm_dev,
        trace_preserving: tp_dev <= tolerance,
        trace_deviation: tp_dev,
        completely_positive: cp,
        min_choi_eigenvalue: min_eig,
        unital: unital_dev <= tolerance,
        unital_deviation: unital_dev,
        kraus_rank: rank,
        choi_trace,
        tolerance_used: tolerance,
    })
}
