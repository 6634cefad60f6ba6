//! Central numerical tolerances.
//!
//! Every tolerance the crate uses lives here with one documented default, so
//! a check never hides a magic number at its call site. Functions that take a
//! `tol` parameter default to these values through the convenience
//! constructors/wrappers that omit it.

/// Hermiticity tolerance: max entrywise |m - m†| allowed before a matrix is
/// rejected as non-Hermitian (eigensolver input, Choi matrices, densities).
pub const HERMITICITY: f64 = 1e-9;

/// Positive-semidefiniteness tolerance: eigenvalues ≥ -PSD count as
/// non-negative. Used for CP verdicts, density-matrix checks, and the
/// positivity-domain probe.
pub const PSD: f64 = 1e-9;

/// Eigenvalue cutoff below which a canonical Kraus operator is dropped when
/// extracting an operator-sum representation from a Choi matrix.
pub const KRAUS_DROP: f64 = 1e-10;

/// Default Choi-matrix Frobenius distance under which two channels are
/// considered the same map.
pub const SAME_CHANNEL: f64 = 1e-8;

/// Operator-basis orthonormality tolerance: max |tr(A_j† A_k) - δ_jk|.
pub const BASIS_ORTHONORMALITY: f64 = 1e-10;

/// Unitarity tolerance for user-supplied unitaries (environment models,
/// unitary channels): max entrywise |u†u - 1|.
pub const UNITARITY: f64 = 1e-9;

/// Jacobi eigensolver: stop once the off-diagonal Frobenius norm falls below
/// this threshold times max(1, ‖input‖_F).
pub const JACOBI_OFF_THRESHOLD: f64 = 1e-14;

/// Jacobi eigensolver: hard sweep budget; exceeding it is a convergence
/// error (cyclic Jacobi on Hermitian input converges in far fewer sweeps).
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Trace drift |tr ρ(t) - 1| beyond which an integrated trajectory is
/// declared a numerical failure.
pub const TRACE_DRIFT_LIMIT: f64 = 1e-3;
