//! Error type shared across the crate.
//!
//! Every fallible operation returns [`Result`]. Variants carry the numbers a
//! caller needs to report a failure precisely (deviations, witness
//! eigenvalues), not just a message.

/// Crate-wide error type.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Shapes or lengths do not line up (matrix products, vec/mat, kron
    /// factors, state vs. channel dimension, ...).
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A matrix required to be Hermitian deviates from m = m† beyond the
    /// given tolerance. `deviation` is the max entrywise |m - m†|.
    #[error("not Hermitian: max |m - m\u{2020}| entry {deviation:.3e} exceeds tolerance {tolerance:.3e}")]
    NotHermitian { deviation: f64, tolerance: f64 },

    /// A map required to be completely positive has a negative Choi
    /// eigenvalue. `min_eigenvalue` is the witness.
    #[error("not completely positive: min Choi eigenvalue {min_eigenvalue:.6e}")]
    NotCompletelyPositive { min_eigenvalue: f64 },

    /// A map required to be trace preserving is not. `deviation` is the
    /// Frobenius norm of (trace condition - identity).
    #[error("not trace preserving: deviation {deviation:.3e}")]
    NotTracePreserving { deviation: f64 },

    /// A matrix required to be unitary is not. `deviation` is the max
    /// entrywise |u†u - 1|.
    #[error("not unitary: max |u\u{2020}u - 1| entry {deviation:.3e}")]
    NotUnitary { deviation: f64 },

    /// An operator basis fails tr(A_j† A_k) = δ_jk beyond tolerance.
    #[error("operator basis not orthonormal: max |tr(A_j\u{2020} A_k) - \u{3b4}_jk| = {deviation:.3e}")]
    BasisNotOrthonormal { deviation: f64 },

    /// A probability vector has negative entries or does not sum to one.
    #[error("invalid probability vector: {0}")]
    InvalidProbabilities(String),

    /// Malformed or unphysical input that fits no more specific variant
    /// (non-finite entries, empty Kraus list, unknown names, bad flags).
    #[error("invalid input: {0}")]
    Invalid(String),

    /// The Jacobi eigensolver did not reach its off-diagonal threshold
    /// within the sweep budget.
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:.3e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    /// JSON (de)serialization failure, wrapped as text.
    #[error("json: {0}")]
    Json(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
