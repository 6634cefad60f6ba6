//! Superoperator (A-form) representation.
//!
//! The channel acts by plain matrix multiplication on vectorized states:
//! |E(ρ)⟩⟩ = A |ρ⟩⟩, with A an n²×n² complex matrix in the row-major
//! vectorization convention.

use crate::error::{Error, Result};
use crate::mat::{kron, mat_op, reshuffle, vec_op, ComplexMatrix};
use crate::rep::choi::ChoiB;
use crate::rep::kraus::KrausSet;
use crate::rep::Representation;

/// A-form: n²×n² matrix acting on |ρ⟩⟩.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperopA {
    n: usize,
    matrix: ComplexMatrix,
}

impl SuperopA {
    /// Wrap an n²×n² matrix. Errors on shape mismatch.
    pub fn new(n: usize, matrix: ComplexMatrix) -> Result<Self> {
        if n == 0 {
            return Err(Error::Dimension("system dimension must be positive".into()));
        }
        let s = n.checked_mul(n).ok_or_else(|| {
            Error::Dimension(format!("system dimension {n} overflows when squared"))
        })?;
        if matrix.rows() != s || matrix.cols() != s {
            return Err(Error::Dimension(format!(
                "A-form for n = {n} must be {s}x{s}, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Self { n, matrix })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// A = Σ_α D_α ⊗ D_α*, from the action |DρD†⟩⟩ = (D ⊗ D*)|ρ⟩⟩.
    pub fn from_kraus(kraus: &KrausSet) -> Self {
        let n = kraus.n();
        let mut a = ComplexMatrix::zeros(n * n, n * n);
        for d in kraus.operators() {
            a = a.add(&kron(d, &d.conj())).expect("shapes agree");
        }
        Self { n, matrix: a }
    }

    /// A-form from the Choi matrix: the reshuffle is its own inverse.
    pub fn from_choi(choi: &ChoiB) -> Self {
        let n = choi.n();
        Self {
            n,
            matrix: reshuffle(choi.matrix(), n).expect("Choi matrix is n²×n²"),
        }
    }

    /// Max entrywise deviation of the trace-preservation condition
    /// Σ_{i'} A[(i',i'),(i,j)] = δ_ij.
    pub fn tp_deviation(&self) -> f64 {
        let n = self.n;
        let mut dev: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let mut s = num_complex::Complex64::ZERO;
                for ip in 0..n {
                    s += self.matrix[(ip * n + ip, i * n + j)];
                }
                let target = if i == j { 1.0 } else { 0.0 };
                dev = dev.max((s - num_complex::Complex64::new(target, 0.0)).norm());
            }
        }
        dev
    }
}

impl Representation for SuperopA {
    fn dim(&self) -> usize {
        self.n
    }

    fn kind_name(&self) -> &'static str {
        "superop"
    }

    fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        if rho.rows() != self.n || rho.cols() != self.n {
            return Err(Error::Dimension(format!(
                "state is {}x{}, channel acts on {}x{}",
                rho.rows(),
                rho.cols(),
                self.n,
                self.n
            )));
        }
        mat_op(&self.matrix.matmul(&vec_op(rho))?, self.n)
    }

    fn to_choi(&self) -> Result<ChoiB> {
        ChoiB::new(self.n, reshuffle(&self.matrix, self.n)?)
    }
}
