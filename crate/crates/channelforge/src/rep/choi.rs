//! Choi matrix (B-form) representation.
//!
//! B = Σ_α |D_α⟩⟩⟨⟨D_α| lives on output ⊗ input: the row/column pair index
//! (i', i) combines output index i' with input index i as i'·n + i. In this
//! pairing complete positivity of the map is positive semidefiniteness of B,
//! trace preservation is tr over the *first* (output) factor giving the
//! identity, and unitality is the same over the *second* (input) factor.

use crate::error::{Error, Result};
use crate::mat::{kron, partial_trace, vec_outer, ComplexMatrix, Factor};
use crate::rep::kraus::KrausSet;
use crate::rep::osd::Osd;
use crate::rep::Representation;

/// B-form / Choi / dynamical matrix: n²×n² on output ⊗ input.
///
/// Hermiticity (⟺ the map preserves Hermiticity) is a *reported* property,
/// not a construction precondition — validators must be able to flag
/// non-Hermiticity-preserving maps rather than never seeing them.
#[derive(Debug, Clone, PartialEq)]
pub struct ChoiB {
    n: usize,
    matrix: ComplexMatrix,
}

impl ChoiB {
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
                "Choi matrix for n = {n} must be {s}x{s}, got {}x{}",
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

    /// B = Σ_α |D_α⟩⟩⟨⟨D_α|.
    pub fn from_kraus(kraus: &KrausSet) -> Self {
        let n = kraus.n();
        let mut b = ComplexMatrix::zeros(n * n, n * n);
        for d in kraus.operators() {
            b = b.add(&vec_outer(d, d)).expect("shapes agree");
        }
        Self { n, matrix: b }
    }

    /// B = Σ |D⟩⟩⟨⟨D| - Σ |F⟩⟩⟨⟨F| from a sum-difference form.
    pub fn from_osd(osd: &Osd) -> Self {
        let n = osd.n();
        let mut b = ComplexMatrix::zeros(n * n, n * n);
        for d in osd.positive_part() {
            b = b.add(&vec_outer(d, d)).expect("shapes agree");
        }
        for f in osd.negative_part() {
            b = b.sub(&vec_outer(f, f)).expect("shapes agree");
        }
        Self { n, matrix: b }
    }

    /// Frobenius deviation of tr_first(B) from the identity — the
    /// trace-preservation condition in this pairing.
    pub fn tp_deviation(&self) -> f64 {
        let first = partial_trace(&self.matrix, self.n, self.n, Factor::First)
            .expect("Choi matrix is n²×n²");
        first
            .sub(&ComplexMatrix::identity(self.n))
            .expect("shapes agree")
            .frobenius_norm()
    }

    /// Frobenius deviation of tr_second(B) from the identity — the
    /// unitality condition E(1) = 1.
    pub fn unital_deviation(&self) -> f64 {
        let second = partial_trace(&self.matrix, self.n, self.n, Factor::Second)
            .expect("Choi matrix is n²×n²");
        second
            .sub(&ComplexMatrix::identity(self.n))
            .expect("shapes agree")
            .frobenius_norm()
    }
}

impl Representation for ChoiB {
    fn dim(&self) -> usize {
        self.n
    }

    fn kind_name(&self) -> &'static str {
        "choi"
    }

    /// E(ρ) = tr_second[(1 ⊗ ρᵀ) B]: contracting the input slot of B with
    /// ρ reproduces Σ DρD†.
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
        let lifted = kron(&ComplexMatrix::identity(self.n), &rho.transpose());
        partial_trace(
            &lifted.matmul(&self.matrix)?,
            self.n,
            self.n,
            Factor::Second,
        )
    }

    fn to_choi(&self) -> Result<ChoiB> {
        Ok(self.clone())
    }
}
