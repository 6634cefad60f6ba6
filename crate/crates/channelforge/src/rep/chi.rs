//! Process (χ) matrix representation.
//!
//! Fix an orthonormal operator basis {A_i} (tr(A_i†A_j) = δ_ij, n² elements).
//! Every map then reads E(ρ) = Σ_ij χ_ij A_i ρ A_j† with χ Hermitian; CP is
//! χ ⪰ 0. With M = [|A_1⟩⟩ … |A_{n²}⟩⟩] the χ and Choi matrices are unitarily
//! congruent, B = M χ M†, so in the matrix-unit basis (where M = 1) χ *is*
//! the Choi matrix entrywise.

use crate::eig::hermitian_eig;
use crate::error::{Error, Result};
use crate::mat::{c64, vec_op, Complex64, ComplexMatrix};
use crate::rep::choi::ChoiB;
use crate::rep::kraus::KrausSet;
use crate::rep::Representation;
use crate::tol;

/// χ-matrix together with the operator basis it is written in.
#[derive(Debug, Clone, PartialEq)]
pub struct ChiMatrix {
    n: usize,
    basis: Vec<ComplexMatrix>,
    matrix: ComplexMatrix,
}

impl ChiMatrix {
    /// Wrap a χ-matrix over an explicit basis. Validates shapes and basis
    /// orthonormality (within `basis_tol`).
    pub fn new(
        n: usize,
        basis: Vec<ComplexMatrix>,
        matrix: ComplexMatrix,
        basis_tol: f64,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::Dimension("system dimension must be positive".into()));
        }
        let s = n.checked_mul(n).ok_or_else(|| {
            Error::Dimension(format!("system dimension {n} overflows when squared"))
        })?;
        if basis.len() != s {
            return Err(Error::Dimension(format!(
                "operator basis for n = {n} needs {s} elements, got {}",
                basis.len()
            )));
        }
        for (k, a) in basis.iter().enumerate() {
            if a.rows() != n || a.cols() != n {
                return Err(Error::Dimension(format!(
                    "basis operator {k} is {}x{}, expected {n}x{n}",
                    a.rows(),
                    a.cols()
                )));
            }
        }
        if matrix.rows() != n * n || matrix.cols() != n * n {
            return Err(Error::Dimension(format!(
                "chi matrix for n = {n} must be {s}x{s}, got {}x{}",
                matrix.rows(),
                matrix.cols(),
                s = n * n
            )));
        }
        let dev = basis_orthonormality_deviation(&basis);
        if dev > basis_tol {
            return Err(Error::BasisNotOrthonormal { deviation: dev });
        }
        Ok(Self { n, basis, matrix })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[ComplexMatrix] {
        &self.basis
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// χ from an operator sum: each Kraus operator expands as D = Σ_i a_i A_i
    /// with a_i = tr(A_i† D), contributing the rank-one a a† to χ.
    pub fn from_kraus(kraus: &KrausSet, basis: Vec<ComplexMatrix>) -> Result<Self> {
        let n = kraus.n();
        let zero = ComplexMatrix::zeros(n * n, n * n);
        let mut chi = Self::new(n, basis, zero, tol::BASIS_ORTHONORMALITY)?;
        for d in kraus.operators() {
            let coeffs: Vec<Complex64> = chi
                .basis
                .iter()
                .map(|a| a.adjoint().matmul(d).expect("square").trace())
                .collect();
            for i in 0..n * n {
                for j in 0..n * n {
                    chi.matrix[(i, j)] += coeffs[i] * coeffs[j].conj();
                }
            }
        }
        Ok(chi)
    }

    /// χ = M† B M — defined for any map, completely positive or not.
    pub fn from_choi(choi: &ChoiB, basis: Vec<ComplexMatrix>) -> Result<Self> {
        let n = choi.n();
        let probe = Self::new(
            n,
            basis,
            ComplexMatrix::zeros(n * n, n * n),
            tol::BASIS_ORTHONORMALITY,
        )?;
        let m = probe.basis_columns();
        let chi = m.adjoint().matmul(choi.matrix())?.matmul(&m)?;
        Ok(Self { matrix: chi, ..probe })
    }

    /// Kraus operators from χ: diagonalize χ = U diag(λ) U†, then
    /// K_k = sqrt(λ_k) Σ_i U_ik A_i. Errors with the witness eigenvalue if χ
    /// is not positive semidefinite within `psd_tol`.
    pub fn to_kraus(&self, psd_tol: f64) -> Result<KrausSet> {
        let eig = hermitian_eig(&self.matrix, tol::HERMITICITY)?;
        let min = eig.eigenvalues().last().copied().unwrap_or(0.0);
        if min < -psd_tol {
            return Err(Error::NotCompletelyPositive { min_eigenvalue: min });
        }
        let mut operators = Vec::new();
        for (k, &lam) in eig.eigenvalues().iter().enumerate() {
            if lam > tol::KRAUS_DROP {
                let mut op = ComplexMatrix::zeros(self.n, self.n);
                for (i, a) in self.basis.iter().enumerate() {
                    op = op.add(&a.scale(eig.eigenvectors()[(i, k)]))?;
                }
                operators.push(op.scale_re(lam.sqrt()));
            }
        }
        if operators.is_empty() {
            operators.push(ComplexMatrix::zeros(self.n, self.n));
        }
        KrausSet::new(self.n, operators)
    }

    /// M = [|A_1⟩⟩ … |A_{n²}⟩⟩], the basis change between χ and Choi.
    fn basis_columns(&self) -> ComplexMatrix {
        let nn = self.n * self.n;
        let cols: Vec<ComplexMatrix> = self.basis.iter().map(vec_op).collect();
        ComplexMatrix::from_fn(nn, nn, |i, j| cols[j][(i, 0)])
    }
}

impl Representation for ChiMatrix {
    fn dim(&self) -> usize {
        self.n
    }

    fn kind_name(&self) -> &'static str {
        "chi"
    }

    /// E(ρ) = Σ_ij χ_ij A_i ρ A_j†, valid for CP and NCP alike.
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
        let nn = self.n * self.n;
        let mut out = ComplexMatrix::zeros(self.n, self.n);
        for i in 0..nn {
            for j in 0..nn {
                let w = self.matrix[(i, j)];
                if w == Complex64::ZERO {
                    continue;
                }
                let term = self.basis[i]
                    .matmul(rho)?
                    .matmul(&self.basis[j].adjoint())?;
                out = out.add(&term.scale(w))?;
            }
        }
        Ok(out)
    }

    fn to_choi(&self) -> Result<ChoiB> {
        let m = self.basis_columns();
        ChoiB::new(self.n, m.matmul(&self.matrix)?.matmul(&m.adjoint())?)
    }
}

/// Max |tr(A_j† A_k) - δ_jk| over the basis.
pub fn basis_orthonormality_deviation(basis: &[ComplexMatrix]) -> f64 {
    let mut dev: f64 = 0.0;
    for (j, a) in basis.iter().enumerate() {
        for (k, b) in basis.iter().enumerate() {
            let ip = a.adjoint().matmul(b).expect("square").trace();
            let target = if j == k { Complex64::ONE } else { Complex64::ZERO };
            dev = dev.max((ip - target).norm());
        }
    }
    dev
}

/// Matrix-unit basis {|e_i⟩⟨e_j|} in row-major order — the default basis, in
/// which χ coincides with the Choi matrix entrywise.
pub fn standard_basis(n: usize) -> Vec<ComplexMatrix> {
    let mut basis = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut e = ComplexMatrix::zeros(n, n);
            e[(i, j)] = Complex64::ONE;
            basis.push(e);
        }
    }
    basis
}

/// Normalized Pauli basis {1, σ1, σ2, σ3}/√2 for qubits.
pub fn pauli_basis_normalized() -> Vec<ComplexMatrix> {
    let s = 1.0 / 2f64.sqrt();
    vec![
        ComplexMatrix::identity(2).scale_re(s),
        ComplexMatrix::from_real(&[&[0.0, 1.0], &[1.0, 0.0]]).scale_re(s),
        ComplexMatrix::from_complex(&[
            &[Complex64::ZERO, c64(0.0, -1.0)],
            &[c64(0.0, 1.0), Complex64::ZERO],
        ])
        .scale_re(s),
        ComplexMatrix::from_real(&[&[1.0, 0.0], &[0.0, -1.0]]).scale_re(s),
    ]
}
