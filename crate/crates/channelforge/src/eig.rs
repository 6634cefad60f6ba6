//! Hermitian eigendecomposition via cyclic Jacobi rotations.
//!
//! Self-contained complex Jacobi: each rotation zeroes one off-diagonal pair
//! of the working matrix with a phased Givens rotation, sweeps run over all
//! pairs in row order, and the accumulated rotations form the eigenvector
//! matrix. Deterministic — identical input bytes give identical output bytes,
//! which the reproducibility guarantees downstream rely on.

use crate::error::{Error, Result};
use crate::mat::{c64, Complex64, ComplexMatrix};
use crate::tol;

/// Result of [`hermitian_eig`].
///
/// Eigenvalues are real and sorted descending; `eigenvectors` holds the
/// corresponding orthonormal eigenvectors as columns (a unitary matrix).
/// Each eigenvector's global phase is fixed by making its first component of
/// modulus > 1e-12 real and positive, so repeated runs and reordered inputs
/// produce reproducible vectors.
#[derive(Debug, Clone)]
pub struct EigDecomposition {
    eigenvalues: Vec<f64>,
    eigenvectors: ComplexMatrix,
    residual: f64,
}

impl EigDecomposition {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Unitary matrix whose k-th column is the k-th eigenvector.
    pub fn eigenvectors(&self) -> &ComplexMatrix {
        &self.eigenvectors
    }

    /// k-th eigenvector as an n×1 column.
    pub fn eigenvector(&self, k: usize) -> ComplexMatrix {
        let n = self.eigenvectors.rows();
        ComplexMatrix::from_fn(n, 1, |i, _| self.eigenvectors[(i, k)])
    }

    /// Max over eigenpairs of ‖H v - λ v‖₂, measured against the
    /// symmetrized input.
    pub fn residual(&self) -> f64 {
        self.residual
    }

    /// V · diag(λ) · V†, for reconstruction checks.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.eigenvectors.rows();
        let mut lam = ComplexMatrix::zeros(n, n);
        for (k, &e) in self.eigenvalues.iter().enumerate() {
            lam[(k, k)] = c64(e, 0.0);
        }
        self.eigenvectors
            .matmul(&lam)
            .unwrap()
            .matmul(&self.eigenvectors.adjoint())
            .unwrap()
    }

    /// Max entrywise |V†V - 1|; how far the eigenvector matrix is from
    /// unitary.
    pub fn orthonormality_deviation(&self) -> f64 {
        let n = self.eigenvectors.rows();
        let gram = self
            .eigenvectors
            .adjoint()
            .matmul(&self.eigenvectors)
            .unwrap();
        let mut dev: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let target = if i == j { Complex64::ONE } else { Complex64::ZERO };
                dev = dev.max((gram[(i, j)] - target).norm());
            }
        }
        dev
    }
}

/// Sum of |a_pq|² over p ≠ q.
fn off_diagonal_norm(a: &ComplexMatrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for p in 0..n {
        for q in 0..n {
            if p != q {
                s += a[(p, q)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Eigendecomposition of a Hermitian matrix.
///
/// `herm_tol` bounds the accepted input asymmetry (max entrywise |h - h†|);
/// beyond it the call fails with [`Error::NotHermitian`]. Within it the
/// solver operates on (h + h†)/2. Stops once the off-diagonal Frobenius norm
/// drops below [`tol::JACOBI_OFF_THRESHOLD`] · max(1, ‖h‖_F), errors after
/// [`tol::JACOBI_MAX_SWEEPS`] sweeps.
pub fn hermitian_eig(h: &ComplexMatrix, herm_tol: f64) -> Result<EigDecomposition> {
    if !h.is_square() {
        return Err(Error::Dimension(format!(
            "hermitian_eig expects a square matrix, got {}x{}",
            h.rows(),
            h.cols()
        )));
    }
    let deviation = h.hermiticity_deviation();
    if deviation > herm_tol {
        return Err(Error::NotHermitian {
            deviation,
            tolerance: herm_tol,
        });
    }

    let n = h.rows();
    let sym = h.symmetrize();
    let mut a = sym.clone();
    let mut v = ComplexMatrix::identity(n);
    let threshold = tol::JACOBI_OFF_THRESHOLD * sym.frobenius_norm().max(1.0);

    let mut sweeps = 0;
    while off_diagonal_norm(&a) > threshold {
        if sweeps >= tol::JACOBI_MAX_SWEEPS {
            return Err(Error::NoConvergence {
                sweeps,
                off_norm: off_diagonal_norm(&a),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let b = a[(p, q)];
                let babs = b.norm();
                if babs <= f64::MIN_POSITIVE {
                    continue;
                }
                // Phased Givens rotation zeroing a[p,q]:
                //   V = [[c, -s·e^{iφ}], [s·e^{-iφ}, c]] on the (p,q) plane,
                // with e^{iφ} the phase of a[p,q] and tan θ from the usual
                // smaller-root choice, so a ← V†aV kills the (p,q) entry.
                let phase = b / babs;
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let tau = (aqq - app) / (2.0 * babs);
                let t = if tau >= 0.0 {
                    -1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                // Right-multiply columns p, q of a and v by the rotation.
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * c + akq * s * phase.conj();
                    a[(k, q)] = -akp * s * phase + akq * c;

                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * c + vkq * s * phase.conj();
                    v[(k, q)] = -vkp * s * phase + vkq * c;
                }
                // Left-multiply rows p, q of a by the adjoint rotation.
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = apk * c + aqk * s * phase;
                    a[(q, k)] = -apk * s * phase.conj() + aqk * c;
                }
                // The rotation annihilates these analytically; set them to
                // zero outright and keep the diagonal exactly real.
                a[(p, q)] = Complex64::ZERO;
                a[(q, p)] = Complex64::ZERO;
                a[(p, p)] = c64(a[(p, p)].re, 0.0);
                a[(q, q)] = c64(a[(q, q)].re, 0.0);
            }
        }
    }

    // Sort descending by eigenvalue; stable, so exact ties keep sweep order.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        a[(j, j)]
            .re
            .partial_cmp(&a[(i, i)].re)
            .expect("eigenvalues are finite")
    });

    let eigenvalues: Vec<f64> = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut vectors = ComplexMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);

    // Deterministic global phase: first component of modulus > 1e-12 made
    // real positive.
    for k in 0..n {
        let mut fix = Complex64::ONE;
        for i in 0..n {
            let z = vectors[(i, k)];
            if z.norm() > 1e-12 {
                fix = z.conj() / z.norm();
                break;
            }
        }
        for i in 0..n {
            let z = vectors[(i, k)];
            vectors[(i, k)] = z * fix;
        }
    }

    // Residual against the symmetrized input: max_k ‖H v_k - λ_k v_k‖₂.
    let mut residual: f64 = 0.0;
    for k in 0..n {
        let mut col = ComplexMatrix::zeros(n, 1);
        for i in 0..n {
            col[(i, 0)] = vectors[(i, k)];
        }
        let hv = sym.matmul(&col).unwrap();
        let r = hv.sub(&col.scale_re(eigenvalues[k])).unwrap().frobenius_norm();
        residual = residual.max(r);
    }

    Ok(EigDecomposition {
        eigenvalues,
        eigenvectors: vectors,
        residual,
    })
}

/// [`hermitian_eig`] with the default Hermiticity tolerance.
pub fn hermitian_eig_default(h: &ComplexMatrix) -> Result<EigDecomposition> {
    hermitian_eig(h, tol::HERMITICITY)
}
