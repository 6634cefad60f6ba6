//! Stinespring dilation: the channel as unitary dynamics on a larger space.
//!
//! For a trace-preserving CP map with m Kraus operators, the isometry
//! V: system → env ⊗ system defined by V|φ⟩ = Σ_α |α⟩ ⊗ D_α|φ⟩ satisfies
//! V†V = Σ D†D = 1. With the environment factor *first*, V is the m·n × n
//! matrix whose α-th n-row block is D_α — i.e. the Kraus operators stacked —
//! and any unitary completion U embeds it as the first n columns. The channel
//! is then E(ρ) = tr_env[U (|0⟩⟨0| ⊗ ρ) U†].

use crate::error::{Error, Result};
use crate::mat::{c64, kron, partial_trace, Complex64, ComplexMatrix, Factor};
use crate::rep::choi::ChoiB;
use crate::rep::kraus::{unitarity_deviation, KrausSet};
use crate::rep::Representation;
use crate::tol;

/// Unitary dilation on env ⊗ system with a fixed pure environment state
/// |env_state_index⟩.
#[derive(Debug, Clone, PartialEq)]
pub struct StinespringModel {
    n: usize,
    env_dim: usize,
    unitary: ComplexMatrix,
    env_state_index: usize,
}

impl StinespringModel {
    /// Wrap an explicit dilation. Validates shape, unitarity (within
    /// [`tol::UNITARITY`]) and the environment index.
    pub fn new(
        n: usize,
        env_dim: usize,
        unitary: ComplexMatrix,
        env_state_index: usize,
    ) -> Result<Self> {
        if n == 0 || env_dim == 0 {
            return Err(Error::Dimension(
                "system and environment dimensions must be positive".into(),
            ));
        }
        let total = n.checked_mul(env_dim).ok_or_else(|| {
            Error::Dimension(format!(
                "dilation dimension {n}x{env_dim} overflows"
            ))
        })?;
        if unitary.rows() != total || unitary.cols() != total {
            return Err(Error::Dimension(format!(
                "dilation unitary must be {total}x{total} for n = {n}, env_dim = {env_dim}, got {}x{}",
                unitary.rows(),
                unitary.cols()
            )));
        }
        if env_state_index >= env_dim {
            return Err(Error::Invalid(format!(
                "env_state_index {env_state_index} out of range for env_dim {env_dim}"
            )));
        }
        let dev = unitarity_deviation(&unitary);
        if dev > tol::UNITARITY {
            return Err(Error::NotUnitary { deviation: dev });
        }
        Ok(Self {
            n,
            env_dim,
            unitary,
            env_state_index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn env_dim(&self) -> usize {
        self.env_dim
    }

    pub fn unitary(&self) -> &ComplexMatrix {
        &self.unitary
    }

    pub fn env_state_index(&self) -> usize {
        self.env_state_index
    }

    /// Dilate a trace-preserving Kraus set: stack the operators into the
    /// isometry V (the first block-column stacks D_1, D_2, … in order) and
    /// complete it to a unitary by Gram–Schmidt over canonical basis
    /// vectors — deterministic, so repeated runs give identical dilations.
    ///
    /// Errors if the set is not trace preserving within `tp_tol` (the
    /// stacked V is an isometry iff Σ D†D = 1).
    pub fn from_kraus(kraus: &KrausSet, tp_tol: f64) -> Result<Self> {
        let n = kraus.n();
        let m = kraus.len();
        let tp = kraus.tp_deviation();
        if tp > tp_tol {
            return Err(Error::NotTracePreserving { deviation: tp });
        }
        let total = m * n;

        // Accepted orthonormal columns, starting with V's n columns:
        // col_s[(α·n + s')] = D_α[s', s].
        let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(total);
        for s in 0..n {
            let mut col = vec![Complex64::ZERO; total];
            for (alpha, d) in kraus.operators().iter().enumerate() {
                for sp in 0..n {
                    col[alpha * n + sp] = d[(sp, s)];
                }
            }
            cols.push(col);
        }

        // Complete with canonical basis vectors, re-orthogonalized twice for
        // numerical hygiene; a candidate already inside the span shrinks to
        // ~0 and is skipped.
        for idx in 0..total {
            if cols.len() == total {
                break;
            }
            let mut w = vec![Complex64::ZERO; total];
            w[idx] = Complex64::ONE;
            for _ in 0..2 {
                for c in &cols {
                    let ip: Complex64 = c.iter().zip(&w).map(|(ci, wi)| ci.conj() * wi).sum();
                    for (wi, ci) in w.iter_mut().zip(c) {
                        *wi -= ip * ci;
                    }
                }
            }
            let norm: f64 = w.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm > 1e-4 {
                for wi in &mut w {
                    *wi /= c64(norm, 0.0);
                }
                cols.push(w);
            }
        }
        if cols.len() != total {
            return Err(Error::Invalid(
                "unitary completion failed to find a full basis".into(),
            ));
        }

        let unitary = ComplexMatrix::from_fn(total, total, |i, j| cols[j][i]);
        Self::new(n, m, unitary, 0)
    }

    /// Read the Kraus operators back out: D_α is the (α, env_state_index)
    /// n×n block of U.
    pub fn to_kraus(&self) -> Result<KrausSet> {
        let n = self.n;
        let k = self.env_state_index;
        let mut operators = Vec::with_capacity(self.env_dim);
        for alpha in 0..self.env_dim {
            operators.push(ComplexMatrix::from_fn(n, n, |sp, s| {
                self.unitary[(alpha * n + sp, k * n + s)]
            }));
        }
        KrausSet::new(n, operators)
    }
}

impl Representation for StinespringModel {
    fn dim(&self) -> usize {
        self.n
    }

    fn kind_name(&self) -> &'static str {
        "stinespring"
    }

    /// Embed, conjugate, reduce: E(ρ) = tr_env[U (|k⟩⟨k| ⊗ ρ) U†].
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
        let mut env = ComplexMatrix::zeros(self.env_dim, self.env_dim);
        env[(self.env_state_index, self.env_state_index)] = Complex64::ONE;
        let joint = kron(&env, rho);
        let evolved = self
            .unitary
            .matmul(&joint)?
            .matmul(&self.unitary.adjoint())?;
        partial_trace(&evolved, self.env_dim, self.n, Factor::First)
    }

    fn to_choi(&self) -> Result<ChoiB> {
        self.to_kraus()?.to_choi()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phase_damping_kraus(p: f64) -> KrausSet {
        let d1 = ComplexMatrix::identity(2).scale_re((1.0 - p / 2.0).sqrt());
        let d2 = ComplexMatrix::from_real(&[&[1.0, 0.0], &[0.0, -1.0]]).scale_re((p / 2.0).sqrt());
        KrausSet::new(2, vec![d1, d2]).unwrap()
    }

    /// The dilation's first block-column is the stacked Kraus operators, and
    /// reading the blocks back returns the original set exactly.
    #[test]
    fn dilation_stacks_kraus_operators() {
        let ks = phase_damping_kraus(0.3);
        let st = StinespringModel::from_kraus(&ks, 1e-9).unwrap();
        assert_eq!(st.env_dim(), 2);
        let u = st.unitary();
        for (alpha, d) in ks.operators().iter().enumerate() {
            for sp in 0..2 {
                for s in 0..2 {
                    let diff = (u[(alpha * 2 + sp, s)] - d[(sp, s)]).norm();
                    assert!(diff < 1e-14);
                }
            }
        }
        let back = st.to_kraus().unwrap();
        for (orig, got) in ks.operators().iter().zip(back.operators()) {
            assert!(orig.frobenius_distance(got).unwrap() < 1e-14);
        }
    }

    #[test]
    fn dilation_is_unitary_and_applies_identically() {
        let ks = phase_damping_kraus(0.45);
        let st = StinespringModel::from_kraus(&ks, 1e-9).unwrap();
        assert!(unitarity_deviation(st.unitary()) < 1e-12);
        let rho = ComplexMatrix::from_real(&[&[0.5, 0.5], &[0.5, 0.5]]);
        let via_st = st.apply(&rho).unwrap();
        let via_ks = ks.apply(&rho).unwrap();
        assert!(via_st.frobenius_distance(&via_ks).unwrap() < 1e-12);
    }

    #[test]
    fn non_tp_set_rejected() {
        let half = ComplexMatrix::identity(2).scale_re(0.5);
        let ks = KrausSet::new(2, vec![half]).unwrap();
        assert!(matches!(
            StinespringModel::from_kraus(&ks, 1e-9),
            Err(Error::NotTracePreserving { .. })
        ));
    }

    #[test]
    fn single_kraus_unitary_dilation_is_itself() {
        let h = ComplexMatrix::from_real(&[&[1.0, 1.0], &[1.0, -1.0]]).scale_re(1.0 / 2f64.sqrt());
        let ks = KrausSet::new(2, vec![h.clone()]).unwrap();
        let st = StinespringModel::from_kraus(&ks, 1e-9).unwrap();
        assert_eq!(st.env_dim(), 1);
        assert!(st.unitary().frobenius_distance(&h).unwrap() < 1e-14);
    }
}
