//! Kraus operator-sum representation.
//!
//! E(ρ) = Σ_α D_α ρ D_α†. The operator list is highly non-unique; the
//! canonical set extracted from a Choi eigendecomposition has at most n²
//! mutually orthogonal operators (tr(D_α† D_β) ∝ δ_αβ).

use crate::eig::hermitian_eig;
use crate::error::{Error, Result};
use crate::mat::{mat_op, ComplexMatrix};
use crate::rep::choi::ChoiB;
use crate::rep::Representation;
use crate::tol;

/// Operator-sum form: a non-empty list of n×n operators.
#[derive(Debug, Clone, PartialEq)]
pub struct KrausSet {
    n: usize,
    operators: Vec<ComplexMatrix>,
}

impl KrausSet {
    /// Wrap a list of operators. Errors if empty or any operator is not n×n.
    pub fn new(n: usize, operators: Vec<ComplexMatrix>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Dimension("system dimension must be positive".into()));
        }
        if operators.is_empty() {
            return Err(Error::Invalid("Kraus set must contain at least one operator".into()));
        }
        for (k, d) in operators.iter().enumerate() {
            if d.rows() != n || d.cols() != n {
                return Err(Error::Dimension(format!(
                    "Kraus operator {k} is {}x{}, expected {n}x{n}",
                    d.rows(),
                    d.cols()
                )));
            }
        }
        Ok(Self { n, operators })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.operators
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }

    /// Frobenius deviation of Σ D†D from the identity (trace preservation).
    pub fn tp_deviation(&self) -> f64 {
        self.gram_sum(false)
            .sub(&ComplexMatrix::identity(self.n))
            .expect("shapes agree")
            .frobenius_norm()
    }

    /// Frobenius deviation of Σ DD† from the identity (unitality).
    pub fn unital_deviation(&self) -> f64 {
        self.gram_sum(true)
            .sub(&ComplexMatrix::identity(self.n))
            .expect("shapes agree")
            .frobenius_norm()
    }

    fn gram_sum(&self, flipped: bool) -> ComplexMatrix {
        let mut s = ComplexMatrix::zeros(self.n, self.n);
        for d in &self.operators {
            let term = if flipped {
                d.matmul(&d.adjoint())
            } else {
                d.adjoint().matmul(d)
            };
            s = s.add(&term.expect("square operators")).expect("shapes agree");
        }
        s
    }

    /// Canonical Kraus set from a Choi matrix: eigendecompose B, keep
    /// D_k = sqrt(λ_k)·mat(v_k) for λ_k above the drop cutoff.
    ///
    /// Eigenvalues below -`psd_tol` mean the map is not completely positive
    /// and no operator-sum form exists; the most negative one is returned as
    /// the witness. Eigenvalues in [-psd_tol, drop cutoff] are treated as
    /// numerically zero.
    pub fn from_choi(choi: &ChoiB, psd_tol: f64) -> Result<Self> {
        let n = choi.n();
        let eig = hermitian_eig(choi.matrix(), tol::HERMITICITY)?;
        let min = eig.eigenvalues().last().copied().unwrap_or(0.0);
        if min < -psd_tol {
            return Err(Error::NotCompletelyPositive { min_eigenvalue: min });
        }
        let mut operators = Vec::new();
        for (k, &lam) in eig.eigenvalues().iter().enumerate() {
            if lam > tol::KRAUS_DROP {
                let d = mat_op(&eig.eigenvector(k), n)?.scale_re(lam.sqrt());
                operators.push(d);
            }
        }
        if operators.is_empty() {
            // Zero map: represent it by a single zero operator so the set
            // stays non-empty.
            operators.push(ComplexMatrix::zeros(n, n));
        }
        Ok(Self { n, operators })
    }
}

impl Representation for KrausSet {
    fn dim(&self) -> usize {
        self.n
    }

    fn kind_name(&self) -> &'static str {
        "kraus"
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
        let mut out = ComplexMatrix::zeros(self.n, self.n);
        for d in &self.operators {
            out = out.add(&d.matmul(rho)?.matmul(&d.adjoint())?)?;
        }
        Ok(out)
    }

    fn to_choi(&self) -> Result<ChoiB> {
        Ok(ChoiB::from_kraus(self))
    }
}

/// Kraus operators of the reduced dynamics induced by a joint unitary on
/// system ⊗ environment with the environment prepared diagonally.
///
/// `u` acts on the n·m-dimensional system ⊗ environment space (system index
/// slow: joint index s·m + k), `env_probs` are the m diagonal weights of the
/// initial environment state. The operators are D_{k,k'} = sqrt(p_{k'})
/// ⟨k|U|k'⟩ with [⟨k|U|k'⟩]_{s,s'} = U[s·m + k, s'·m + k']; primed indices
/// with p_{k'} = 0 contribute nothing and are omitted.
pub fn kraus_from_environment(
    u: &ComplexMatrix,
    env_probs: &[f64],
    n: usize,
) -> Result<KrausSet> {
    let m = env_probs.len();
    if n == 0 || m == 0 {
        return Err(Error::Dimension(
            "system and environment dimensions must be positive".into(),
        ));
    }
    let total = n * m;
    if u.rows() != total || u.cols() != total {
        return Err(Error::Dimension(format!(
            "joint unitary must be {total}x{total} for n = {n}, m = {m}, got {}x{}",
            u.rows(),
            u.cols()
        )));
    }
    let unit_dev = unitarity_deviation(u);
    if unit_dev > tol::UNITARITY {
        return Err(Error::NotUnitary { deviation: unit_dev });
    }
    if env_probs.iter().any(|&p| !p.is_finite() || p < 0.0) {
        return Err(Error::InvalidProbabilities(
            "entries must be finite and non-negative".into(),
        ));
    }
    let sum: f64 = env_probs.iter().sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidProbabilities(format!(
            "entries sum to {sum}, expected 1"
        )));
    }

    let mut operators = Vec::new();
    for (kp, &p) in env_probs.iter().enumerate() {
        if p == 0.0 {
            continue;
        }
        let w = p.sqrt();
        for k in 0..m {
            let d = ComplexMatrix::from_fn(n, n, |s, sp| u[(s * m + k, sp * m + kp)] * w);
            operators.push(d);
        }
    }
    KrausSet::new(n, operators)
}

/// Max entrywise |u†u - 1|.
pub fn unitarity_deviation(u: &ComplexMatrix) -> f64 {
    if !u.is_square() {
        return f64::INFINITY;
    }
    let gram = u.adjoint().matmul(u).expect("square");
    gram.sub(&ComplexMatrix::identity(u.rows()))
        .expect("shapes agree")
        .max_abs_entry()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::{c64, kron};

    /// SWAP on system ⊗ environment with the environment pinned in |0⟩⟨0|
    /// replaces the system state: the constant channel {|0⟩⟨0|, |0⟩⟨1|}.
    #[test]
    fn swap_with_pure_environment_gives_constant_channel() {
        let mut swap = ComplexMatrix::zeros(4, 4);
        // |s,k⟩ → |k,s⟩ with joint index s·2 + k.
        for s in 0..2 {
            for k in 0..2 {
                swap[(k * 2 + s, s * 2 + k)] = c64(1.0, 0.0);
            }
        }
        let ks = kraus_from_environment(&swap, &[1.0, 0.0], 2).unwrap();
        assert_eq!(ks.len(), 2);
        let e00 = ComplexMatrix::from_real(&[&[1.0, 0.0], &[0.0, 0.0]]);
        let e01 = ComplexMatrix::from_real(&[&[0.0, 1.0], &[0.0, 0.0]]);
        assert!(ks.operators()[0].frobenius_distance(&e00).unwrap() < 1e-14);
        assert!(ks.operators()[1].frobenius_distance(&e01).unwrap() < 1e-14);
        assert!(ks.tp_deviation() < 1e-12);

        // Everything maps to |0⟩⟨0|.
        let rho = ComplexMatrix::from_real(&[&[0.3, 0.0], &[0.0, 0.7]]);
        let out = ks.apply(&rho).unwrap();
        assert!(out.frobenius_distance(&e00).unwrap() < 1e-13);
    }

    /// A product unitary u ⊗ 1 with any diagonal environment reduces to the
    /// unitary channel ρ ↦ uρu†.
    #[test]
    fn product_unitary_reduces_to_unitary_channel() {
        let h = ComplexMatrix::from_real(&[&[1.0, 1.0], &[1.0, -1.0]]).scale_re(1.0 / 2f64.sqrt());
        let joint = kron(&h, &ComplexMatrix::identity(3));
        let ks = kraus_from_environment(&joint, &[0.5, 0.25, 0.25], 2).unwrap();
        let rho = ComplexMatrix::from_real(&[&[0.8, 0.1], &[0.1, 0.2]]);
        let expected = h.matmul(&rho).unwrap().matmul(&h.adjoint()).unwrap();
        let got = ks.apply(&rho).unwrap();
        assert!(got.frobenius_distance(&expected).unwrap() < 1e-12);
        assert!(ks.tp_deviation() < 1e-12);
    }

    #[test]
    fn rejects_bad_probabilities_and_non_unitaries() {
        let u = ComplexMatrix::identity(4);
        assert!(matches!(
            kraus_from_environment(&u, &[0.6, 0.6], 2),
            Err(Error::InvalidProbabilities(_))
        ));
        assert!(matches!(
            kraus_from_environment(&u, &[1.2, -0.2], 2),
            Err(Error::InvalidProbabilities(_))
        ));
        let not_u = ComplexMatrix::identity(4).scale_re(2.0);
        assert!(matches!(
            kraus_from_environment(&not_u, &[1.0, 0.0], 2),
            Err(Error::NotUnitary { .. })
        ));
    }

    #[test]
    fn canonical_extraction_round_trips() {
        let d1 = ComplexMatrix::from_real(&[&[1.0, 0.0], &[0.0, 0.6]]);
        let d2 = ComplexMatrix::from_real(&[&[0.0, 0.8], &[0.0, 0.0]]);
        let ks = KrausSet::new(2, vec![d1, d2]).unwrap();
        let b = ChoiB::from_kraus(&ks);
        let canonical = KrausSet::from_choi(&b, tol::PSD).unwrap();
        let b2 = ChoiB::from_kraus(&canonical);
        assert!(b.matrix().frobenius_distance(b2.matrix()).unwrap() < 1e-10);
        // Canonical operators are pairwise orthogonal under tr(D†D').
        for i in 0..canonical.len() {
            for j in 0..canonical.len() {
                if i != j {
                    let ip = canonical.operators()[i]
                        .adjoint()
                        .matmul(&canonical.operators()[j])
                        .unwrap()
                        .trace();
                    assert!(ip.norm() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn empty_set_rejected() {
        assert!(matches!(
            KrausSet::new(2, vec![]),
            Err(Error::Invalid(_))
        ));
    }
}
