//! Operator sum-difference representation.
//!
//! Any Hermiticity-preserving map — completely positive or not — splits as
//! E(ρ) = Σ_α D_α ρ D_α† − Σ_β F_β ρ F_β†, with both families built from the
//! Choi eigenpairs: positive eigenvalues feed the D's, negative ones the F's,
//! and the |λ|^{1/2} weights are folded into the operators.

use crate::eig::hermitian_eig;
use crate::error::{Error, Result};
use crate::mat::{mat_op, ComplexMatrix};
use crate::rep::choi::ChoiB;
use crate::rep::Representation;
use crate::tol;

/// Sum-difference form with unit weights (scales folded into the operators).
#[derive(Debug, Clone, PartialEq)]
pub struct Osd {
    n: usize,
    positive: Vec<ComplexMatrix>,
    negative: Vec<ComplexMatrix>,
}

impl Osd {
    /// Wrap explicit positive/negative operator families.
    pub fn new(
        n: usize,
        positive: Vec<ComplexMatrix>,
        negative: Vec<ComplexMatrix>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::Dimension("system dimension must be positive".into()));
        }
        for (label, list) in [("positive", &positive), ("negative", &negative)] {
            for (k, d) in list.iter().enumerate() {
                if d.rows() != n || d.cols() != n {
                    return Err(Error::Dimension(format!(
                        "{label} operator {k} is {}x{}, expected {n}x{n}",
                        d.rows(),
                        d.cols()
                    )));
                }
            }
        }
        Ok(Self { n, positive, negative })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn positive_part(&self) -> &[ComplexMatrix] {
        &self.positive
    }

    pub fn negative_part(&self) -> &[ComplexMatrix] {
        &self.negative
    }

    /// Split a (Hermitian) Choi matrix by eigenvalue sign. Eigenvalues with
    /// |λ| at or below the drop cutoff are discarded.
    pub fn from_choi(choi: &ChoiB) -> Result<Self> {
        let n = choi.n();
        let eig = hermitian_eig(choi.matrix(), tol::HERMITICITY)?;
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for (k, &lam) in eig.eigenvalues().iter().enumerate() {
            if lam.abs() <= tol::KRAUS_DROP {
                continue;
            }
            let op = mat_op(&eig.eigenvector(k), n)?.scale_re(lam.abs().sqrt());
            if lam > 0.0 {
                positive.push(op);
            } else {
                negative.push(op);
            }
        }
        Ok(Self { n, positive, negative })
    }

    /// Frobenius deviation of Σ D†D − Σ F†F from the identity (trace
    /// preservation of the difference form).
    pub fn tp_deviation(&self) -> f64 {
        let mut s = ComplexMatrix::zeros(self.n, self.n);
        for d in &self.positive {
            s = s
                .add(&d.adjoint().matmul(d).expect("square"))
                .expect("shapes agree");
        }
        for f in &self.negative {
            s = s
                .sub(&f.adjoint().matmul(f).expect("square"))
                .expect("shapes agree");
        }
        s.sub(&ComplexMatrix::identity(self.n))
            .expect("shapes agree")
            .frobenius_norm()
    }
}

impl Representation for Osd {
    fn dim(&self) -> usize {
        self.n
    }

    fn kind_name(&self) -> &'static str {
        "osd"
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
        for d in &self.positive {
            out = out.add(&d.matmul(rho)?.matmul(&d.adjoint())?)?;
        }
        for f in &self.negative {
            out = out.sub(&f.matmul(rho)?.matmul(&f.adjoint())?)?;
        }
        Ok(out)
    }

    fn to_choi(&self) -> Result<ChoiB> {
        Ok(ChoiB::from_osd(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::kraus::KrausSet;

    /// A CP map's sum-difference form has an empty negative family and
    /// reproduces the Choi matrix.
    #[test]
    fn cp_map_has_no_negative_part() {
        let d1 = ComplexMatrix::from_real(&[&[1.0, 0.0], &[0.0, 0.7]]);
        let d2 = ComplexMatrix::from_real(&[&[0.0, 0.71414284285428498], &[0.0, 0.0]]);
        let ks = KrausSet::new(2, vec![d1, d2]).unwrap();
        let b = ChoiB::from_kraus(&ks);
        let osd = Osd::from_choi(&b).unwrap();
        assert!(osd.negative_part().is_empty());
        assert_eq!(osd.positive_part().len(), 2);
        let back = osd.to_choi().unwrap();
        assert!(b.matrix().frobenius_distance(back.matrix()).unwrap() < 1e-10);
    }

    /// An indefinite Choi matrix splits into both families and still
    /// reconstructs exactly.
    #[test]
    fn indefinite_choi_splits_and_reconstructs() {
        // Choi with spectrum {1.5, 0.5, 0.5, -0.5}.
        let b = ChoiB::new(
            2,
            ComplexMatrix::from_real(&[
                &[0.5, 0.0, 0.0, 1.0],
                &[0.0, 0.5, 0.0, 0.0],
                &[0.0, 0.0, 0.5, 0.0],
                &[1.0, 0.0, 0.0, 0.5],
            ]),
        )
        .unwrap();
        let osd = Osd::from_choi(&b).unwrap();
        assert_eq!(osd.positive_part().len(), 3);
        assert_eq!(osd.negative_part().len(), 1);
        let back = osd.to_choi().unwrap();
        assert!(b.matrix().frobenius_distance(back.matrix()).unwrap() < 1e-10);
        assert!(osd.tp_deviation() < 1e-10);
    }
}
