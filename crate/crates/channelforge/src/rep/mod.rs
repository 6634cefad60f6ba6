//! Channel representations and the conversions between them.
//!
//! Each representation type implements [`Representation`] — a common
//! interface for dimension, state application, and conversion to the Choi
//! form, which is the hub all cross-conversions route through when no direct
//! path is pinned. [`Channel`] is the tagged union the wire format and CLI
//! speak; its methods dispatch through the trait object so every variant's
//! algorithm stays interchangeable behind the same calls.

pub mod chi;
pub mod choi;
pub mod kraus;
pub mod osd;
pub mod stinespring;
pub mod superop;

use crate::error::{Error, Result};
use crate::mat::ComplexMatrix;
use crate::qubit::AffineQubit;
use crate::tol;

pub use chi::{pauli_basis_normalized, standard_basis, ChiMatrix};
pub use choi::ChoiB;
pub use kraus::{kraus_from_environment, KrausSet};
pub use osd::Osd;
pub use stinespring::StinespringModel;
pub use superop::SuperopA;

/// Common interface every representation implements: what dimension it acts
/// on, how it applies to a state, and how it maps into the Choi form.
pub trait Representation {
    /// System dimension n (states are n×n).
    fn dim(&self) -> usize;

    /// Wire-format name of the representation kind.
    fn kind_name(&self) -> &'static str;

    /// Apply the map to an n×n matrix via this representation's native
    /// algorithm.
    fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix>;

    /// Convert to the Choi (B-form) matrix.
    fn to_choi(&self) -> Result<ChoiB>;
}

/// The representation kinds a channel can be converted into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepKind {
    Superop,
    Choi,
    Kraus,
    Chi,
    Stinespring,
    Osd,
}

impl RepKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RepKind::Superop => "superop",
            RepKind::Choi => "choi",
            RepKind::Kraus => "kraus",
            RepKind::Chi => "chi",
            RepKind::Stinespring => "stinespring",
            RepKind::Osd => "osd",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "superop" => Ok(RepKind::Superop),
            "choi" => Ok(RepKind::Choi),
            "kraus" => Ok(RepKind::Kraus),
            "chi" => Ok(RepKind::Chi),
            "stinespring" => Ok(RepKind::Stinespring),
            "osd" => Ok(RepKind::Osd),
            other => Err(Error::Invalid(format!(
                "unknown representation kind '{other}' (expected superop | choi | kraus | chi | stinespring | osd)"
            ))),
        }
    }
}

/// A quantum channel (or deliberately non-CP map) in one of its
/// representations.
#[derive(Debug, Clone, PartialEq)]
pub enum Channel {
    Superop(SuperopA),
    Choi(ChoiB),
    Kraus(KrausSet),
    Chi(ChiMatrix),
    Stinespring(StinespringModel),
    Osd(Osd),
    AffineQubit(AffineQubit),
}

impl Channel {
    /// The representation behind a common trait object.
    pub fn as_rep(&self) -> &dyn Representation {
        match self {
            Channel::Superop(r) => r,
            Channel::Choi(r) => r,
            Channel::Kraus(r) => r,
            Channel::Chi(r) => r,
            Channel::Stinespring(r) => r,
            Channel::Osd(r) => r,
            Channel::AffineQubit(r) => r,
        }
    }

    pub fn dim(&self) -> usize {
        self.as_rep().dim()
    }

    pub fn kind_name(&self) -> &'static str {
        self.as_rep().kind_name()
    }

    /// Apply through the representation's native algorithm.
    pub fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.as_rep().apply(rho)
    }

    pub fn to_choi(&self) -> Result<ChoiB> {
        self.as_rep().to_choi()
    }

    /// A-form, using the direct path where one exists.
    pub fn to_superop(&self) -> Result<SuperopA> {
        match self {
            Channel::Superop(a) => Ok(a.clone()),
            Channel::Kraus(k) => Ok(SuperopA::from_kraus(k)),
            Channel::AffineQubit(aff) => Ok(aff.to_superop()),
            other => Ok(SuperopA::from_choi(&other.to_choi()?)),
        }
    }

    /// Canonical Kraus set. Fails with the witness eigenvalue on non-CP
    /// input; existing Kraus sets pass through unchanged.
    pub fn to_kraus(&self, psd_tol: f64) -> Result<KrausSet> {
        match self {
            Channel::Kraus(k) => Ok(k.clone()),
            Channel::Stinespring(st) => st.to_kraus(),
            other => KrausSet::from_choi(&other.to_choi()?, psd_tol),
        }
    }

    /// χ-matrix over an explicit orthonormal basis. Defined for NCP maps
    /// too (the χ is then indefinite).
    pub fn to_chi(&self, basis: Vec<ComplexMatrix>) -> Result<ChiMatrix> {
        match self {
            Channel::Kraus(k) => ChiMatrix::from_kraus(k, basis),
            other => ChiMatrix::from_choi(&other.to_choi()?, basis),
        }
    }

    /// Sum-difference form from the Choi eigendecomposition.
    pub fn to_osd(&self) -> Result<Osd> {
        match self {
            Channel::Osd(o) => Ok(o.clone()),
            other => Osd::from_choi(&other.to_choi()?),
        }
    }

    /// Stinespring dilation; requires a CP, trace-preserving map.
    pub fn to_stinespring(&self, tol_: f64) -> Result<StinespringModel> {
        match self {
            Channel::Stinespring(st) => Ok(st.clone()),
            other => StinespringModel::from_kraus(&other.to_kraus(tol::PSD)?, tol_),
        }
    }

    /// Convert into `kind` with default tolerances and the matrix-unit χ
    /// basis.
    pub fn convert_to(&self, kind: RepKind) -> Result<Channel> {
        Ok(match kind {
            RepKind::Superop => Channel::Superop(self.to_superop()?),
            RepKind::Choi => Channel::Choi(self.to_choi()?),
            RepKind::Kraus => Channel::Kraus(self.to_kraus(tol::PSD)?),
            RepKind::Chi => Channel::Chi(self.to_chi(standard_basis(self.dim()))?),
            RepKind::Stinespring => Channel::Stinespring(self.to_stinespring(tol::HERMITICITY)?),
            RepKind::Osd => Channel::Osd(self.to_osd()?),
        })
    }
}

/// Composition E2 ∘ E1 (apply `first`, then `second`): A-forms multiply.
pub fn compose(second: &Channel, first: &Channel) -> Result<Channel> {
    if second.dim() != first.dim() {
        return Err(Error::Dimension(format!(
            "cannot compose channels of dimension {} and {}",
            second.dim(),
            first.dim()
        )));
    }
    let a2 = second.to_superop()?;
    let a1 = first.to_superop()?;
    Ok(Channel::Superop(SuperopA::new(
        first.dim(),
        a2.matrix().matmul(a1.matrix())?,
    )?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::c64;
    use crate::random;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    fn amplitude_damping_kraus(p: f64) -> KrausSet {
        let d1 = ComplexMatrix::from_real(&[&[1.0, 0.0], &[0.0, (1.0 - p).sqrt()]]);
        let d2 = ComplexMatrix::from_real(&[&[0.0, p.sqrt()], &[0.0, 0.0]]);
        KrausSet::new(2, vec![d1, d2]).unwrap()
    }

    fn choi_distance(a: &Channel, b: &Channel) -> f64 {
        a.to_choi()
            .unwrap()
            .matrix()
            .frobenius_distance(b.to_choi().unwrap().matrix())
            .unwrap()
    }

    /// Every representation of the same channel applies identically.
    #[test]
    fn application_equivalence_across_representations() {
        let mut rng = ChaCha12Rng::seed_from_u64(31);
        let ks = random::random_cptp(2, 3, &mut rng);
        let base = Channel::Kraus(ks);
        let kinds = [
            RepKind::Superop,
            RepKind::Choi,
            RepKind::Kraus,
            RepKind::Chi,
            RepKind::Stinespring,
            RepKind::Osd,
        ];
        let rho = random::random_density(2, &mut rng);
        let reference = base.apply(&rho).unwrap();
        for kind in kinds {
            let conv = base.convert_to(kind).unwrap();
            let out = conv.apply(&rho).unwrap();
            assert!(
                out.frobenius_distance(&reference).unwrap() < 1e-10,
                "apply via {} disagrees",
                kind.as_str()
            );
        }
    }

    /// Conversion cycles through every form return to the same channel.
    #[test]
    fn conversion_cycle_preserves_channel() {
        let mut rng = ChaCha12Rng::seed_from_u64(32);
        for n in [2usize, 3] {
            let ks = random::random_cptp(n, n, &mut rng);
            let base = Channel::Kraus(ks);
            let cycle = base
                .convert_to(RepKind::Superop)
                .unwrap()
                .convert_to(RepKind::Choi)
                .unwrap()
                .convert_to(RepKind::Kraus)
                .unwrap()
                .convert_to(RepKind::Chi)
                .unwrap()
                .convert_to(RepKind::Stinespring)
                .unwrap()
                .convert_to(RepKind::Osd)
                .unwrap();
            assert!(choi_distance(&base, &cycle) < 1e-8);
        }
    }

    /// Mixing Kraus operators by a random unitary leaves the channel fixed.
    #[test]
    fn unitary_freedom_of_kraus_sets() {
        let mut rng = ChaCha12Rng::seed_from_u64(33);
        let ks = random::random_cptp(2, 4, &mut rng);
        let m = ks.len();
        let u = random::haar_unitary(m, &mut rng);
        let mixed: Vec<ComplexMatrix> = (0..m)
            .map(|beta| {
                let mut sum = ComplexMatrix::zeros(2, 2);
                for (alpha, d) in ks.operators().iter().enumerate() {
                    sum = sum.add(&d.scale(u[(beta, alpha)])).unwrap();
                }
                sum
            })
            .collect();
        let remixed = Channel::Kraus(KrausSet::new(2, mixed).unwrap());
        assert!(choi_distance(&Channel::Kraus(ks), &remixed) < 1e-10);
    }

    /// A rectangular isometry mix produces a *larger* operator list for the
    /// same channel.
    #[test]
    fn isometry_mix_grows_operator_count() {
        let mut rng = ChaCha12Rng::seed_from_u64(34);
        let ks = amplitude_damping_kraus(0.35);
        let m = ks.len();
        let big = 5usize;
        // First m columns of a Haar unitary on C^5 form an isometry.
        let u = random::haar_unitary(big, &mut rng);
        let mixed: Vec<ComplexMatrix> = (0..big)
            .map(|beta| {
                let mut sum = ComplexMatrix::zeros(2, 2);
                for alpha in 0..m {
                    sum = sum
                        .add(&ks.operators()[alpha].scale(u[(beta, alpha)]))
                        .unwrap();
                }
                sum
            })
            .collect();
        let remixed = Channel::Kraus(KrausSet::new(2, mixed).unwrap());
        assert_eq!(remixed.to_kraus(tol::PSD).unwrap().len(), big);
        assert!(choi_distance(&Channel::Kraus(ks), &remixed) < 1e-10);
        // Canonical extraction from the Choi matrix compresses back down to
        // the Kraus rank.
        let canonical =
            KrausSet::from_choi(&remixed.to_choi().unwrap(), tol::PSD).unwrap();
        assert_eq!(canonical.len(), m);
    }

    /// Composing phase damping with itself composes the damping parameters:
    /// p ⊕ q = p + q - pq on the off-diagonal decay factors.
    #[test]
    fn phase_damping_composition_rule() {
        let pd = |p: f64| {
            let d1 = ComplexMatrix::identity(2).scale_re((1.0 - p / 2.0).sqrt());
            let d2 = ComplexMatrix::from_real(&[&[1.0, 0.0], &[0.0, -1.0]])
                .scale_re((p / 2.0).sqrt());
            Channel::Kraus(KrausSet::new(2, vec![d1, d2]).unwrap())
        };
        let (p, q) = (0.3, 0.5);
        let composed = compose(&pd(q), &pd(p)).unwrap();
        let expected = pd(p + q - p * q);
        assert!(choi_distance(&composed, &expected) < 1e-12);
    }

    /// Unitary channels compose like their unitaries.
    #[test]
    fn unitary_composition() {
        let h = ComplexMatrix::from_real(&[&[1.0, 1.0], &[1.0, -1.0]]).scale_re(1.0 / 2f64.sqrt());
        let s = ComplexMatrix::from_complex(&[
            &[c64(1.0, 0.0), c64(0.0, 0.0)],
            &[c64(0.0, 0.0), c64(0.0, 1.0)],
        ]);
        let ch_h = Channel::Kraus(KrausSet::new(2, vec![h.clone()]).unwrap());
        let ch_s = Channel::Kraus(KrausSet::new(2, vec![s.clone()]).unwrap());
        let composed = compose(&ch_s, &ch_h).unwrap();
        let sh = s.matmul(&h).unwrap();
        let expected = Channel::Kraus(KrausSet::new(2, vec![sh]).unwrap());
        assert!(choi_distance(&composed, &expected) < 1e-12);
    }

    /// Trace preservation survives every conversion.
    #[test]
    fn tp_invariant_under_conversion() {
        let mut rng = ChaCha12Rng::seed_from_u64(35);
        let base = Channel::Kraus(random::random_cptp(3, 5, &mut rng));
        for kind in [
            RepKind::Superop,
            RepKind::Choi,
            RepKind::Kraus,
            RepKind::Chi,
            RepKind::Stinespring,
            RepKind::Osd,
        ] {
            let conv = base.convert_to(kind).unwrap();
            assert!(conv.to_choi().unwrap().tp_deviation() < 1e-9);
        }
    }

    /// Applying p = 1 amplitude damping sends everything to |0⟩⟨0|.
    #[test]
    fn full_amplitude_damping_is_reset() {
        let ch = Channel::Kraus(amplitude_damping_kraus(1.0));
        let rho = ComplexMatrix::from_real(&[&[0.2, 0.3], &[0.3, 0.8]]);
        let out = ch.apply(&rho).unwrap();
        let reset = ComplexMatrix::from_real(&[&[1.0, 0.0], &[0.0, 0.0]]);
        assert!(out.frobenius_distance(&reset).unwrap() < 1e-12);
    }

    #[test]
    fn compose_dimension_mismatch_rejected() {
        let a = Channel::Kraus(KrausSet::new(2, vec![ComplexMatrix::identity(2)]).unwrap());
        let b = Channel::Kraus(KrausSet::new(3, vec![ComplexMatrix::identity(3)]).unwrap());
        assert!(matches!(compose(&a, &b), Err(Error::Dimension(_))));
    }

    #[test]
    fn ncp_channel_refuses_kraus_but_accepts_osd_and_chi() {
        // Choi with spectrum {1.5, 0.5, 0.5, -0.5}: not CP.
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
        let ch = Channel::Choi(b);
        match ch.convert_to(RepKind::Kraus) {
            Err(Error::NotCompletelyPositive { min_eigenvalue }) => {
                assert!((min_eigenvalue + 0.5).abs() < 1e-10)
            }
            other => panic!("expected NotCompletelyPositive, got {other:?}"),
        }
        assert!(ch.convert_to(RepKind::Osd).is_ok());
        assert!(ch.convert_to(RepKind::Chi).is_ok());
        assert!(ch.convert_to(RepKind::Stinespring).is_err());
    }
}
