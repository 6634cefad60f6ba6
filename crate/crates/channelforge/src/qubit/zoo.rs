//! Named qubit channels.
//!
//! A small registry of standard maps — the CP workhorses (depolarizing,
//! phase damping, amplitude damping, unitary conjugation) in Kraus form and
//! the instructive NCP trio (spin reversal, transpose, the pancake map) in
//! Choi form. Entries are looked up by name so the CLI and tests share one
//! catalogue.

use crate::error::{Error, Result};
use crate::mat::ComplexMatrix;
use crate::qubit::{paulis, unital_choi_matrix, ScalingParams};
use crate::rep::choi::ChoiB;
use crate::rep::kraus::{unitarity_deviation, KrausSet};
use crate::rep::Channel;
use crate::tol;

/// Inputs a zoo entry may consume: a probability-like strength and/or an
/// explicit unitary.
#[derive(Debug, Clone, Default)]
pub struct ZooParams {
    pub p: Option<f64>,
    pub unitary: Option<ComplexMatrix>,
}

impl ZooParams {
    fn need_p(&self, name: &str) -> Result<f64> {
        match self.p {
            Some(p) => check_probability(p).map(|()| p),
            None => Err(Error::Invalid(format!(
                "channel '{name}' requires a strength parameter p"
            ))),
        }
    }
}

fn check_probability(p: f64) -> Result<()> {
    if !p.is_finite() || !(0.0..=1.0).contains(&p) {
        return Err(Error::Invalid(format!("p = {p} must lie in [0, 1]")));
    }
    Ok(())
}

/// One named channel in the catalogue.
pub trait ZooEntry: Sync {
    /// Lookup key, e.g. "amplitude-damping".
    fn name(&self) -> &'static str;

    /// Whether `build` requires `ZooParams::p`.
    fn requires_p(&self) -> bool;

    /// Whether `build` requires `ZooParams::unitary`.
    fn requires_unitary(&self) -> bool {
        false
    }

    /// One-line description for listings.
    fn describe(&self) -> &'static str;

    fn build(&self, params: &ZooParams) -> Result<Channel>;
}

struct IdentityEntry;
struct DepolarizingEntry;
struct PhaseDampingEntry;
struct AmplitudeDampingEntry;
struct UnitaryEntry;
struct SpinReversalEntry;
struct TransposeEntry;
struct PancakeNcpEntry;
struct PancakeCpEntry;

impl ZooEntry for IdentityEntry {
    fn name(&self) -> &'static str {
        "identity"
    }
    fn requires_p(&self) -> bool {
        false
    }
    fn describe(&self) -> &'static str {
        "does nothing: E(rho) = rho"
    }
    fn build(&self, _params: &ZooParams) -> Result<Channel> {
        Ok(identity_channel())
    }
}

impl ZooEntry for DepolarizingEntry {
    fn name(&self) -> &'static str {
        "depolarizing"
    }
    fn requires_p(&self) -> bool {
        true
    }
    fn describe(&self) -> &'static str {
        "shrinks the whole Bloch ball by 1-p; p = 1 maps everything to 1/2"
    }
    fn build(&self, params: &ZooParams) -> Result<Channel> {
        depolarizing(params.need_p(self.name())?)
    }
}

impl ZooEntry for PhaseDampingEntry {
    fn name(&self) -> &'static str {
        "phase-damping"
    }
    fn requires_p(&self) -> bool {
        true
    }
    fn describe(&self) -> &'static str {
        "kills off-diagonals by 1-p, keeps populations"
    }
    fn build(&self, params: &ZooParams) -> Result<Channel> {
        phase_damping(params.need_p(self.name())?)
    }
}

impl ZooEntry for AmplitudeDampingEntry {
    fn name(&self) -> &'static str {
        "amplitude-damping"
    }
    fn requires_p(&self) -> bool {
        true
    }
    fn describe(&self) -> &'static str {
        "decays |1><1| toward |0><0| with probability p (non-unital)"
    }
    fn build(&self, params: &ZooParams) -> Result<Channel> {
        amplitude_damping(params.need_p(self.name())?)
    }
}

impl ZooEntry for UnitaryEntry {
    fn name(&self) -> &'static str {
        "unitary"
    }
    fn requires_p(&self) -> bool {
        false
    }
    fn requires_unitary(&self) -> bool {
        true
    }
    fn describe(&self) -> &'static str {
        "conjugation rho -> U rho U-dagger by a supplied unitary"
    }
    fn build(&self, params: &ZooParams) -> Result<Channel> {
        match &params.unitary {
            Some(u) => unitary_channel(u.clone()),
            None => Err(Error::Invalid(
                "channel 'unitary' requires an explicit unitary matrix".into(),
            )),
        }
    }
}

impl ZooEntry for SpinReversalEntry {
    fn name(&self) -> &'static str {
        "spin-reversal"
    }
    fn requires_p(&self) -> bool {
        false
    }
    fn describe(&self) -> &'static str {
        "a -> -a on the Bloch ball; positive but not completely positive"
    }
    fn build(&self, _params: &ZooParams) -> Result<Channel> {
        Ok(spin_reversal())
    }
}

impl ZooEntry for TransposeEntry {
    fn name(&self) -> &'static str {
        "transpose"
    }
    fn requires_p(&self) -> bool {
        false
    }
    fn describe(&self) -> &'static str {
        "rho -> rho^T, i.e. a2 -> -a2; positive but not completely positive"
    }
    fn build(&self, _params: &ZooParams) -> Result<Channel> {
        Ok(transpose_map())
    }
}

impl ZooEntry for PancakeNcpEntry {
    fn name(&self) -> &'static str {
        "pancake-ncp"
    }
    fn requires_p(&self) -> bool {
        false
    }
    fn describe(&self) -> &'static str {
        "flattens the ball to the equatorial disk; positive on states, NCP"
    }
    fn build(&self, _params: &ZooParams) -> Result<Channel> {
        Ok(pancake_ncp())
    }
}

impl ZooEntry for PancakeCpEntry {
    fn name(&self) -> &'static str {
        "pancake-cp"
    }
    fn requires_p(&self) -> bool {
        false
    }
    fn describe(&self) -> &'static str {
        "halved pancake: shrink the disk image by 1/2, which restores CP"
    }
    fn build(&self, _params: &ZooParams) -> Result<Channel> {
        Ok(pancake_cp())
    }
}

static REGISTRY: [&dyn ZooEntry; 9] = [
    &IdentityEntry,
    &DepolarizingEntry,
    &PhaseDampingEntry,
    &AmplitudeDampingEntry,
    &UnitaryEntry,
    &SpinReversalEntry,
    &TransposeEntry,
    &PancakeNcpEntry,
    &PancakeCpEntry,
];

/// Every catalogued channel, in listing order.
pub fn registry() -> &'static [&'static dyn ZooEntry] {
    &REGISTRY
}

/// Look a channel up by its name.
pub fn by_name(name: &str) -> Option<&'static dyn ZooEntry> {
    REGISTRY.iter().copied().find(|e| e.name() == name)
}

/// E(ρ) = ρ as a one-operator Kraus set.
pub fn identity_channel() -> Channel {
    Channel::Kraus(KrausSet::new(2, vec![ComplexMatrix::identity(2)]).expect("valid"))
}

/// Depolarizing channel E(ρ) = (1-p)ρ + p·1/2 with Kraus operators
/// {√(1-3p/4)·1, √(p/4)σ1, √(p/4)σ2, √(p/4)σ3}; scales the whole ball by
/// 1-p.
pub fn depolarizing(p: f64) -> Result<Channel> {
    check_probability(p)?;
    let mut ops = vec![ComplexMatrix::identity(2).scale_re((1.0 - 3.0 * p / 4.0).sqrt())];
    for s in paulis() {
        ops.push(s.scale_re((p / 4.0).sqrt()));
    }
    Ok(Channel::Kraus(KrausSet::new(2, ops).expect("valid")))
}

/// Phase damping E(ρ) = (1-p/2)ρ + (p/2)σ3ρσ3: off-diagonals shrink by
/// 1-p, populations stay put (z = (1-p, 1-p, 1)).
pub fn phase_damping(p: f64) -> Result<Channel> {
    check_probability(p)?;
    let ops = vec![
        ComplexMatrix::identity(2).scale_re((1.0 - p / 2.0).sqrt()),
        pauli_z_scaled((p / 2.0).sqrt()),
    ];
    Ok(Channel::Kraus(KrausSet::new(2, ops).expect("valid")))
}

fn pauli_z_scaled(w: f64) -> ComplexMatrix {
    ComplexMatrix::from_real(&[&[w, 0.0], &[0.0, -w]])
}

/// Amplitude damping with decay probability p:
/// D1 = [[1, 0], [0, √(1-p)]], D2 = [[0, √p], [0, 0]].
pub fn amplitude_damping(p: f64) -> Result<Channel> {
    check_probability(p)?;
    let d1 = ComplexMatrix::from_real(&[&[1.0, 0.0], &[0.0, (1.0 - p).sqrt()]]);
    let d2 = ComplexMatrix::from_real(&[&[0.0, p.sqrt()], &[0.0, 0.0]]);
    Ok(Channel::Kraus(KrausSet::new(2, vec![d1, d2]).expect("valid")))
}

/// Unitary conjugation ρ ↦ UρU† (any dimension). Errors if U is not
/// unitary within tolerance.
pub fn unitary_channel(u: ComplexMatrix) -> Result<Channel> {
    let dev = unitarity_deviation(&u);
    if dev > tol::UNITARITY {
        return Err(Error::NotUnitary { deviation: dev });
    }
    let n = u.rows();
    Ok(Channel::Kraus(KrausSet::new(n, vec![u])?))
}

/// Spin reversal a ↦ -a (z = (-1, -1, -1)): positive but NCP, with Choi
/// spectrum {1, 1, 1, -1}.
pub fn spin_reversal() -> Channel {
    let z = ScalingParams::new(-1.0, -1.0, -1.0).expect("in range");
    Channel::Choi(ChoiB::new(2, unital_choi_matrix(&z)).expect("valid"))
}

/// Transpose ρ ↦ ρᵀ (z = (1, -1, 1)): its Choi matrix is the SWAP
/// operator, with spectrum {1, 1, 1, -1}.
pub fn transpose_map() -> Channel {
    let z = ScalingParams::new(1.0, -1.0, 1.0).expect("in range");
    Channel::Choi(ChoiB::new(2, unital_choi_matrix(&z)).expect("valid"))
}

/// Pancake map (z = (1, 1, 0)): projects the ball onto the equatorial
/// disk. Positive on every state yet NCP — Choi spectrum
/// (3/2, 1/2, 1/2, -1/2).
pub fn pancake_ncp() -> Channel {
    let z = ScalingParams::new(1.0, 1.0, 0.0).expect("in range");
    Channel::Choi(ChoiB::new(2, unital_choi_matrix(&z)).expect("valid"))
}

/// Halved pancake (z = (1/2, 1/2, 0)): shrinking the disk by 1/2 lifts the
/// negative Choi eigenvalue to zero, so this one is CP.
pub fn pancake_cp() -> Channel {
    let z = ScalingParams::new(0.5, 0.5, 0.0).expect("in range");
    Channel::Choi(ChoiB::new(2, unital_choi_matrix(&z)).expect("valid"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eig::hermitian_eig_default;
    use crate::mat::c64;
    use crate::qubit::{affine_from_channel, bloch_from_density, density_from_bloch, BlochVector};

    fn sorted_choi_eigenvalues(ch: &Channel) -> Vec<f64> {
        let b = ch.to_choi().unwrap();
        hermitian_eig_default(b.matrix()).unwrap().eigenvalues().to_vec()
    }

    fn assert_spectrum(ch: &Channel, want: &[f64]) {
        let got = sorted_choi_eigenvalues(ch);
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < 1e-12, "spectrum {got:?} != {want:?}");
        }
    }

    #[test]
    fn registry_is_complete_and_searchable() {
        let names: Vec<&str> = registry().iter().map(|e| e.name()).collect();
        assert_eq!(
            names,
            vec![
                "identity",
                "depolarizing",
                "phase-damping",
                "amplitude-damping",
                "unitary",
                "spin-reversal",
                "transpose",
                "pancake-ncp",
                "pancake-cp"
            ]
        );
        assert!(by_name("amplitude-damping").is_some());
        assert!(by_name("nosuch").is_none());
        for entry in registry() {
            assert!(!entry.describe().is_empty());
        }
    }

    #[test]
    fn entries_reject_missing_or_bad_parameters() {
        let dep = by_name("depolarizing").unwrap();
        assert!(dep.requires_p());
        assert!(matches!(
            dep.build(&ZooParams::default()),
            Err(Error::Invalid(_))
        ));
        assert!(matches!(
            dep.build(&ZooParams { p: Some(1.5), unitary: None }),
            Err(Error::Invalid(_))
        ));
        let uni = by_name("unitary").unwrap();
        assert!(uni.requires_unitary());
        assert!(uni.build(&ZooParams::default()).is_err());
        // p is simply ignored where not required.
        let id = by_name("identity").unwrap();
        assert!(!id.requires_p());
        assert!(id.build(&ZooParams { p: Some(0.3), unitary: None }).is_ok());
    }

    #[test]
    fn probability_range_enforced() {
        for bad in [-0.1, 1.0001, f64::NAN, f64::INFINITY] {
            assert!(depolarizing(bad).is_err());
            assert!(phase_damping(bad).is_err());
            assert!(amplitude_damping(bad).is_err());
        }
        assert!(depolarizing(0.0).is_ok());
        assert!(depolarizing(1.0).is_ok());
    }

    #[test]
    fn depolarizing_shrinks_uniformly() {
        let p = 0.3;
        let aff = affine_from_channel(&depolarizing(p).unwrap()).unwrap();
        for i in 0..3 {
            assert!(aff.shift()[i].abs() < 1e-14);
            for j in 0..3 {
                let want = if i == j { 1.0 - p } else { 0.0 };
                assert!((aff.linear()[i][j] - want).abs() < 1e-13);
            }
        }
        // Full strength sends every state to the maximally mixed one.
        let full = depolarizing(1.0).unwrap();
        let rho = density_from_bloch(&BlochVector::new(0.0, 0.0, 1.0)).unwrap();
        let out = full.apply(&rho).unwrap();
        assert!(
            out.frobenius_distance(&ComplexMatrix::identity(2).scale_re(0.5))
                .unwrap()
                < 1e-14
        );
    }

    #[test]
    fn phase_damping_scales_off_diagonals_only() {
        let p = 0.4;
        let ch = phase_damping(p).unwrap();
        let aff = affine_from_channel(&ch).unwrap();
        assert!((aff.linear()[0][0] - (1.0 - p)).abs() < 1e-14);
        assert!((aff.linear()[1][1] - (1.0 - p)).abs() < 1e-14);
        assert!((aff.linear()[2][2] - 1.0).abs() < 1e-14);

        let rho = ComplexMatrix::from_complex(&[
            &[c64(0.7, 0.0), c64(0.2, -0.1)],
            &[c64(0.2, 0.1), c64(0.3, 0.0)],
        ]);
        let out = ch.apply(&rho).unwrap();
        assert!((out[(0, 0)].re - 0.7).abs() < 1e-14);
        assert!((out[(0, 1)] - c64(0.2, -0.1).scale(1.0 - p)).norm() < 1e-14);

        assert_spectrum(&ch, &[2.0 - p, p, 0.0, 0.0]);
    }

    #[test]
    fn zoo_channels_preserve_trace() {
        let params = ZooParams { p: Some(0.35), unitary: Some(pauli_x_clone()) };
        for entry in registry() {
            let ch = entry.build(&params).unwrap();
            let b = ch.to_choi().unwrap();
            assert!(b.tp_deviation() < 1e-12, "{} not TP", entry.name());
        }
    }

    fn pauli_x_clone() -> ComplexMatrix {
        ComplexMatrix::from_real(&[&[0.0, 1.0], &[1.0, 0.0]])
    }

    #[test]
    fn unitality_pattern() {
        let p = 0.35;
        assert!(depolarizing(p).unwrap().to_choi().unwrap().unital_deviation() < 1e-12);
        assert!(phase_damping(p).unwrap().to_choi().unwrap().unital_deviation() < 1e-12);
        assert!(spin_reversal().to_choi().unwrap().unital_deviation() < 1e-12);
        // Amplitude damping moves the center of the ball: E(1) ≠ 1.
        let dev = amplitude_damping(p).unwrap().to_choi().unwrap().unital_deviation();
        assert!(dev > 0.1);
    }

    #[test]
    fn unitary_channel_validates() {
        assert!(unitary_channel(pauli_x_clone()).is_ok());
        let not_u = ComplexMatrix::from_real(&[&[1.0, 0.0], &[0.0, 2.0]]);
        assert!(matches!(
            unitary_channel(not_u),
            Err(Error::NotUnitary { .. })
        ));
        // Works in dimension 3 as well.
        assert!(unitary_channel(ComplexMatrix::identity(3)).is_ok());
    }

    #[test]
    fn spin_reversal_choi_literal_and_spectrum() {
        let ch = spin_reversal();
        let expected = ComplexMatrix::from_real(&[
            &[0.0, 0.0, 0.0, -1.0],
            &[0.0, 1.0, 0.0, 0.0],
            &[0.0, 0.0, 1.0, 0.0],
            &[-1.0, 0.0, 0.0, 0.0],
        ]);
        assert_eq!(ch.to_choi().unwrap().matrix(), &expected);
        assert_spectrum(&ch, &[1.0, 1.0, 1.0, -1.0]);
        // And it indeed reverses Bloch vectors.
        let rho = density_from_bloch(&BlochVector::new(0.3, -0.2, 0.5)).unwrap();
        let out = bloch_from_density(&ch.apply(&rho).unwrap()).unwrap();
        assert!((out.x + 0.3).abs() < 1e-14);
        assert!((out.y - 0.2).abs() < 1e-14);
        assert!((out.z + 0.5).abs() < 1e-14);
    }

    #[test]
    fn transpose_choi_is_swap() {
        let ch = transpose_map();
        let expected = ComplexMatrix::from_real(&[
            &[1.0, 0.0, 0.0, 0.0],
            &[0.0, 0.0, 1.0, 0.0],
            &[0.0, 1.0, 0.0, 0.0],
            &[0.0, 0.0, 0.0, 1.0],
        ]);
        assert_eq!(ch.to_choi().unwrap().matrix(), &expected);
        // Applying it transposes.
        let rho = ComplexMatrix::from_complex(&[
            &[c64(0.6, 0.0), c64(0.1, 0.2)],
            &[c64(0.1, -0.2), c64(0.4, 0.0)],
        ]);
        let out = ch.apply(&rho).unwrap();
        assert!(out.frobenius_distance(&rho.transpose()).unwrap() < 1e-14);
    }

    #[test]
    fn pancake_choi_literals_and_spectra() {
        let ncp = pancake_ncp();
        let expected = ComplexMatrix::from_real(&[
            &[0.5, 0.0, 0.0, 1.0],
            &[0.0, 0.5, 0.0, 0.0],
            &[0.0, 0.0, 0.5, 0.0],
            &[1.0, 0.0, 0.0, 0.5],
        ]);
        assert_eq!(ncp.to_choi().unwrap().matrix(), &expected);
        assert_spectrum(&ncp, &[1.5, 0.5, 0.5, -0.5]);

        let cp = pancake_cp();
        let expected_cp = ComplexMatrix::from_real(&[
            &[0.5, 0.0, 0.0, 0.5],
            &[0.0, 0.5, 0.0, 0.0],
            &[0.0, 0.0, 0.5, 0.0],
            &[0.5, 0.0, 0.0, 0.5],
        ]);
        assert_eq!(cp.to_choi().unwrap().matrix(), &expected_cp);
        assert_spectrum(&cp, &[1.0, 0.5, 0.5, 0.0]);
    }

    /// The pancake flattens the poles onto the center of the disk.
    #[test]
    fn pancake_flattens_poles() {
        let pole = density_from_bloch(&BlochVector::new(0.0, 0.0, 1.0)).unwrap();
        let out = bloch_from_density(&pancake_ncp().apply(&pole).unwrap()).unwrap();
        assert!(out.norm() < 1e-14);
        // Equatorial states are fixed points.
        let eq = density_from_bloch(&BlochVector::new(0.6, -0.8, 0.0)).unwrap();
        let out = bloch_from_density(&pancake_ncp().apply(&eq).unwrap()).unwrap();
        assert!((out.x - 0.6).abs() < 1e-14 && (out.y + 0.8).abs() < 1e-14);
    }
}
