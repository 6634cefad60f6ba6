//! Qubit geometry: Bloch vectors, affine channel action, unital Choi
//! spectra.
//!
//! A qubit state is ρ = ½(1 + a·σ) with Bloch vector a_i = tr(ρσ_i); states
//! fill the closed unit ball, pure states its surface. A trace-preserving
//! qubit map acts on the ball affinely, a ↦ T a + t, and for diagonal T =
//! diag(z1, z2, z3) with t = 0 the Choi eigenvalues come in the closed form
//! ½(1 ± z_i ± z_j ∓ …) over even sign patterns — the workhorse for mapping
//! the CP boundary.

pub mod image;
pub mod zoo;

use crate::error::{Error, Result};
use crate::mat::{c64, vec_op, Complex64, ComplexMatrix};
use crate::rep::choi::ChoiB;
use crate::rep::superop::SuperopA;
use crate::rep::{Channel, Representation};
use crate::tol;

/// σ1 (σ_x).
pub fn pauli_x() -> ComplexMatrix {
    ComplexMatrix::from_real(&[&[0.0, 1.0], &[1.0, 0.0]])
}

/// σ2 (σ_y).
pub fn pauli_y() -> ComplexMatrix {
    ComplexMatrix::from_complex(&[
        &[Complex64::ZERO, c64(0.0, -1.0)],
        &[c64(0.0, 1.0), Complex64::ZERO],
    ])
}

/// σ3 (σ_z).
pub fn pauli_z() -> ComplexMatrix {
    ComplexMatrix::from_real(&[&[1.0, 0.0], &[0.0, -1.0]])
}

/// The three Pauli matrices in axis order.
pub fn paulis() -> [ComplexMatrix; 3] {
    [pauli_x(), pauli_y(), pauli_z()]
}

/// Point of the Bloch ball.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    pub fn norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }
}

/// Bloch vector of a qubit density matrix: a_i = tr(ρσ_i).
///
/// Validates that ρ is 2×2, Hermitian and unit trace (within the default
/// tolerances); positivity is *not* required here so that outputs of NCP
/// maps can still be read off.
pub fn bloch_from_density(rho: &ComplexMatrix) -> Result<BlochVector> {
    if rho.rows() != 2 || rho.cols() != 2 {
        return Err(Error::Dimension(format!(
            "Bloch vector needs a 2x2 matrix, got {}x{}",
            rho.rows(),
            rho.cols()
        )));
    }
    let herm = rho.hermiticity_deviation();
    if herm > tol::HERMITICITY {
        return Err(Error::NotHermitian {
            deviation: herm,
            tolerance: tol::HERMITICITY,
        });
    }
    let tr = rho.trace();
    if (tr - Complex64::ONE).norm() > 1e-9 {
        return Err(Error::Invalid(format!(
            "density matrix must have unit trace, got {} + {}i",
            tr.re, tr.im
        )));
    }
    let [sx, sy, sz] = paulis();
    Ok(BlochVector {
        x: rho.matmul(&sx)?.trace().re,
        y: rho.matmul(&sy)?.trace().re,
        z: rho.matmul(&sz)?.trace().re,
    })
}

/// Density matrix of a Bloch vector: ρ = ½(1 + a·σ). Errors outside the
/// closed unit ball (within PSD slack).
pub fn density_from_bloch(a: &BlochVector) -> Result<ComplexMatrix> {
    if !(a.x.is_finite() && a.y.is_finite() && a.z.is_finite()) {
        return Err(Error::Invalid("Bloch vector entries must be finite".into()));
    }
    if a.norm() > 1.0 + tol::PSD {
        return Err(Error::Invalid(format!(
            "Bloch vector of norm {} lies outside the unit ball",
            a.norm()
        )));
    }
    let [sx, sy, sz] = paulis();
    let mut rho = ComplexMatrix::identity(2);
    rho = rho.add(&sx.scale_re(a.x))?;
    rho = rho.add(&sy.scale_re(a.y))?;
    rho = rho.add(&sz.scale_re(a.z))?;
    Ok(rho.scale_re(0.5))
}

/// Diagonal scaling parameters (z1, z2, z3) of a unital qubit map aligned
/// with the Pauli axes: a_i ↦ z_i a_i.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScalingParams {
    pub z1: f64,
    pub z2: f64,
    pub z3: f64,
}

impl ScalingParams {
    /// Each z_i must lie in [-1, 1] (ball contraction along every axis).
    pub fn new(z1: f64, z2: f64, z3: f64) -> Result<Self> {
        for (name, v) in [("z1", z1), ("z2", z2), ("z3", z3)] {
            if !v.is_finite() || v.abs() > 1.0 + 1e-12 {
                return Err(Error::Invalid(format!(
                    "scaling parameter {name} = {v} must lie in [-1, 1]"
                )));
            }
        }
        Ok(Self { z1, z2, z3 })
    }
}

/// Choi matrix of the diagonal unital map a ↦ (z1 a1, z2 a2, z3 a3):
///
/// ```text
///      ½ [ 1+z3    0       0     z1+z2 ]
///        [ 0      1-z3   z1-z2    0    ]
///        [ 0      z1-z2  1-z3     0    ]
///        [ z1+z2   0       0     1+z3  ]
/// ```
pub fn unital_choi_matrix(z: &ScalingParams) -> ComplexMatrix {
    let (z1, z2, z3) = (z.z1, z.z2, z.z3);
    ComplexMatrix::from_real(&[
        &[1.0 + z3, 0.0, 0.0, z1 + z2],
        &[0.0, 1.0 - z3, z1 - z2, 0.0],
        &[0.0, z1 - z2, 1.0 - z3, 0.0],
        &[z1 + z2, 0.0, 0.0, 1.0 + z3],
    ])
    .scale_re(0.5)
}

/// Closed-form Choi eigenvalues of the diagonal unital map, in the fixed
/// even-sign-pattern order [+++, +--, -+-, --+]:
/// ½(1 + ε1 z1 + ε2 z2 + ε3 z3) with ε1ε2ε3 = +1.
///
/// The map is CP iff all four are non-negative.
pub fn unital_choi_eigenvalues(z: &ScalingParams) -> [f64; 4] {
    let (z1, z2, z3) = (z.z1, z.z2, z.z3);
    [
        0.5 * (1.0 + z1 + z2 + z3),
        0.5 * (1.0 + z1 - z2 - z3),
        0.5 * (1.0 - z1 + z2 - z3),
        0.5 * (1.0 - z1 - z2 + z3),
    ]
}

/// Affine action of a qubit map on the Bloch ball: a ↦ T a + t.
///
/// `linear` is the real 3×3 T, `shift` the real translation t. The pair
/// captures exactly the Hermiticity-preserving, trace-preserving part of a
/// qubit map; as a [`Representation`] it acts by the unique linear extension
/// of the ball action.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineQubit {
    linear: [[f64; 3]; 3],
    shift: [f64; 3],
}

impl AffineQubit {
    pub fn new(linear: [[f64; 3]; 3], shift: [f64; 3]) -> Result<Self> {
        let finite = linear.iter().flatten().all(|v| v.is_finite())
            && shift.iter().all(|v| v.is_finite());
        if !finite {
            return Err(Error::Invalid("affine parameters must be finite".into()));
        }
        Ok(Self { linear, shift })
    }

    /// Purely diagonal unital map from scaling parameters.
    pub fn from_scaling(z: &ScalingParams) -> Self {
        Self {
            linear: [[z.z1, 0.0, 0.0], [0.0, z.z2, 0.0], [0.0, 0.0, z.z3]],
            shift: [0.0; 3],
        }
    }

    pub fn linear(&self) -> &[[f64; 3]; 3] {
        &self.linear
    }

    pub fn shift(&self) -> &[f64; 3] {
        &self.shift
    }

    /// T a + t.
    pub fn map_bloch(&self, a: &BlochVector) -> BlochVector {
        let v = [a.x, a.y, a.z];
        let mut out = [0.0f64; 3];
        for i in 0..3 {
            out[i] = self.shift[i];
            for j in 0..3 {
                out[i] += self.linear[i][j] * v[j];
            }
        }
        BlochVector::new(out[0], out[1], out[2])
    }

    /// Matrix images of the operator basis {1, σ1, σ2, σ3}:
    /// E(1) = 1 + t·σ (trace preservation pins the identity part),
    /// E(σ_j) = Σ_i T_ij σ_i.
    fn basis_images(&self) -> (ComplexMatrix, [ComplexMatrix; 3]) {
        let [sx, sy, sz] = paulis();
        let sigma = [sx, sy, sz];
        let mut e_id = ComplexMatrix::identity(2);
        for i in 0..3 {
            e_id = e_id
                .add(&sigma[i].scale_re(self.shift[i]))
                .expect("shapes agree");
        }
        let mut e_sigma = [
            ComplexMatrix::zeros(2, 2),
            ComplexMatrix::zeros(2, 2),
            ComplexMatrix::zeros(2, 2),
        ];
        for j in 0..3 {
            for i in 0..3 {
                e_sigma[j] = e_sigma[j]
                    .add(&sigma[i].scale_re(self.linear[i][j]))
                    .expect("shapes agree");
            }
        }
        (e_id, e_sigma)
    }

    /// A-form of the linear extension: the column for input matrix unit
    /// E_ij is |E(E_ij)⟩⟩, with E_00 = ½(1+σ3), E_01 = ½(σ1+iσ2),
    /// E_10 = ½(σ1-iσ2), E_11 = ½(1-σ3).
    pub fn to_superop(&self) -> SuperopA {
        let (e_id, e_sigma) = self.basis_images();
        let half = c64(0.5, 0.0);
        let i_half = c64(0.0, 0.5);
        let combine = |a: &ComplexMatrix, wa: Complex64, b: &ComplexMatrix, wb: Complex64| {
            a.scale(wa).add(&b.scale(wb)).expect("shapes agree")
        };
        let images = [
            combine(&e_id, half, &e_sigma[2], half),     // E(E_00)
            combine(&e_sigma[0], half, &e_sigma[1], i_half), // E(E_01)
            combine(&e_sigma[0], half, &e_sigma[1], -i_half), // E(E_10)
            combine(&e_id, half, &e_sigma[2], -half),    // E(E_11)
        ];
        let cols: Vec<ComplexMatrix> = images.iter().map(vec_op).collect();
        let a = ComplexMatrix::from_fn(4, 4, |r, c| cols[c][(r, 0)]);
        SuperopA::new(2, a).expect("4x4 by construction")
    }
}

impl Representation for AffineQubit {
    fn dim(&self) -> usize {
        2
    }

    fn kind_name(&self) -> &'static str {
        "affine-qubit"
    }

    fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.to_superop().apply(rho)
    }

    fn to_choi(&self) -> Result<ChoiB> {
        self.to_superop().to_choi()
    }
}

/// Affine (T, t) of a qubit channel: t_i = ½ tr(σ_i E(1)),
/// T_ij = ½ tr(σ_i E(σ_j)). Errors on non-qubit channels.
pub fn affine_from_channel(ch: &Channel) -> Result<AffineQubit> {
    if ch.dim() != 2 {
        return Err(Error::Dimension(format!(
            "affine reduction is for qubit channels, got dimension {}",
            ch.dim()
        )));
    }
    let sigma = paulis();
    let e_id = ch.apply(&ComplexMatrix::identity(2))?;
    let mut shift = [0.0f64; 3];
    for i in 0..3 {
        shift[i] = 0.5 * sigma[i].matmul(&e_id)?.trace().re;
    }
    let mut linear = [[0.0f64; 3]; 3];
    for j in 0..3 {
        let e_s = ch.apply(&sigma[j])?;
        for i in 0..3 {
            linear[i][j] = 0.5 * sigma[i].matmul(&e_s)?.trace().re;
        }
    }
    AffineQubit::new(linear, shift)
}

/// Wrap affine data as a channel.
pub fn channel_from_affine(aff: AffineQubit) -> Channel {
    Channel::AffineQubit(aff)
}
